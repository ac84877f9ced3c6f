#pragma once

#include <iosfwd>
#include <string>

#include "turanlab/hypergraph.hpp"

namespace turanlab {

/// Text format: a header line "n <count>" followed by one "e a b c" line per
/// edge. The writer emits each triple ascending and the lines in
/// lexicographic order; the reader accepts any order and rejects duplicates.
/// Blank lines and lines starting with '#' are ignored.
Hypergraph3 read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph3& h);

Hypergraph3 parse_hypergraph(const std::string& text);
std::string format_hypergraph(const Hypergraph3& h);

}  // namespace turanlab
