#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "turanlab/hypergraph.hpp"

namespace turanlab {

/// Splits a line-oriented text file into whitespace-separated fields,
/// skipping blank lines and '#' comments.
class LineReader {
 public:
  LineReader(std::istream& in, std::string context) : in_(in), context_(std::move(context)) {}

  std::optional<std::vector<std::string>> next();
  /// "<context> line <k>" for error messages.
  std::string where() const;

 private:
  std::istream& in_;
  std::string context_;
  std::size_t line_no_ = 0;
};

std::size_t parse_count(const std::string& field, const std::string& what);
Vertex parse_vertex(const std::string& field, std::size_t vertex_count, const std::string& where);

}  // namespace turanlab
