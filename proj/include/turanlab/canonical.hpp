#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "turanlab/hypergraph.hpp"

namespace turanlab {

inline constexpr std::size_t kCanonicalDefaultLimit = 9;
/// C(10,3) = 120 triple ranks still fit a 128-bit mask.
inline constexpr std::size_t kCanonicalHardLimit = 10;

/// Byte string equal for two hypergraphs iff they are isomorphic.
///
/// Brute-force minimisation over the vertex permutations that respect the
/// degree partition. Throws UnsupportedSize when n exceeds `limit`.
std::string canonical_form(const Hypergraph3& h, std::size_t limit = kCanonicalDefaultLimit);

/// Canonical form of several edge sets over one vertex range, relabeled
/// simultaneously (an edge-coloured hypergraph).
std::string canonical_form_layers(std::size_t vertex_count, std::span<const std::vector<Triple>> layers,
                                  std::size_t limit = kCanonicalDefaultLimit);

/// Hex rendering of a canonical string, for logs and CLI output.
std::string to_hex(const std::string& bytes);

}  // namespace turanlab
