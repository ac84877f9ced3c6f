#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include <boost/rational.hpp>

#include "turanlab/hypergraph.hpp"

namespace turanlab {

using Rational64 = boost::rational<std::int64_t>;

/// Default cap on materialised edges; the CLI overrides it from TURANLAB_MAX_EDGES.
inline constexpr std::uint64_t kDefaultMaxEdges = 20'000'000;

/// Part sizes (floor(n/3), floor((n+1)/3), floor((n+2)/3)) of the iterated blow-up.
std::array<std::size_t, 3> iterated_blowup_parts(std::size_t n);

/// E_n: all triples with one vertex in each part plus a recursive copy inside
/// each part. Parts occupy contiguous index ranges, V1 first. Throws
/// ResourceLimit if the edge count exceeds max_edges.
Hypergraph3 iterated_blowup(std::size_t n, std::uint64_t max_edges = kDefaultMaxEdges);

/// |E_n| by the recursion, without materialising.
std::uint64_t e_n_edge_count(std::size_t n);

/// floor(a/b) * b^2/4 + (a - b*floor(a/b))^2 / 4, exactly. Requires a >= b > 0.
Rational64 max_xy_sum_bound(std::int64_t a, std::int64_t b);

inline constexpr std::int64_t kMaxXySumExactLimit = 24;

/// Exhaustive maximum of sum x_i*y_i over non-negative blocks with
/// sum (x_i + y_i) = a and every x_j + y_j <= b. Requires a >= b > 0 and a <= 24.
std::int64_t max_xy_sum_exact(std::int64_t a, std::int64_t b);

}  // namespace turanlab
