#include "turanlab/constructions.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "turanlab/error.hpp"

namespace turanlab {

namespace {

void fill_iterated(std::size_t offset, std::size_t n, std::vector<Triple>& edges) {
  if (n < 3) return;
  const auto [s1, s2, s3] = iterated_blowup_parts(n);
  const auto o1 = offset, o2 = offset + s1, o3 = offset + s1 + s2;
  for (std::size_t a = o1; a < o2; ++a) {
    for (std::size_t b = o2; b < o3; ++b) {
      for (std::size_t c = o3; c < offset + n; ++c) {
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c));
      }
    }
  }
  fill_iterated(o1, s1, edges);
  fill_iterated(o2, s2, edges);
  fill_iterated(o3, s3, edges);
}

std::uint64_t e_n_memo(std::size_t n, std::unordered_map<std::size_t, std::uint64_t>& memo) {
  if (n < 3) return 0;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  const auto [s1, s2, s3] = iterated_blowup_parts(n);
  const std::uint64_t value = std::uint64_t{s1} * s2 * s3 + e_n_memo(s1, memo) +
                              e_n_memo(s2, memo) + e_n_memo(s3, memo);
  memo.emplace(n, value);
  return value;
}

void require_ab(std::int64_t a, std::int64_t b, const char* what) {
  if (!(b > 0 && a >= b)) throw InvalidArgument(std::string(what) + ": requires a >= b > 0");
}

}  // namespace

std::array<std::size_t, 3> iterated_blowup_parts(std::size_t n) { return {n / 3, (n + 1) / 3, (n + 2) / 3}; }

std::uint64_t e_n_edge_count(std::size_t n) {
  std::unordered_map<std::size_t, std::uint64_t> memo;
  return e_n_memo(n, memo);
}

Hypergraph3 iterated_blowup(std::size_t n, std::uint64_t max_edges) {
  if (n == 0) throw InvalidArgument("iterated_blowup: n must be positive");
  const auto count = e_n_edge_count(n);
  if (count > max_edges) {
    throw ResourceLimit("iterated_blowup: E_" + std::to_string(n) + " has " + std::to_string(count) +
                        " edges, above the cap of " + std::to_string(max_edges));
  }
  std::vector<Triple> edges;
  edges.reserve(count);
  fill_iterated(0, n, edges);
  return Hypergraph3(n, std::move(edges));
}

Rational64 max_xy_sum_bound(std::int64_t a, std::int64_t b) {
  require_ab(a, b, "max_xy_sum_bound");
  const auto q = a / b;
  const auto r = a - b * q;
  return Rational64(q * b * b, 4) + Rational64(r * r, 4);
}

std::int64_t max_xy_sum_exact(std::int64_t a, std::int64_t b) {
  require_ab(a, b, "max_xy_sum_exact");
  if (a > kMaxXySumExactLimit) {
    throw UnsupportedSize("max_xy_sum_exact: a is limited to " + std::to_string(kMaxXySumExactLimit));
  }
  // Best split of one block of size s, by trying every x.
  std::vector<std::int64_t> block(static_cast<std::size_t>(b) + 1, 0);
  for (std::int64_t s = 0; s <= b; ++s) {
    for (std::int64_t x = 0; x <= s; ++x) {
      block[static_cast<std::size_t>(s)] = std::max(block[static_cast<std::size_t>(s)], x * (s - x));
    }
  }
  // Every multiset of block sizes (non-increasing parts, each <= b) summing to a.
  std::int64_t best = 0;
  auto walk = [&](auto&& self, std::int64_t remaining, std::int64_t max_part, std::int64_t acc) -> void {
    if (remaining == 0) {
      best = std::max(best, acc);
      return;
    }
    for (std::int64_t s = std::min(max_part, remaining); s >= 1; --s) {
      self(self, remaining - s, s, acc + block[static_cast<std::size_t>(s)]);
    }
  };
  walk(walk, a, b, 0);
  return best;
}

}  // namespace turanlab
