#include "turanlab/tournament.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "turanlab/error.hpp"
#include "turanlab/text_util.hpp"

namespace turanlab {

namespace {

std::uint64_t choose2(std::uint64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }
std::uint64_t choose3(std::uint64_t x) { return x < 3 ? 0 : x * (x - 1) * (x - 2) / 6; }

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Tournament::Tournament(std::size_t vertex_count)
    : n_(vertex_count), words_((vertex_count + 63) / 64), rows_(vertex_count * words_, 0) {
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  }
}

void Tournament::set_arc(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_ || u == v) throw InvalidArgument("tournament: invalid arc");
  rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

Tournament Tournament::circulant(std::size_t n, const std::vector<std::size_t>& steps) {
  std::vector<int> seen(n, 0);
  for (auto s : steps) {
    if (s == 0 || s >= n) throw InvalidArgument("circulant: step out of range");
    ++seen[s];
    ++seen[n - s];
  }
  for (std::size_t r = 1; r < n; ++r) {
    if (seen[r] != 1) throw InvalidArgument("circulant: steps do not define a tournament");
  }
  Tournament t(n);
  for (Vertex u = 0; u < n; ++u) {
    for (auto s : steps) t.set_arc(u, static_cast<Vertex>((u + s) % n));
  }
  return t;
}

Tournament Tournament::quadratic_residue(std::size_t p) {
  if (!is_prime(p) || p % 4 != 3) {
    throw InvalidArgument("quadratic_residue: p must be a prime congruent to 3 mod 4");
  }
  std::vector<std::size_t> squares;
  for (std::size_t x = 1; x < p; ++x) squares.push_back(x * x % p);
  std::sort(squares.begin(), squares.end());
  squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
  return circulant(p, squares);
}

Tournament Tournament::from_code(std::size_t n, std::uint64_t code) {
  if (n * (n - (n ? 1 : 0)) / 2 > 64) throw UnsupportedSize("tournament code needs n <= 11");
  Tournament t(n);
  unsigned bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((code >> bit) & 1U) {
        t.set_arc(u, v);
      } else {
        t.set_arc(v, u);
      }
    }
  }
  return t;
}

Tournament Tournament::from_arcs(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& arcs) {
  Tournament t(n);
  std::vector<char> seen(n * n, 0);
  for (auto [u, v] : arcs) {
    if (u >= n || v >= n || u == v) throw InvalidArgument("tournament: invalid arc");
    auto [a, b] = make_pair_sorted(u, v);
    if (seen[a * n + b]) throw InvalidArgument("tournament: pair oriented twice");
    seen[a * n + b] = 1;
    t.set_arc(u, v);
  }
  if (arcs.size() != n * (n - (n ? 1 : 0)) / 2) throw InvalidArgument("tournament: missing arcs");
  return t;
}

std::size_t Tournament::out_degree(Vertex v) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(rows_[v * words_ + w]));
  return d;
}

std::vector<Vertex> Tournament::out_neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < n_; ++u) {
    if (u != v && beats(v, u)) out.push_back(u);
  }
  return out;
}

std::vector<Vertex> Tournament::in_neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < n_; ++u) {
    if (u != v && beats(u, v)) out.push_back(u);
  }
  return out;
}

bool Tournament::is_cyclic(Vertex a, Vertex b, Vertex c) const {
  if (!is_three_set(a, b, c)) return false;
  return (beats(a, b) && beats(b, c) && beats(c, a)) || (beats(b, a) && beats(c, b) && beats(a, c));
}

Tournament Tournament::induced(const std::vector<Vertex>& vertices) const {
  Tournament t(vertices.size());
  for (Vertex i = 0; i < vertices.size(); ++i) {
    for (Vertex j = i + 1; j < vertices.size(); ++j) {
      if (beats(vertices[i], vertices[j])) {
        t.set_arc(i, j);
      } else {
        t.set_arc(j, i);
      }
    }
  }
  return t;
}

std::uint64_t Tournament::code() const {
  if (n_ > 11) throw UnsupportedSize("tournament code needs n <= 11");
  std::uint64_t code = 0;
  unsigned bit = 0;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v, ++bit) {
      if (beats(u, v)) code |= std::uint64_t{1} << bit;
    }
  }
  return code;
}

std::uint64_t cyclic_triangle_count_by_scores(const Tournament& t) {
  // Every transitive triple has exactly one source and one sink, so
  // 2 * C(n,3) - sum_v [C(d+,2) + C(d-,2)] counts each cyclic triple twice.
  const auto n = t.vertex_count();
  std::uint64_t transitive_twice = 0;
  for (Vertex v = 0; v < n; ++v) {
    transitive_twice += choose2(t.out_degree(v)) + choose2(t.in_degree(v));
  }
  const std::uint64_t twice = 2 * choose3(n) - transitive_twice;
  if (twice % 2 != 0) throw InternalInconsistency("cyclic_triangle_count: odd score sum");
  return twice / 2;
}

std::uint64_t cyclic_triangle_count_by_enumeration(const Tournament& t) {
  const auto n = static_cast<Vertex>(t.vertex_count());
  std::uint64_t count = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        if (t.is_cyclic(a, b, c)) ++count;
      }
    }
  }
  return count;
}

std::uint64_t cyclic_triangle_count(const Tournament& t) {
  const auto by_scores = cyclic_triangle_count_by_scores(t);
  const auto by_enum = cyclic_triangle_count_by_enumeration(t);
  if (by_scores != by_enum) {
    throw InternalInconsistency("cyclic_triangle_count: score formula gives " +
                                std::to_string(by_scores) + ", enumeration gives " +
                                std::to_string(by_enum));
  }
  return by_enum;
}

std::uint64_t kendall_smith_bound(std::uint64_t n) {
  if (n % 2 == 1) return (n * n * n - n) / 24;
  return (n * n * n - 4 * n) / 24;
}

Hypergraph3 cyclic_hypergraph(const Tournament& t) {
  const auto n = static_cast<Vertex>(t.vertex_count());
  std::vector<Triple> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        if (t.is_cyclic(a, b, c)) edges.emplace_back(a, b, c);
      }
    }
  }
  return Hypergraph3(n, std::move(edges));
}

std::vector<Vertex> near_regular_set(const Tournament& t, double eps2) {
  const auto n = static_cast<double>(t.vertex_count());
  const double centre = (n - 1) / 2;
  const double lo = centre - eps2 * n;
  const double hi = centre + eps2 * n;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    const auto dout = static_cast<double>(t.out_degree(v));
    const auto din = static_cast<double>(t.in_degree(v));
    if (lo < dout && dout < hi && lo < din && din < hi) out.push_back(v);
  }
  return out;
}

std::size_t pair_cyclic_count(const Tournament& t, Vertex u, Vertex v) {
  std::size_t count = 0;
  for (Vertex w = 0; w < t.vertex_count(); ++w) {
    if (t.is_cyclic(u, v, w)) ++count;
  }
  return count;
}

std::vector<Pair> low_coverage_pairs(const Tournament& t, double eps2) {
  const double cap = eps2 * static_cast<double>(t.vertex_count());
  std::vector<Pair> out;
  for (Vertex u = 0; u < t.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < t.vertex_count(); ++v) {
      if (static_cast<double>(pair_cyclic_count(t, u, v)) <= cap) out.emplace_back(u, v);
    }
  }
  return out;
}

Tournament d5() {
  // 1-based: 1->2, 1->3, 4->1, 5->1, 2->3, 2->4, 2->5, 3->4, 5->3, 5->4
  return Tournament::from_arcs(5, {{0, 1}, {0, 2}, {3, 0}, {4, 0}, {1, 2},
                                   {1, 3}, {1, 4}, {2, 3}, {4, 2}, {4, 3}});
}

std::vector<Tournament> t5_family() {
  // C5-minus on 0..4: {0,1,2}, {1,2,3}, {2,3,4}, {3,4,0}.
  static constexpr std::array<std::array<Vertex, 3>, 4> kPattern{
      {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}}};
  std::vector<Tournament> out;
  for (std::uint64_t code = 0; code < 1024; ++code) {
    Tournament t = Tournament::from_code(5, code);
    std::array<Vertex, 5> image{0, 1, 2, 3, 4};
    bool found = false;
    do {
      found = std::all_of(kPattern.begin(), kPattern.end(), [&](const auto& e) {
        return t.is_cyclic(image[e[0]], image[e[1]], image[e[2]]);
      });
    } while (!found && std::next_permutation(image.begin(), image.end()));
    if (found) out.push_back(std::move(t));
  }
  return out;
}

std::uint64_t count_induced(const Tournament& t, const Tournament& d) {
  const auto k = d.vertex_count();
  const auto n = t.vertex_count();
  if (k > n) return 0;
  if (k > 8) throw UnsupportedSize("count_induced: pattern tournaments are limited to 8 vertices");

  auto pair_mask = [k](auto beats) {
    std::uint32_t mask = 0;
    unsigned bit = 0;
    for (Vertex i = 0; i < k; ++i) {
      for (Vertex j = i + 1; j < k; ++j, ++bit) {
        if (beats(i, j)) mask |= std::uint32_t{1} << bit;
      }
    }
    return mask;
  };

  std::unordered_set<std::uint32_t> images;
  std::vector<Vertex> perm(k);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    images.insert(pair_mask([&](Vertex i, Vertex j) { return d.beats(perm[i], perm[j]); }));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::uint64_t count = 0;
  std::vector<Vertex> subset(k);
  std::iota(subset.begin(), subset.end(), Vertex{0});
  while (true) {
    if (images.contains(pair_mask([&](Vertex i, Vertex j) { return t.beats(subset[i], subset[j]); }))) {
      ++count;
    }
    // Next k-combination of 0..n-1 in lexicographic order.
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return count;
}

Tournament read_tournament(std::istream& in) {
  LineReader reader(in, "tournament");
  auto header = reader.next();
  if (!header || header->size() != 2 || (*header)[0] != "n") {
    throw InvalidArgument("tournament: expected header line 'n <count>'");
  }
  const auto n = parse_count((*header)[1], "tournament: vertex count");
  std::vector<std::pair<Vertex, Vertex>> arcs;
  while (auto fields = reader.next()) {
    if (fields->size() != 3 || (*fields)[0] != "a") {
      throw InvalidArgument(reader.where() + ": expected 'a u v'");
    }
    arcs.emplace_back(parse_vertex((*fields)[1], n, reader.where()),
                      parse_vertex((*fields)[2], n, reader.where()));
  }
  return Tournament::from_arcs(n, arcs);
}

void write_tournament(std::ostream& out, const Tournament& t) {
  out << "n " << t.vertex_count() << '\n';
  for (Vertex u = 0; u < t.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < t.vertex_count(); ++v) {
      if (t.beats(u, v)) {
        out << "a " << u << ' ' << v << '\n';
      } else {
        out << "a " << v << ' ' << u << '\n';
      }
    }
  }
}

std::string format_tournament(const Tournament& t) {
  std::ostringstream out;
  write_tournament(out, t);
  return out.str();
}

Tournament parse_tournament(const std::string& text) {
  std::istringstream in(text);
  return read_tournament(in);
}

}  // namespace turanlab
