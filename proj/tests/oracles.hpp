#pragma once

// Brute-force reference implementations. Each one is written directly from
// the definition and shares no code path with the routine it checks.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "turanlab/hypergraph.hpp"
#include "turanlab/tournament.hpp"

namespace oracle {

using turanlab::Hypergraph3;
using turanlab::Tournament;
using turanlab::Triple;
using turanlab::Vertex;

inline bool window_edge(const Hypergraph3& h, Vertex a, Vertex b, Vertex c) {
  return a != b && b != c && a != c && h.contains(Triple(a, b, c));
}

/// Some v0..v_{l-1} with {v_i, v_{i+1}, v_{i+2 mod l}} an edge for i = 0..l-2.
inline bool cycle_minus_one_exists(const Hypergraph3& h, std::size_t l) {
  const auto n = static_cast<Vertex>(h.vertex_count());
  std::vector<Vertex> seq(l);
  auto extend = [&](auto&& self, std::size_t i) -> bool {
    if (i == l) return window_edge(h, seq[l - 2], seq[l - 1], seq[0]);
    for (Vertex x = 0; x < n; ++x) {
      seq[i] = x;
      if (i >= 2 && !window_edge(h, seq[i - 2], seq[i - 1], x)) continue;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  return extend(extend, 0);
}

/// Closed walk: all l windows mod l are edges.
inline bool pseudo_cycle_exists(const Hypergraph3& h, std::size_t l) {
  const auto n = static_cast<Vertex>(h.vertex_count());
  std::vector<Vertex> seq(l);
  auto extend = [&](auto&& self, std::size_t i) -> bool {
    if (i == l) return window_edge(h, seq[l - 2], seq[l - 1], seq[0]) && window_edge(h, seq[l - 1], seq[0], seq[1]);
    for (Vertex x = 0; x < n; ++x) {
      seq[i] = x;
      if (i >= 2 && !window_edge(h, seq[i - 2], seq[i - 1], x)) continue;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  return extend(extend, 0);
}

/// Shortest bottle size (k + 2 entries, k >= 4) up to max_size, by enumeration.
inline std::optional<std::size_t> shortest_bottle(const Hypergraph3& h, std::size_t max_size) {
  const auto n = static_cast<Vertex>(h.vertex_count());
  for (std::size_t size = 6; size <= max_size; ++size) {
    std::vector<Vertex> seq(size);
    auto extend = [&](auto&& self, std::size_t i) -> bool {
      if (i == size - 2) {
        seq[size - 2] = seq[1];
        seq[size - 1] = seq[0];
        return window_edge(h, seq[size - 4], seq[size - 3], seq[size - 2]) &&
               window_edge(h, seq[size - 3], seq[size - 2], seq[size - 1]);
      }
      for (Vertex x = 0; x < n; ++x) {
        seq[i] = x;
        if (i >= 2 && !window_edge(h, seq[i - 2], seq[i - 1], x)) continue;
        if (self(self, i + 1)) return true;
      }
      return false;
    };
    if (extend(extend, 0)) return size;
  }
  return std::nullopt;
}

/// Some tournament on n <= 6 vertices makes every edge cyclic (all 2^C(n,2) tried).
inline bool orientable_by_enumeration(const Hypergraph3& h) {
  const auto n = h.vertex_count();
  const std::size_t pairs = n * (n - 1) / 2;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    const auto t = Tournament::from_code(n, code);
    bool all = true;
    for (const auto& e : h.edges()) {
      const bool forward = t.beats(e[0], e[1]) && t.beats(e[1], e[2]) && t.beats(e[2], e[0]);
      const bool backward = t.beats(e[1], e[0]) && t.beats(e[2], e[1]) && t.beats(e[0], e[2]);
      if (!forward && !backward) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

/// Directed 3-cycles counted over ordered triples (each counted three times).
inline std::uint64_t cyclic_triangles(const Tournament& t) {
  const auto n = static_cast<Vertex>(t.vertex_count());
  std::uint64_t ordered = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      for (Vertex c = 0; c < n; ++c) {
        if (a != b && b != c && a != c && t.beats(a, b) && t.beats(b, c) && t.beats(c, a)) ++ordered;
      }
    }
  }
  return ordered / 3;
}

inline Hypergraph3 from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Triple> edges;
  std::size_t k = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c, ++k) {
        if ((mask >> k) & 1U) edges.emplace_back(a, b, c);
      }
    }
  }
  return Hypergraph3(n, std::move(edges));
}

inline std::size_t triple_count(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

inline Hypergraph3 random_hypergraph(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<Triple> edges;
  std::bernoulli_distribution coin(p);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        if (coin(rng)) edges.emplace_back(a, b, c);
      }
    }
  }
  return Hypergraph3(n, std::move(edges));
}

inline Tournament random_tournament(std::size_t n, std::mt19937_64& rng) {
  Tournament t(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng() & 1U) t.set_arc(v, u);
    }
  }
  return t;
}

/// Codegree of {u,v} by scanning every third vertex.
inline std::size_t codegree(const Hypergraph3& h, Vertex u, Vertex v) {
  std::size_t c = 0;
  for (Vertex w = 0; w < h.vertex_count(); ++w) {
    if (w != u && w != v && h.contains(Triple(u, v, w))) ++c;
  }
  return c;
}

/// Squared length x^2 + xy + y^2 of the lattice vector x*(1,0) + y*(1/2, sqrt(3)/2).
inline std::int64_t lattice_norm(std::int64_t x, std::int64_t y) { return x * x + x * y + y * y; }

/// Equilateral triples (any size) among lattice points given by integer coordinates.
inline std::size_t equilateral_triples(const std::vector<std::pair<std::int64_t, std::int64_t>>& pts) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const auto d = lattice_norm(pts[i].first - pts[j].first, pts[i].second - pts[j].second);
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (lattice_norm(pts[i].first - pts[k].first, pts[i].second - pts[k].second) == d &&
            lattice_norm(pts[j].first - pts[k].first, pts[j].second - pts[k].second) == d) {
          ++count;
        }
      }
    }
  }
  return count;
}

/// Crossing triples of the parts [0,a), [a,a+b), [a+b,a+b+c).
inline Hypergraph3 complete_tripartite(std::size_t a, std::size_t b, std::size_t c) {
  std::vector<Triple> edges;
  for (Vertex x = 0; x < a; ++x) {
    for (Vertex y = static_cast<Vertex>(a); y < a + b; ++y) {
      for (Vertex z = static_cast<Vertex>(a + b); z < a + b + c; ++z) edges.emplace_back(x, y, z);
    }
  }
  return Hypergraph3(a + b + c, std::move(edges));
}

}  // namespace oracle
