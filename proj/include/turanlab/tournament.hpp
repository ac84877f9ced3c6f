#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "turanlab/hypergraph.hpp"

namespace turanlab {

/// Complete oriented graph stored as a row-major bit matrix: bit (u,v) set means u -> v.
class Tournament {
 public:
  /// Transitive tournament: u -> v whenever u < v.
  explicit Tournament(std::size_t vertex_count = 0);

  static Tournament transitive(std::size_t n) { return Tournament(n); }
  /// u -> v iff (v - u) mod n lies in `steps`. Throws unless the steps and
  /// their negatives partition the non-zero residues.
  static Tournament circulant(std::size_t n, const std::vector<std::size_t>& steps);
  /// Paley tournament: u -> v iff v - u is a non-zero square mod p. Requires p prime, p = 3 mod 4.
  static Tournament quadratic_residue(std::size_t p);
  /// Bit k of `code` orients the k-th pair (u<v) in lexicographic order: 1 means u -> v.
  static Tournament from_code(std::size_t n, std::uint64_t code);
  /// Throws InvalidArgument unless `arcs` orients every pair exactly once.
  static Tournament from_arcs(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& arcs);

  std::size_t vertex_count() const { return n_; }
  bool beats(Vertex u, Vertex v) const { return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U; }
  /// Orients the pair {u,v} as u -> v.
  void set_arc(Vertex u, Vertex v);

  std::size_t out_degree(Vertex v) const;
  std::size_t in_degree(Vertex v) const { return n_ - 1 - out_degree(v); }
  std::vector<Vertex> out_neighbors(Vertex v) const;
  std::vector<Vertex> in_neighbors(Vertex v) const;
  bool is_cyclic(Vertex a, Vertex b, Vertex c) const;

  /// Sub-tournament induced by `vertices`, relabeled 0..k-1 in the given order.
  Tournament induced(const std::vector<Vertex>& vertices) const;
  /// Arc bits over pairs in lexicographic order (requires n <= 11).
  std::uint64_t code() const;

  bool operator==(const Tournament& other) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Number of cyclic triangles, computed both from the score sequence and by
/// enumerating triples. Throws InternalInconsistency if the two disagree.
std::uint64_t cyclic_triangle_count(const Tournament& t);
std::uint64_t cyclic_triangle_count_by_scores(const Tournament& t);
std::uint64_t cyclic_triangle_count_by_enumeration(const Tournament& t);

/// Maximum number of cyclic triangles over n-vertex tournaments.
std::uint64_t kendall_smith_bound(std::uint64_t n);

/// 3-graph whose edges are the cyclic triangles of t.
Hypergraph3 cyclic_hypergraph(const Tournament& t);

/// Vertices with (n-1)/2 - eps2*n < d+(v), d-(v) < (n-1)/2 + eps2*n (strict).
std::vector<Vertex> near_regular_set(const Tournament& t, double eps2);

/// Pairs lying in at most eps2*n cyclic triangles.
std::vector<Pair> low_coverage_pairs(const Tournament& t, double eps2);

/// Number of cyclic triangles through the pair {u,v}.
std::size_t pair_cyclic_count(const Tournament& t, Vertex u, Vertex v);

/// The five-vertex tournament D5 on vertices 0..4.
Tournament d5();

/// All labeled 5-vertex tournaments whose cyclic hypergraph contains an
/// injective copy of C5-minus, ascending by code().
std::vector<Tournament> t5_family();

/// Number of vertex subsets S with t[S] isomorphic to d. Zero when d is larger.
std::uint64_t count_induced(const Tournament& t, const Tournament& d);

/// Text format: "n <count>" then exactly C(n,2) lines "a u v" meaning u -> v.
Tournament read_tournament(std::istream& in);
void write_tournament(std::ostream& out, const Tournament& t);
std::string format_tournament(const Tournament& t);
Tournament parse_tournament(const std::string& text);

}  // namespace turanlab
