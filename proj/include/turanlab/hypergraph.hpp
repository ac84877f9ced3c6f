#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace turanlab {

using Vertex = std::uint32_t;

/// Unordered vertex pair, always stored with first < second.
using Pair = std::pair<Vertex, Vertex>;

Pair make_pair_sorted(Vertex a, Vertex b);

/// A 3-element vertex set, stored sorted ascending.
class Triple {
 public:
  Triple() = default;
  /// Throws InvalidArgument unless a, b, c are pairwise distinct.
  Triple(Vertex a, Vertex b, Vertex c);

  Vertex operator[](std::size_t i) const { return v_[i]; }
  const std::array<Vertex, 3>& vertices() const { return v_; }
  bool contains(Vertex x) const { return v_[0] == x || v_[1] == x || v_[2] == x; }

  /// Colex rank: C(c,3) + C(b,2) + a. Independent of the vertex count.
  std::uint64_t rank() const;

  auto operator<=>(const Triple&) const = default;

 private:
  std::array<Vertex, 3> v_{0, 1, 2};
};

/// True when a, b, c are pairwise distinct.
inline bool is_three_set(Vertex a, Vertex b, Vertex c) { return a != b && b != c && a != c; }

/// Subset of {0..universe-1}.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet all(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(Vertex v) const { return v < bits_.size() && bits_.test(v); }
  void insert(Vertex v);
  void erase(Vertex v);
  std::vector<Vertex> members() const;

  bool intersects(const VertexSet& other) const { return bits_.intersects(other.bits_); }
  bool operator==(const VertexSet& other) const = default;

 private:
  boost::dynamic_bitset<std::uint64_t> bits_;
};

/// A 3-uniform hypergraph on the dense vertex range 0..n-1.
///
/// Edges are kept as a lexicographically sorted list. For n <= 64 a bitset
/// over colex triple ranks gives constant-time membership; above that the
/// sorted list is binary searched.
class Hypergraph3 {
 public:
  static constexpr std::size_t kDenseLimit = 64;

  explicit Hypergraph3(std::size_t vertex_count = 0);
  /// Throws InvalidArgument on out-of-range vertices or duplicate edges.
  Hypergraph3(std::size_t vertex_count, std::vector<Triple> edges);
  Hypergraph3(std::size_t vertex_count, std::initializer_list<std::array<Vertex, 3>> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<Triple>& edges() const { return edges_; }

  bool contains(const Triple& t) const;
  /// False for degenerate or out-of-range triples.
  bool contains(Vertex a, Vertex b, Vertex c) const;

  /// Returns false if the edge was already present.
  bool add_edge(const Triple& t);
  /// Returns false if the edge was absent.
  bool remove_edge(const Triple& t);

  std::size_t degree(Vertex v) const;
  std::vector<std::size_t> degrees() const;

  bool operator==(const Hypergraph3& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  void check_vertex_range(const Triple& t) const;
  bool dense() const { return n_ <= kDenseLimit; }
  void set_bit(const Triple& t, bool on);

  std::size_t n_ = 0;
  std::vector<Triple> edges_;
  std::vector<std::uint64_t> bits_;
};

struct CodegreeResult {
  std::size_t count = 0;
  VertexSet neighbors;
};

/// Vertices w in S with {u,v,w} an edge.
CodegreeResult codegree(const Hypergraph3& h, Vertex u, Vertex v, const VertexSet& s);
CodegreeResult codegree(const Hypergraph3& h, Vertex u, Vertex v);

/// Pairs {x,y} with {v,x,y} an edge, x in s1 and y in s2. Sorted, each pair (min,max).
std::vector<Pair> link_graph(const Hypergraph3& h, Vertex v, const VertexSet& s1, const VertexSet& s2);
std::vector<Pair> link_graph(const Hypergraph3& h, Vertex v);

/// Ordered three-way partition (V1, V2, V3) of the vertex range.
class Partition3 {
 public:
  /// Throws InvalidArgument if parts overlap, leave a vertex uncovered, or name out-of-range vertices.
  Partition3(std::size_t vertex_count, std::array<std::vector<Vertex>, 3> parts);

  std::size_t vertex_count() const { return n_; }
  const std::vector<Vertex>& part(std::size_t i) const { return parts_[i]; }
  /// Index 0..2 of the part holding v.
  int part_of(Vertex v) const { return owner_[v]; }

  bool operator==(const Partition3&) const = default;

 private:
  std::size_t n_;
  std::array<std::vector<Vertex>, 3> parts_;
  std::vector<int> owner_;
};

struct PartitionReport {
  std::vector<Triple> crossing;          // edges with one vertex in each part
  std::vector<Triple> missing_crossing;  // one-per-part triples that are not edges
  std::vector<Triple> bad;               // edges with exactly two vertices in one part
};

PartitionReport classify_partition(const Hypergraph3& h, const Partition3& pi);

/// t-blow-up; clone i of vertex v is encoded as v*t + i.
Hypergraph3 blow_up(const Hypergraph3& h, std::size_t t);

struct SymmetrizeResult {
  Hypergraph3 graph;
  /// new index of each original vertex, or kRemoved for members of S.
  std::vector<Vertex> old_to_new;
  /// new index of the clone standing in for the i-th member of S (ascending).
  std::vector<Vertex> clones;

  static constexpr Vertex kRemoved = static_cast<Vertex>(-1);
};

/// Replaces the vertices of S by clones of v. Kept vertices retain their
/// relative order at the front of the range; clones occupy the tail.
SymmetrizeResult symmetrize(const Hypergraph3& h, const VertexSet& s, Vertex v);

/// K4 minus one edge: {0,1,2}, {1,2,3}, {0,1,3}.
Hypergraph3 k4_minus();

/// The complete 3-graph on n vertices.
Hypergraph3 complete_hypergraph(std::size_t n);

}  // namespace turanlab
