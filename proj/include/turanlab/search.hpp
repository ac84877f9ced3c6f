#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "turanlab/hypergraph.hpp"
#include "turanlab/walks.hpp"

namespace turanlab {

/// The forbidden family of a Turán problem.
///
/// FCM(L) is matched by walks (pseudo-cycles minus one edge of every size
/// 4 <= l <= L with 3 not dividing l); pattern members are matched injectively.
class ForbiddenFamily {
 public:
  enum class Kind { Patterns, CycleMinusOneWalks };

  /// No forbidden members: every hypergraph is free.
  ForbiddenFamily() = default;

  static ForbiddenFamily k4_minus();
  static ForbiddenFamily c5_minus();
  static ForbiddenFamily fcm(std::size_t max_length);
  /// Throws InvalidArgument if a member has more than 7 vertices or no edges.
  static ForbiddenFamily patterns(std::vector<Hypergraph3> members, std::string name = "patterns");
  /// Accepts "k4-minus", "c5-minus", "fcm" (needs max_length >= 4) and "empty".
  static ForbiddenFamily by_name(const std::string& name, std::size_t max_length = 0);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::size_t max_length() const { return max_length_; }
  const std::vector<Hypergraph3>& members() const { return members_; }

  /// Reference check through the walks module (FCM) or naive_contains (patterns).
  bool is_free(const Hypergraph3& h) const;

 private:
  Kind kind_ = Kind::Patterns;
  std::string name_ = "empty";
  std::size_t max_length_ = 0;
  std::vector<Hypergraph3> members_;
};

struct TuranResult {
  std::size_t n = 0;
  ForbiddenFamily family;
  std::size_t max_edges = 0;
  /// One representative per isomorphism class, sorted by canonical form.
  std::vector<Hypergraph3> extremal_examples;
  std::vector<std::string> extremal_forms;
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::size_t kExactTuranLimit = 8;

struct TuranOptions {
  std::size_t jobs = 1;
  /// Canonical-form memo of search states up to this many decisions deep.
  std::size_t memo_depth = 3;
  /// Seed the bound with E_n when it is verified free of the family.
  bool seed_with_construction = true;
};

/// ex(n, family) by depth-first branch and bound over triples in
/// lexicographic order. Throws UnsupportedSize for n > 8.
TuranResult exact_turan(std::size_t n, const ForbiddenFamily& family, const TuranOptions& options = {});

/// Greedy improvement by symmetrization moves and random single-edge
/// additions; never loses an edge. Throws InvalidArgument if the seed is not free.
Hypergraph3 local_search(const Hypergraph3& seed, const ForbiddenFamily& family, std::size_t steps,
                         std::uint64_t rng_seed);

struct CleaningStep {
  Pair pair;
  std::size_t codegree = 0;  // at the moment of removal, equal to the edges removed
};

struct CleaningTrace {
  Hypergraph3 result;
  std::vector<CleaningStep> steps;
};

/// While some pair has codegree strictly between 0 and threshold, deletes
/// every edge through the lexicographically first such pair.
Hypergraph3 codegree_clean(const Hypergraph3& h, std::size_t threshold);
CleaningTrace codegree_clean_traced(const Hypergraph3& h, std::size_t threshold);

struct StabilityResult {
  Partition3 partition;
  PartitionReport report;
  Vertex pivot = 0;  // vertex of maximum degree
  std::size_t pivot_degree = 0;
  std::size_t link_components = 0;
  std::size_t largest_component = 0;
  /// Every link edge of the pivot joins an out-neighbour to an in-neighbour.
  bool link_bipartite = true;
};

/// Constructive three-part split around a maximum-degree vertex, using the
/// orientation witness. Throws NotOrientable carrying the bottle otherwise.
StabilityResult stability_partition(const Hypergraph3& h);

/// Every component of v's link graph, split by out/in-neighbourhood of v in
/// the orientation witness, is complete bipartite. Throws NotOrientable.
bool check_link_components_bipartite_complete(const Hypergraph3& h, Vertex v);

}  // namespace turanlab
