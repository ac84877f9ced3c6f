#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "turanlab/hypergraph.hpp"

namespace turanlab {

/// Ordered vertex pair (a,b); unlike Pair, a may exceed b.
using OrderedPair = std::pair<Vertex, Vertex>;

/// Directed graph on ordered pairs with an arc (a,b) -> (b,c) for every edge
/// {a,b,c}. Tight walks in the hypergraph are exactly walks here.
///
/// Stored as one completion bitset per unordered pair; the arc relation is
/// symmetric under reversal: (a,b)->(b,c) iff (c,b)->(b,a).
class PairDigraph {
 public:
  explicit PairDigraph(const Hypergraph3& h);

  std::size_t vertex_count() const { return n_; }
  std::size_t words() const { return words_; }

  /// Bitset of c with {a,b,c} an edge.
  std::span<const std::uint64_t> completions(Vertex a, Vertex b) const {
    return {rows_.data() + (static_cast<std::size_t>(a) * n_ + b) * words_, words_};
  }
  bool has_arc(Vertex a, Vertex b, Vertex c) const;
  /// Ordered pair lies in some edge.
  bool is_node(Vertex a, Vertex b) const;
  std::vector<Vertex> successors(Vertex a, Vertex b) const;

  /// Covered ordered pairs in lexicographic order.
  std::vector<OrderedPair> nodes() const;
  std::size_t arc_count() const;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

enum class WalkKind { PseudoPath, PseudoCycle, CycleMinusOne };

std::string to_string(WalkKind kind);

/// Vertex sequence v0 .. v_{l-1} read as a tight walk of the given kind.
struct WalkWitness {
  std::vector<Vertex> vertices;
  WalkKind kind = WalkKind::PseudoPath;

  std::size_t length() const { return vertices.size(); }
  /// The consecutive triples the kind requires (indices mod length for cycles).
  std::vector<std::array<Vertex, 3>> windows() const;
};

/// Every window of the witness is a 3-set and an edge of h.
bool validate_walk(const Hypergraph3& h, const WalkWitness& w);

/// A sequence v0..v_{l-1} whose windows {v_i, v_{i+1}, v_{i+2}} (mod l) are
/// edges for i = 0..l-2. Layered reachability anchored at v0: a walk of l-1
/// arcs from some (v0, v1) to some (x, v0). Throws InvalidArgument for l < 4.
std::optional<WalkWitness> find_cycle_minus_one(const Hypergraph3& h, std::size_t length);
std::optional<WalkWitness> find_cycle_minus_one(const PairDigraph& g, std::size_t length);

/// Closed walk of exactly `length` arcs. Throws InvalidArgument for l < 4.
std::optional<WalkWitness> find_pseudo_cycle(const Hypergraph3& h, std::size_t length);

struct FreenessResult {
  bool free = true;
  std::optional<WalkWitness> witness;  // smallest violating length
};

/// Checks every length 4 <= l <= max_length with l not divisible by 3.
FreenessResult is_fcm_free(const Hypergraph3& h, std::size_t max_length);

inline constexpr std::size_t kNaivePatternLimit = 7;

/// Backtracking search for a (vertex-injective if requested) map V(f) -> V(h)
/// sending edges to edges. Throws UnsupportedSize when f has more than 7 vertices.
bool naive_contains(const Hypergraph3& h, const Hypergraph3& f, bool injective);

/// Tight cycle on 0..l-1: edges {i, i+1, i+2} mod l.
Hypergraph3 tight_cycle(std::size_t length);
/// Tight cycle minus the edge {l-1, 0, 1}.
Hypergraph3 cycle_minus_one(std::size_t length);

/// Smallest blow-up factor for which the explicit embedding of C-_{l1} into
/// C-_{l2}[t] exists. Throws InvalidArgument unless l1, l2 >= 4,
/// l1 >= 2*l2 - 3 and l2 is not divisible by 3.
std::size_t minimal_blowup_factor(std::size_t l1, std::size_t l2);

/// Explicit copy of C-_{l1} inside blow_up(cycle_minus_one(l2), t), with clone
/// j of class i encoded as i*t + j. The witness is checked against the host
/// before returning; a failed check throws InternalInconsistency.
WalkWitness embed_cm_in_blowup(std::size_t l1, std::size_t l2, std::size_t t);

}  // namespace turanlab
