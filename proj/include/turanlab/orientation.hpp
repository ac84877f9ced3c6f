#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "turanlab/hypergraph.hpp"
#include "turanlab/tournament.hpp"

namespace turanlab {

/// A pseudo-path v1 v2 ... vk v2 v1 with k >= 4, stored in full (length k+2).
/// Its existence rules out any orientation: following the walk forces
/// v1 -> v2 and v2 -> v1 at once.
struct BottleCertificate {
  std::vector<Vertex> sequence;

  /// k + 2, the number of entries.
  std::size_t size() const { return sequence.size(); }
  bool operator==(const BottleCertificate&) const = default;
};

/// Either a tournament in which every edge is cyclic, or a bottle.
using OrientationOutcome = std::variant<Tournament, BottleCertificate>;

class NotOrientable : public std::runtime_error {
 public:
  explicit NotOrientable(BottleCertificate certificate)
      : std::runtime_error("hypergraph is not orientable"), certificate_(std::move(certificate)) {}
  const BottleCertificate& certificate() const { return certificate_; }

 private:
  BottleCertificate certificate_;
};

/// Covered unordered pairs grouped by tight connectivity. Pairs inside a
/// class are sorted; classes are ordered by their smallest pair.
std::vector<std::vector<Pair>> tightly_connected_classes(const Hypergraph3& h);

/// Decides orientability constructively.
///
/// Per class the smallest pair {a,b} is oriented a -> b and every other pair
/// {c,d} follows the orientation in which it is reachable from (a,b) in the
/// pair digraph. Pairs outside every class point from the lower to the higher
/// index. When a class root (a,b) reaches (b,a), the tree walk between them
/// is a bottle and is returned instead.
OrientationOutcome orient(const Hypergraph3& h);

/// Shortest bottle (ties: lexicographically first starting pair), by BFS from
/// each (a,b) towards (b,a). With max_size set, only bottles of at most that
/// many entries are sought.
std::optional<BottleCertificate> find_bottle(const Hypergraph3& h,
                                             std::optional<std::size_t> max_size = std::nullopt);

/// Shape v1 v2 ... vk v2 v1 with k >= 4 and every window an edge of h.
bool verify_bottle(const Hypergraph3& h, std::span<const Vertex> sequence);

/// Every edge of h is a cyclic triangle of t. Throws InvalidArgument on a size mismatch.
bool verify_orientation(const Hypergraph3& h, const Tournament& t);

}  // namespace turanlab
