#include "turanlab/orientation.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "turanlab/error.hpp"
#include "turanlab/union_find.hpp"
#include "turanlab/walks.hpp"

namespace turanlab {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/// BFS tree over ordered pairs, indexed a*n + b. Buffers are reused across runs.
class PairSearch {
 public:
  explicit PairSearch(const PairDigraph& g)
      : g_(g), n_(g.vertex_count()), parent_(n_ * n_, kNone), depth_(n_ * n_, kNone) {}

  void run(OrderedPair start, std::size_t max_depth = kNone) {
    for (auto idx : touched_) parent_[idx] = depth_[idx] = kNone;
    touched_.clear();
    const auto s = index(start);
    depth_[s] = 0;
    parent_[s] = s;
    touched_.push_back(s);
    for (std::size_t head = 0; head < touched_.size(); ++head) {
      const auto cur = touched_[head];
      if (depth_[cur] >= max_depth) continue;
      const auto a = static_cast<Vertex>(cur / n_);
      const auto b = static_cast<Vertex>(cur % n_);
      for (Vertex c : g_.successors(a, b)) {
        const auto next = index({b, c});
        if (depth_[next] != kNone) continue;
        depth_[next] = depth_[cur] + 1;
        parent_[next] = cur;
        touched_.push_back(next);
      }
    }
  }

  bool reached(OrderedPair p) const { return depth_[index(p)] != kNone; }
  std::size_t depth(OrderedPair p) const { return depth_[index(p)]; }

  /// Vertex sequence of the tree walk from the start to p: first coordinates
  /// of every pair on the way, then p's second coordinate.
  std::vector<Vertex> walk_to(OrderedPair p) const {
    std::vector<std::size_t> chain;
    for (auto cur = index(p);; cur = parent_[cur]) {
      chain.push_back(cur);
      if (parent_[cur] == cur) break;
    }
    std::reverse(chain.begin(), chain.end());
    std::vector<Vertex> seq;
    for (auto idx : chain) seq.push_back(static_cast<Vertex>(idx / n_));
    seq.push_back(p.second);
    return seq;
  }

 private:
  std::size_t index(OrderedPair p) const { return static_cast<std::size_t>(p.first) * n_ + p.second; }

  const PairDigraph& g_;
  std::size_t n_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> touched_;  // doubles as the BFS queue
};

}  // namespace

std::vector<std::vector<Pair>> tightly_connected_classes(const Hypergraph3& h) {
  const auto n = h.vertex_count();
  auto id = [n](Vertex a, Vertex b) {
    auto [x, y] = make_pair_sorted(a, b);
    return static_cast<std::size_t>(x) * n + y;
  };
  DisjointSets sets(n * n);
  std::vector<char> covered(n * n, 0);
  for (const auto& t : h.edges()) {
    const auto p01 = id(t[0], t[1]), p02 = id(t[0], t[2]), p12 = id(t[1], t[2]);
    covered[p01] = covered[p02] = covered[p12] = 1;
    sets.unite(p01, p02);
    sets.unite(p01, p12);
  }
  std::map<std::size_t, std::vector<Pair>> by_root;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (covered[id(a, b)]) by_root[sets.find(id(a, b))].emplace_back(a, b);
    }
  }
  std::vector<std::vector<Pair>> classes;
  for (auto& [root, pairs] : by_root) classes.push_back(std::move(pairs));
  // Pairs were appended in lexicographic order, so front() is each class's minimum.
  std::sort(classes.begin(), classes.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return classes;
}

OrientationOutcome orient(const Hypergraph3& h) {
  const PairDigraph g(h);
  Tournament t(h.vertex_count());
  PairSearch search(g);
  for (const auto& cls : tightly_connected_classes(h)) {
    const auto [a, b] = cls.front();
    search.run({a, b});
    // If some (c,d) were reachable in both orientations, reversal symmetry
    // would give (a,b) ~> (c,d) ~> (b,a); so the root pair decides the class.
    if (search.reached({b, a})) {
      auto seq = search.walk_to({b, a});
      if (!verify_bottle(h, seq)) throw InternalInconsistency("orient: tree walk is not a bottle");
      return BottleCertificate{std::move(seq)};
    }
    for (const auto& [c, d] : cls) {
      const bool forward = search.reached({c, d});
      const bool backward = search.reached({d, c});
      if (forward == backward) {
        throw InternalInconsistency("orient: pair not reachable in exactly one orientation");
      }
      if (forward) {
        t.set_arc(c, d);
      } else {
        t.set_arc(d, c);
      }
    }
  }
  return t;
}

std::optional<BottleCertificate> find_bottle(const Hypergraph3& h, std::optional<std::size_t> max_size) {
  const PairDigraph g(h);
  // A bottle of size s is a walk of s-2 arcs from (a,b) to (b,a).
  std::size_t limit = max_size ? (*max_size >= 2 ? *max_size - 2 : 0) : kNone;
  std::optional<BottleCertificate> best;
  PairSearch search(g);
  for (const auto& [a, b] : g.nodes()) {
    if (best) limit = best->size() - 3;  // only strictly shorter walks improve
    search.run({a, b}, limit);
    if (!search.reached({b, a})) continue;
    best = BottleCertificate{search.walk_to({b, a})};
  }
  return best;
}

bool verify_bottle(const Hypergraph3& h, std::span<const Vertex> seq) {
  const auto len = seq.size();
  if (len < 6) return false;
  if (seq[0] != seq[len - 1] || seq[1] != seq[len - 2]) return false;
  for (std::size_t i = 0; i + 2 < len; ++i) {
    if (!h.contains(seq[i], seq[i + 1], seq[i + 2])) return false;
  }
  return true;
}

bool verify_orientation(const Hypergraph3& h, const Tournament& t) {
  if (h.vertex_count() != t.vertex_count()) {
    throw InvalidArgument("verify_orientation: vertex count mismatch");
  }
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [&](const Triple& e) { return t.is_cyclic(e[0], e[1], e[2]); });
}

}  // namespace turanlab
