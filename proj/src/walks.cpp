#include "turanlab/walks.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "turanlab/error.hpp"

namespace turanlab {

namespace {

bool test_bit(std::span<const std::uint64_t> row, Vertex v) { return (row[v / 64] >> (v % 64)) & 1U; }

template <typename F>
void for_each_bit(std::span<const std::uint64_t> row, F&& f) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    for (auto bits = row[w]; bits != 0; bits &= bits - 1) {
      f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
    }
  }
}

bool any_bit(std::span<const std::uint64_t> row) {
  return std::any_of(row.begin(), row.end(), [](std::uint64_t w) { return w != 0; });
}

/// Set of ordered pairs as an n x n bit matrix: row x holds every y with (x,y) in the set.
class PairLayer {
 public:
  PairLayer(std::size_t n, std::size_t words) : n_(n), words_(words), bits_(n * words, 0) {}

  std::span<std::uint64_t> row(Vertex x) { return {bits_.data() + x * words_, words_}; }
  std::span<const std::uint64_t> row(Vertex x) const { return {bits_.data() + x * words_, words_}; }
  bool contains(Vertex x, Vertex y) const { return test_bit(row(x), y); }
  void insert(Vertex x, Vertex y) { bits_[x * words_ + y / 64] |= std::uint64_t{1} << (y % 64); }
  void clear() { std::fill(bits_.begin(), bits_.end(), 0); }
  bool empty() const { return !any_bit(bits_); }

  /// Successor layer: (x,y) -> (y,z) for every completion z of {x,y}.
  void advance_into(const PairDigraph& g, PairLayer& next) const {
    next.clear();
    for (Vertex x = 0; x < n_; ++x) {
      for_each_bit(row(x), [&](Vertex y) {
        auto dst = next.row(y);
        auto src = g.completions(x, y);
        for (std::size_t w = 0; w < words_; ++w) dst[w] |= src[w];
      });
    }
  }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

void require_length(std::size_t length, const char* what) {
  if (length < 4) throw InvalidArgument(std::string(what) + ": length must be at least 4");
}

/// Lexicographically smallest pair sequence p_0 .. p_last with p_k in layers[k],
/// consecutive pairs joined by arcs and p_last accepted by `is_end`.
template <typename EndTest>
std::vector<OrderedPair> smallest_walk(const PairDigraph& g, const std::vector<PairLayer>& layers, EndTest is_end) {
  const auto n = g.vertex_count();
  const auto last = layers.size() - 1;
  // viable[k][a*n+b]: (a,b) in layer k can still be completed to an accepted end.
  std::vector<std::vector<char>> viable(layers.size(), std::vector<char>(n * n, 0));
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) viable[last][a * n + b] = layers[last].contains(a, b) && is_end(a, b);
  }
  for (std::size_t k = last; k-- > 0;) {
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        if (!layers[k].contains(a, b)) continue;
        bool ok = false;
        for_each_bit(g.completions(a, b), [&](Vertex c) { ok = ok || viable[k + 1][b * n + c]; });
        viable[k][a * n + b] = ok;
      }
    }
  }
  std::vector<OrderedPair> pairs;
  for (std::size_t idx = 0; idx < n * n && pairs.empty(); ++idx) {
    if (viable[0][idx]) pairs.emplace_back(static_cast<Vertex>(idx / n), static_cast<Vertex>(idx % n));
  }
  if (pairs.empty()) throw InternalInconsistency("walk reconstruction found no start");
  for (std::size_t k = 1; k <= last; ++k) {
    const auto [a, b] = pairs.back();
    bool found = false;
    for (Vertex c = 0; c < n && !found; ++c) {
      if (g.has_arc(a, b, c) && viable[k][b * n + c]) {
        pairs.emplace_back(b, c);
        found = true;
      }
    }
    if (!found) throw InternalInconsistency("walk reconstruction lost its successor");
  }
  return pairs;
}

}  // namespace

PairDigraph::PairDigraph(const Hypergraph3& h)
    : n_(h.vertex_count()), words_((n_ + 63) / 64), rows_(n_ * n_ * words_, 0) {
  auto set = [this](Vertex a, Vertex b, Vertex c) {
    rows_[(static_cast<std::size_t>(a) * n_ + b) * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
  };
  for (const auto& t : h.edges()) {
    const auto [a, b, c] = t.vertices();
    set(a, b, c), set(b, a, c);
    set(a, c, b), set(c, a, b);
    set(b, c, a), set(c, b, a);
  }
}

bool PairDigraph::has_arc(Vertex a, Vertex b, Vertex c) const {
  if (a >= n_ || b >= n_ || c >= n_ || !is_three_set(a, b, c)) return false;
  return test_bit(completions(a, b), c);
}

bool PairDigraph::is_node(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_ || a == b) return false;
  return any_bit(completions(a, b));
}

std::vector<Vertex> PairDigraph::successors(Vertex a, Vertex b) const {
  std::vector<Vertex> out;
  for_each_bit(completions(a, b), [&](Vertex c) { out.push_back(c); });
  return out;
}

std::vector<OrderedPair> PairDigraph::nodes() const {
  std::vector<OrderedPair> out;
  for (Vertex a = 0; a < n_; ++a) {
    for (Vertex b = 0; b < n_; ++b) {
      if (is_node(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::size_t PairDigraph::arc_count() const {
  std::size_t count = 0;
  for (auto w : rows_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

std::string to_string(WalkKind kind) {
  switch (kind) {
    case WalkKind::PseudoPath: return "pseudo-path";
    case WalkKind::PseudoCycle: return "pseudo-cycle";
    case WalkKind::CycleMinusOne: return "cycle-minus-one";
  }
  return "unknown";
}

std::vector<std::array<Vertex, 3>> WalkWitness::windows() const {
  const auto l = vertices.size();
  std::size_t count = 0;
  switch (kind) {
    case WalkKind::PseudoPath: count = l >= 2 ? l - 2 : 0; break;
    case WalkKind::CycleMinusOne: count = l >= 1 ? l - 1 : 0; break;
    case WalkKind::PseudoCycle: count = l; break;
  }
  std::vector<std::array<Vertex, 3>> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back({vertices[i % l], vertices[(i + 1) % l], vertices[(i + 2) % l]});
  }
  return out;
}

bool validate_walk(const Hypergraph3& h, const WalkWitness& w) {
  if (w.vertices.size() < 3) return false;
  const auto win = w.windows();
  return std::all_of(win.begin(), win.end(), [&](const auto& t) { return h.contains(t[0], t[1], t[2]); });
}

std::optional<WalkWitness> find_cycle_minus_one(const PairDigraph& g, std::size_t length) {
  require_length(length, "find_cycle_minus_one");
  const auto n = g.vertex_count();
  std::vector<PairLayer> layers(length, PairLayer(n, g.words()));

  for (Vertex v0 = 0; v0 < n; ++v0) {
    layers[0].clear();
    for (Vertex y = 0; y < n; ++y) {
      if (g.is_node(v0, y)) layers[0].insert(v0, y);
    }
    if (layers[0].empty()) continue;

    bool dead = false;
    for (std::size_t k = 1; k < length && !dead; ++k) {
      layers[k - 1].advance_into(g, layers[k]);
      dead = layers[k].empty();
    }
    if (dead) continue;

    bool closes = false;
    for (Vertex y = 0; y < n && !closes; ++y) closes = layers[length - 1].contains(y, v0);
    if (!closes) continue;
    const auto pairs = smallest_walk(g, layers, [v0](Vertex, Vertex b) { return b == v0; });
    WalkWitness w{{}, WalkKind::CycleMinusOne};
    for (const auto& p : pairs) w.vertices.push_back(p.first);
    return w;
  }
  return std::nullopt;
}

std::optional<WalkWitness> find_cycle_minus_one(const Hypergraph3& h, std::size_t length) {
  require_length(length, "find_cycle_minus_one");
  return find_cycle_minus_one(PairDigraph(h), length);
}

std::optional<WalkWitness> find_pseudo_cycle(const Hypergraph3& h, std::size_t length) {
  require_length(length, "find_pseudo_cycle");
  const PairDigraph g(h);
  const auto n = g.vertex_count();
  std::vector<PairLayer> layers(length + 1, PairLayer(n, g.words()));

  for (const auto& [a, b] : g.nodes()) {
    layers[0].clear();
    layers[0].insert(a, b);
    bool dead = false;
    for (std::size_t k = 1; k <= length && !dead; ++k) {
      layers[k - 1].advance_into(g, layers[k]);
      dead = layers[k].empty();
    }
    if (dead || !layers[length].contains(a, b)) continue;
    const auto pairs = smallest_walk(g, layers, [a, b](Vertex x, Vertex y) { return x == a && y == b; });
    WalkWitness w{{}, WalkKind::PseudoCycle};
    for (std::size_t i = 0; i < length; ++i) w.vertices.push_back(pairs[i].first);
    return w;
  }
  return std::nullopt;
}

FreenessResult is_fcm_free(const Hypergraph3& h, std::size_t max_length) {
  require_length(max_length, "is_fcm_free");
  const PairDigraph g(h);
  for (std::size_t l = 4; l <= max_length; ++l) {
    if (l % 3 == 0) continue;
    if (auto w = find_cycle_minus_one(g, l)) return {false, std::move(w)};
  }
  return {true, std::nullopt};
}

bool naive_contains(const Hypergraph3& h, const Hypergraph3& f, bool injective) {
  const auto k = f.vertex_count();
  if (k > kNaivePatternLimit) {
    throw UnsupportedSize("naive_contains: pattern has more than 7 vertices");
  }
  const auto n = h.vertex_count();
  if (injective && k > n) return false;
  if (k == 0) return true;
  if (n == 0) return false;

  // Edges of f whose largest vertex is i become checkable once i is mapped.
  std::vector<std::vector<Triple>> ready(k);
  for (const auto& e : f.edges()) ready[e[2]].push_back(e);

  std::vector<Vertex> image(k);
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) return true;
    for (Vertex x = 0; x < n; ++x) {
      if (injective && used[x]) continue;
      image[i] = x;
      const bool ok = std::all_of(ready[i].begin(), ready[i].end(), [&](const Triple& e) {
        return h.contains(image[e[0]], image[e[1]], image[e[2]]);
      });
      if (!ok) continue;
      used[x] = 1;
      const bool done = self(self, i + 1);
      used[x] = 0;
      if (done) return true;
    }
    return false;
  };
  return extend(extend, 0);
}

Hypergraph3 tight_cycle(std::size_t length) {
  if (length < 4) throw InvalidArgument("tight_cycle: length must be at least 4");
  std::vector<Triple> edges;
  const auto l = static_cast<Vertex>(length);
  for (Vertex i = 0; i < l; ++i) edges.emplace_back(i, (i + 1) % l, (i + 2) % l);
  return Hypergraph3(length, std::move(edges));
}

Hypergraph3 cycle_minus_one(std::size_t length) {
  if (length < 4) throw InvalidArgument("cycle_minus_one: length must be at least 4");
  std::vector<Triple> edges;
  const auto l = static_cast<Vertex>(length);
  for (Vertex i = 0; i + 1 < l; ++i) edges.emplace_back(i, (i + 1) % l, (i + 2) % l);
  return Hypergraph3(length, std::move(edges));
}

namespace {

enum class EmbedCase { Multiple, SameResidue, DoubleResidue };

struct EmbedPlan {
  EmbedCase kind;
  std::size_t power;  // number of repetitions of the three-class prefix
  std::size_t min_t;
};

EmbedPlan plan_embedding(std::size_t l1, std::size_t l2) {
  if (l1 < 4 || l2 < 4) throw InvalidArgument("embed: lengths must be at least 4");
  if (l2 % 3 == 0) throw InvalidArgument("embed: l2 must not be divisible by 3");
  if (l1 + 3 < 2 * l2) throw InvalidArgument("embed: requires l1 >= 2*l2 - 3");
  // The prefix (c1 c2 c3)^k occupies clone layers 3..k+2; the tails use layers 1 and 2.
  if (l1 % 3 == 0) {
    const auto k = l1 / 3;
    return {EmbedCase::Multiple, k, k + 2};
  }
  if (l1 % 3 == l2 % 3) {
    const auto k = (l1 - l2) / 3;
    return {EmbedCase::SameResidue, k, k > 0 ? k + 2 : 1};
  }
  const auto k = (l1 + 3 - 2 * l2) / 3;
  return {EmbedCase::DoubleResidue, k, k > 0 ? k + 2 : 2};
}

}  // namespace

std::size_t minimal_blowup_factor(std::size_t l1, std::size_t l2) { return plan_embedding(l1, l2).min_t; }

WalkWitness embed_cm_in_blowup(std::size_t l1, std::size_t l2, std::size_t t) {
  const auto plan = plan_embedding(l1, l2);
  if (t < plan.min_t) {
    throw InvalidArgument("embed: blow-up factor " + std::to_string(t) + " below the required " +
                          std::to_string(plan.min_t));
  }
  // Classes and layers are 1-based as in the construction; vertex = (class-1)*t + (layer-1).
  WalkWitness w{{}, WalkKind::CycleMinusOne};
  auto push = [&](std::size_t cls, std::size_t layer) {
    w.vertices.push_back(static_cast<Vertex>((cls - 1) * t + (layer - 1)));
  };
  auto power = [&](std::array<std::size_t, 3> classes, std::size_t k) {
    for (std::size_t layer = 3; layer < k + 3; ++layer) {
      for (auto c : classes) push(c, layer);
    }
  };

  switch (plan.kind) {
    case EmbedCase::Multiple:
      power({1, 2, 3}, plan.power);
      break;
    case EmbedCase::SameResidue:
      power({1, 2, 3}, plan.power);
      for (std::size_t c = 1; c <= l2; ++c) push(c, 1);
      break;
    case EmbedCase::DoubleResidue:
      power({1, 3, 2}, plan.power);
      push(1, 1), push(3, 1), push(2, 1);
      for (std::size_t c = 4; c <= l2; ++c) push(c, 1), push(c - 1, 2);
      break;
  }

  const auto host = blow_up(cycle_minus_one(l2), t);
  std::set<Vertex> distinct(w.vertices.begin(), w.vertices.end());
  if (w.vertices.size() != l1 || distinct.size() != l1 || !validate_walk(host, w)) {
    throw InternalInconsistency("embed: witness for l1=" + std::to_string(l1) +
                                ", l2=" + std::to_string(l2) + " failed verification");
  }
  return w;
}

}  // namespace turanlab
