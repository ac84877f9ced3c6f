#include "turanlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "turanlab/canonical.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/error.hpp"
#include "turanlab/orientation.hpp"
#include "turanlab/union_find.hpp"

namespace turanlab {

// ---------------------------------------------------------------- families

ForbiddenFamily ForbiddenFamily::k4_minus() { return patterns({turanlab::k4_minus()}, "k4-minus"); }

ForbiddenFamily ForbiddenFamily::c5_minus() { return patterns({cycle_minus_one(5)}, "c5-minus"); }

ForbiddenFamily ForbiddenFamily::fcm(std::size_t max_length) {
  if (max_length < 4) throw InvalidArgument("fcm family: L must be at least 4");
  ForbiddenFamily f;
  f.kind_ = Kind::CycleMinusOneWalks;
  f.name_ = "fcm";
  f.max_length_ = max_length;
  return f;
}

ForbiddenFamily ForbiddenFamily::patterns(std::vector<Hypergraph3> members, std::string name) {
  for (const auto& m : members) {
    if (m.vertex_count() > kNaivePatternLimit) {
      throw InvalidArgument("forbidden family: members are limited to 7 vertices");
    }
    if (m.empty()) throw InvalidArgument("forbidden family: a member without edges forbids everything");
  }
  ForbiddenFamily f;
  f.name_ = std::move(name);
  f.members_ = std::move(members);
  return f;
}

ForbiddenFamily ForbiddenFamily::by_name(const std::string& name, std::size_t max_length) {
  if (name == "k4-minus") return k4_minus();
  if (name == "c5-minus") return c5_minus();
  if (name == "fcm") return fcm(max_length);
  if (name == "empty") return ForbiddenFamily();
  throw InvalidArgument("unknown family '" + name + "' (expected k4-minus, c5-minus, fcm or empty)");
}

bool ForbiddenFamily::is_free(const Hypergraph3& h) const {
  if (kind_ == Kind::CycleMinusOneWalks) return is_fcm_free(h, max_length_).free;
  return std::none_of(members_.begin(), members_.end(),
                      [&](const Hypergraph3& f) { return naive_contains(h, f, true); });
}

// ------------------------------------------------------------ exact search

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

/// Triples of {0..n-1} in lexicographic order, with a reverse lookup.
struct TripleIndex {
  explicit TripleIndex(std::size_t n) : n(n), index(n * n * n, -1) {
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        for (Vertex c = b + 1; c < n; ++c) {
          const auto id = static_cast<int>(triples.size());
          triples.emplace_back(a, b, c);
          const std::array<Vertex, 3> v{a, b, c};
          for (int p = 0; p < 6; ++p) {
            static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
            index[(v[perms[p][0]] * n + v[perms[p][1]]) * n + v[perms[p][2]]] = id;
          }
        }
      }
    }
  }

  int at(Vertex a, Vertex b, Vertex c) const { return index[(a * n + b) * n + c]; }

  std::vector<Triple> edges(Mask m) const {
    std::vector<Triple> out;
    for (; m; m &= m - 1) out.push_back(triples[static_cast<std::size_t>(std::countr_zero(m))]);
    return out;
  }

  std::size_t n;
  std::vector<Triple> triples;
  std::vector<int> index;  // -1 on degenerate triples
};

/// Family membership test on edge masks over at most 8 vertices.
class MaskChecker {
 public:
  MaskChecker(const TripleIndex& idx, const ForbiddenFamily& family) : idx_(idx), family_(family) {
    for (const auto& m : family.members()) patterns_.push_back(m);
  }

  /// `base` is free; does base + t contain a member?
  bool violates_with(Mask base, std::size_t t) const {
    const Mask m = base | bit(t);
    if (family_.kind() == ForbiddenFamily::Kind::CycleMinusOneWalks) return has_cm_walk(m);
    return std::any_of(patterns_.begin(), patterns_.end(),
                       [&](const Hypergraph3& f) { return embeds_through(f, m, t); });
  }

  bool contains_member(Mask m) const {
    if (family_.kind() == ForbiddenFamily::Kind::CycleMinusOneWalks) return has_cm_walk(m);
    for (Mask r = m; r; r &= r - 1) {
      const auto t = static_cast<std::size_t>(std::countr_zero(r));
      for (const auto& f : patterns_) {
        if (embeds_through(f, m, t)) return true;
      }
    }
    return false;
  }

 private:
  bool has_edge(Mask m, Vertex a, Vertex b, Vertex c) const {
    const int id = idx_.at(a, b, c);
    return id >= 0 && (m >> id) & 1U;
  }

  // Ordered pairs (a,b) are bit a*8+b of a 64-bit set.
  bool has_cm_walk(Mask m) const {
    const auto n = idx_.n;
    std::array<Mask, 64> succ{};
    for (Mask r = m; r; r &= r - 1) {
      const auto& t = idx_.triples[static_cast<std::size_t>(std::countr_zero(r))];
      const Vertex a = t[0], b = t[1], c = t[2];
      succ[a * 8 + b] |= bit(b * 8 + c);
      succ[b * 8 + a] |= bit(a * 8 + c);
      succ[a * 8 + c] |= bit(c * 8 + b);
      succ[c * 8 + a] |= bit(a * 8 + b);
      succ[b * 8 + c] |= bit(c * 8 + a);
      succ[c * 8 + b] |= bit(b * 8 + a);
    }
    const auto max_length = family_.max_length();
    for (Vertex v0 = 0; v0 < n; ++v0) {
      Mask cur = 0, end = 0;
      for (Vertex y = 0; y < n; ++y) {
        if (y == v0) continue;
        if (succ[v0 * 8 + y]) cur |= bit(v0 * 8 + y);
        end |= bit(y * 8 + v0);
      }
      // After s arcs the walk has s+1 vertices; closing at (x, v0) means length s+1.
      for (std::size_t s = 1; s + 1 <= max_length && cur; ++s) {
        Mask next = 0;
        for (Mask r = cur; r; r &= r - 1) next |= succ[static_cast<std::size_t>(std::countr_zero(r))];
        cur = next;
        const auto length = s + 1;
        if (length >= 4 && length % 3 != 0 && (cur & end)) return true;
      }
    }
    return false;
  }

  bool embeds_through(const Hypergraph3& f, Mask m, std::size_t t) const {
    const auto k = f.vertex_count();
    const auto n = idx_.n;
    const auto& target = idx_.triples[t];
    std::vector<int> image(k, -1);
    for (const auto& anchor : f.edges()) {
      std::array<int, 3> order{0, 1, 2};
      do {
        std::fill(image.begin(), image.end(), -1);
        Mask used = 0;
        for (int i = 0; i < 3; ++i) {
          image[anchor[static_cast<std::size_t>(i)]] = static_cast<int>(target[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
          used |= bit(target[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
        }
        if (extend(f, m, image, used, 0, n)) return true;
      } while (std::next_permutation(order.begin(), order.end()));
    }
    return false;
  }

  bool extend(const Hypergraph3& f, Mask m, std::vector<int>& image, Mask used, std::size_t from,
              std::size_t n) const {
    std::size_t i = from;
    while (i < image.size() && image[i] >= 0) ++i;
    if (i == image.size()) {
      return std::all_of(f.edges().begin(), f.edges().end(), [&](const Triple& e) {
        return has_edge(m, static_cast<Vertex>(image[e[0]]), static_cast<Vertex>(image[e[1]]),
                        static_cast<Vertex>(image[e[2]]));
      });
    }
    for (Vertex x = 0; x < n; ++x) {
      if (used & bit(x)) continue;
      image[i] = static_cast<int>(x);
      // Edges of f with every vertex mapped must already be present.
      const bool ok = std::all_of(f.edges().begin(), f.edges().end(), [&](const Triple& e) {
        if (image[e[0]] < 0 || image[e[1]] < 0 || image[e[2]] < 0) return true;
        return has_edge(m, static_cast<Vertex>(image[e[0]]), static_cast<Vertex>(image[e[1]]),
                        static_cast<Vertex>(image[e[2]]));
      });
      if (ok && extend(f, m, image, used | bit(x), i + 1, n)) return true;
    }
    image[i] = -1;
    return false;
  }

  const TripleIndex& idx_;
  const ForbiddenFamily& family_;
  std::vector<Hypergraph3> patterns_;
};

struct SearchTask {
  Mask included;
  Mask available;
  std::size_t depth;
};

class TuranSearch {
 public:
  TuranSearch(std::size_t n, const ForbiddenFamily& family, const TuranOptions& options)
      : n_(n), idx_(n), checker_(idx_, family), options_(options) {}

  TuranResult run(const ForbiddenFamily& family) {
    TuranResult result;
    result.n = n_;
    result.family = family;
    const auto total = idx_.triples.size();
    const Mask everything = total == 64 ? ~Mask{0} : bit(total) - 1;

    std::vector<Mask> optimum{0};  // the empty graph is always free
    if (total > 0 && !checker_.violates_with(0, 0)) {
      if (options_.seed_with_construction) seed_bound();
      // Every non-empty graph has an isomorphic copy through {0,1,2}.
      std::vector<SearchTask> tasks;
      expand(SearchTask{bit(0), forward_check(bit(0), everything & ~bit(0)), 1}, tasks);
      run_tasks(tasks);
      std::size_t best = 0;
      for (const auto& w : workers_) best = std::max(best, w.best);
      if (best < seeded_) {
        throw InternalInconsistency("exact_turan: search did not reach the seeded lower bound");
      }
      if (best > 0) {
        optimum.clear();
        for (const auto& w : workers_) {
          if (w.best == best) optimum.insert(optimum.end(), w.found.begin(), w.found.end());
        }
      }
    }
    for (const auto& w : workers_) result.nodes_explored += w.nodes;

    std::map<std::string, Mask> classes;
    for (Mask m : optimum) {
      const auto edges = idx_.edges(m);
      classes.try_emplace(canonical_form(Hypergraph3(n_, edges), kCanonicalHardLimit), m);
    }
    result.max_edges = static_cast<std::size_t>(std::popcount(optimum.front()));
    for (const auto& [form, m] : classes) {
      result.extremal_forms.push_back(form);
      result.extremal_examples.emplace_back(n_, idx_.edges(m));
    }
    return result;
  }

 private:
  struct Worker {
    std::size_t best = 0;
    std::vector<Mask> found;
    std::uint64_t nodes = 0;
  };

  void seed_bound() {
    const auto en = iterated_blowup(n_);
    Mask m = 0;
    for (const auto& e : en.edges()) m |= bit(static_cast<std::size_t>(idx_.at(e[0], e[1], e[2])));
    if (!checker_.contains_member(m)) {
      seeded_ = en.edge_count();
      best_.store(seeded_);
    }
  }

  Mask forward_check(Mask included, Mask available) const {
    for (Mask r = available; r; r &= r - 1) {
      const auto t = static_cast<std::size_t>(std::countr_zero(r));
      if (checker_.violates_with(included, t)) available &= ~bit(t);
    }
    return available;
  }

  // Splits the top of the tree into independent tasks for the workers.
  void expand(const SearchTask& task, std::vector<SearchTask>& out) const {
    if (task.depth >= kSplitDepth || task.available == 0) {
      out.push_back(task);
      return;
    }
    const auto t = static_cast<std::size_t>(std::countr_zero(task.available));
    const Mask rest = task.available & ~bit(t);
    expand({task.included | bit(t), forward_check(task.included | bit(t), rest), task.depth + 1}, out);
    expand({task.included, rest, task.depth + 1}, out);
  }

  void run_tasks(const std::vector<SearchTask>& tasks) {
    const auto jobs = std::max<std::size_t>(1, std::min(options_.jobs, tasks.size()));
    workers_.assign(jobs, Worker{});
    std::atomic<std::size_t> next{0};
    auto body = [&](Worker& w) {
      for (auto i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
        dfs(w, tasks[i].included, tasks[i].available, tasks[i].depth);
      }
    };
    if (jobs == 1) {
      body(workers_[0]);
      return;
    }
    std::vector<std::thread> threads;
    for (auto& w : workers_) threads.emplace_back(body, std::ref(w));
    for (auto& th : threads) th.join();
  }

  void dfs(Worker& w, Mask included, Mask available, std::size_t depth) {
    ++w.nodes;
    const auto have = static_cast<std::size_t>(std::popcount(included));
    if (have + static_cast<std::size_t>(std::popcount(available)) < best_.load(std::memory_order_relaxed)) {
      return;
    }
    if (available == 0) {
      record(w, included, have);
      return;
    }
    if (depth <= options_.memo_depth && !first_visit(included, available)) return;
    const auto t = static_cast<std::size_t>(std::countr_zero(available));
    const Mask rest = available & ~bit(t);
    dfs(w, included | bit(t), forward_check(included | bit(t), rest), depth + 1);
    dfs(w, included, rest, depth + 1);
  }

  void record(Worker& w, Mask included, std::size_t count) {
    if (count < w.best) return;
    if (count > w.best) {
      w.best = count;
      w.found.clear();
    }
    w.found.push_back(included);
    for (auto cur = best_.load(); cur < count && !best_.compare_exchange_weak(cur, count);) {
    }
  }

  bool first_visit(Mask included, Mask available) {
    const std::vector<std::vector<Triple>> layers{idx_.edges(included), idx_.edges(available)};
    auto key = canonical_form_layers(n_, layers, kCanonicalHardLimit);
    std::lock_guard lock(memo_mutex_);
    return memo_.insert(std::move(key)).second;
  }

  static constexpr std::size_t kSplitDepth = 4;

  std::size_t n_;
  TripleIndex idx_;
  MaskChecker checker_;
  TuranOptions options_;
  std::atomic<std::size_t> best_{0};
  std::size_t seeded_ = 0;
  std::vector<Worker> workers_;
  std::mutex memo_mutex_;
  std::unordered_set<std::string> memo_;
};

std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

TuranResult exact_turan(std::size_t n, const ForbiddenFamily& family, const TuranOptions& options) {
  if (n > kExactTuranLimit) {
    throw UnsupportedSize("exact_turan: n is limited to " + std::to_string(kExactTuranLimit));
  }
  TuranSearch search(n, family, options);
  return search.run(family);
}

// ------------------------------------------------------------ local search

Hypergraph3 local_search(const Hypergraph3& seed, const ForbiddenFamily& family, std::size_t steps,
                         std::uint64_t rng_seed) {
  if (!family.is_free(seed)) throw InvalidArgument("local_search: seed is not free of the family");
  const auto n = seed.vertex_count();
  Hypergraph3 current = seed;
  if (n < 3) return current;
  std::mt19937_64 rng(rng_seed);
  for (std::size_t step = 0; step < steps; ++step) {
    if (rng() % 2 == 0) {
      // Replace a lower-degree vertex u by a clone of a higher-degree vertex v.
      auto u = static_cast<Vertex>(next_below(rng, n));
      auto v = static_cast<Vertex>(next_below(rng, n));
      const auto du = current.degree(u), dv = current.degree(v);
      if (u == v || du == dv) continue;
      if (du > dv) std::swap(u, v);
      const auto sym = symmetrize(current, VertexSet(n, {u}), v);
      std::vector<Vertex> back(n);
      for (Vertex x = 0; x < n; ++x) {
        if (x != u) back[sym.old_to_new[x]] = x;
      }
      back[sym.clones.front()] = u;
      std::vector<Triple> edges;
      for (const auto& e : sym.graph.edges()) edges.emplace_back(back[e[0]], back[e[1]], back[e[2]]);
      Hypergraph3 candidate(n, std::move(edges));
      if (candidate.edge_count() > current.edge_count() && family.is_free(candidate)) {
        current = std::move(candidate);
      }
    } else {
      const auto a = static_cast<Vertex>(next_below(rng, n));
      const auto b = static_cast<Vertex>(next_below(rng, n));
      const auto c = static_cast<Vertex>(next_below(rng, n));
      if (!is_three_set(a, b, c) || current.contains(a, b, c)) continue;
      const Triple t(a, b, c);
      current.add_edge(t);
      if (!family.is_free(current)) current.remove_edge(t);
    }
  }
  return current;
}

// -------------------------------------------------------- codegree cleaning

CleaningTrace codegree_clean_traced(const Hypergraph3& h, std::size_t threshold) {
  const auto n = h.vertex_count();
  auto key = [n](Vertex a, Vertex b) {
    const auto [x, y] = make_pair_sorted(a, b);
    return std::uint64_t{x} * n + y;
  };
  std::unordered_map<std::uint64_t, std::size_t> codeg;
  for (const auto& e : h.edges()) {
    ++codeg[key(e[0], e[1])];
    ++codeg[key(e[0], e[2])];
    ++codeg[key(e[1], e[2])];
  }
  auto low = [threshold](std::size_t c) { return c > 0 && c < threshold; };
  // The smallest low pair is exactly what a restarted lexicographic scan finds.
  std::set<Pair> pending;
  for (const auto& [k, c] : codeg) {
    if (low(c)) pending.insert(Pair{static_cast<Vertex>(k / n), static_cast<Vertex>(k % n)});
  }
  std::unordered_set<std::uint64_t> removed;
  auto alive = [&](Vertex a, Vertex b, Vertex c) {
    return h.contains(a, b, c) && !removed.contains(Triple(a, b, c).rank());
  };

  CleaningTrace trace;
  while (!pending.empty()) {
    const auto [u, v] = *pending.begin();
    pending.erase(pending.begin());
    trace.steps.push_back({{u, v}, codeg[key(u, v)]});
    for (Vertex w = 0; w < n; ++w) {
      if (!alive(u, v, w)) continue;
      removed.insert(Triple(u, v, w).rank());
      for (const auto& [x, y] : {Pair{u, v}, make_pair_sorted(u, w), make_pair_sorted(v, w)}) {
        auto& c = codeg[key(x, y)];
        --c;
        if (low(c)) {
          pending.insert({x, y});
        } else {
          pending.erase({x, y});
        }
      }
    }
  }
  std::vector<Triple> kept;
  for (const auto& e : h.edges()) {
    if (!removed.contains(e.rank())) kept.push_back(e);
  }
  trace.result = Hypergraph3(n, std::move(kept));
  return trace;
}

Hypergraph3 codegree_clean(const Hypergraph3& h, std::size_t threshold) {
  return codegree_clean_traced(h, threshold).result;
}

// ------------------------------------------------------------- stability

namespace {

Tournament witness_or_throw(const Hypergraph3& h) {
  auto outcome = orient(h);
  if (auto* cert = std::get_if<BottleCertificate>(&outcome)) throw NotOrientable(std::move(*cert));
  return std::get<Tournament>(std::move(outcome));
}

/// Components of the link graph of v that contain at least one link edge,
/// each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> link_components(const Hypergraph3& h, const std::vector<Pair>& link) {
  const auto n = h.vertex_count();
  DisjointSets sets(n);
  std::vector<char> touched(n, 0);
  for (const auto& [x, y] : link) {
    sets.unite(x, y);
    touched[x] = touched[y] = 1;
  }
  std::map<std::size_t, std::vector<Vertex>> by_root;
  for (Vertex x = 0; x < n; ++x) {
    if (touched[x]) by_root[sets.find(x)].push_back(x);
  }
  std::vector<std::vector<Vertex>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace

StabilityResult stability_partition(const Hypergraph3& h) {
  const auto n = h.vertex_count();
  if (n == 0) throw InvalidArgument("stability_partition: empty vertex range");
  const auto t = witness_or_throw(h);
  const auto deg = h.degrees();
  const auto pivot = static_cast<Vertex>(std::max_element(deg.begin(), deg.end()) - deg.begin());
  const auto link = link_graph(h, pivot);
  const auto components = link_components(h, link);

  const std::vector<Vertex>* largest = nullptr;
  for (const auto& c : components) {
    if (!largest || c.size() > largest->size()) largest = &c;
  }
  std::array<std::vector<Vertex>, 3> parts;
  std::vector<char> placed(n, 0);
  if (largest) {
    for (Vertex x : *largest) {
      parts[t.beats(pivot, x) ? 1 : 2].push_back(x);
      placed[x] = 1;
    }
  }
  for (Vertex x = 0; x < n; ++x) {
    if (!placed[x]) parts[0].push_back(x);
  }
  const bool bipartite = std::all_of(link.begin(), link.end(), [&](const Pair& p) {
    return t.beats(pivot, p.first) != t.beats(pivot, p.second);
  });
  Partition3 partition(n, std::move(parts));
  auto report = classify_partition(h, partition);
  return StabilityResult{std::move(partition), std::move(report), pivot, deg[pivot], components.size(),
                         largest ? largest->size() : 0,   bipartite};
}

bool check_link_components_bipartite_complete(const Hypergraph3& h, Vertex v) {
  if (v >= h.vertex_count()) throw InvalidArgument("check_link_components_bipartite_complete: vertex out of range");
  const auto t = witness_or_throw(h);
  const auto link = link_graph(h, v);
  for (const auto& [x, y] : link) {
    if (t.beats(v, x) == t.beats(v, y)) return false;
  }
  for (const auto& comp : link_components(h, link)) {
    std::size_t out = 0;
    for (Vertex x : comp) out += t.beats(v, x) ? 1 : 0;
    const auto in = comp.size() - out;
    const auto edges = static_cast<std::size_t>(std::count_if(link.begin(), link.end(), [&](const Pair& p) {
      return std::binary_search(comp.begin(), comp.end(), p.first);
    }));
    if (edges != out * in) return false;
  }
  return true;
}

}  // namespace turanlab
