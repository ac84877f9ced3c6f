#include "turanlab/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "turanlab/error.hpp"

namespace turanlab {

namespace {

std::uint64_t choose2(std::uint64_t x) { return x * (x - 1) / 2; }
std::uint64_t choose3(std::uint64_t x) { return x < 3 ? 0 : x * (x - 1) * (x - 2) / 6; }

void require_vertex(const Hypergraph3& h, Vertex v, const char* what) {
  if (v >= h.vertex_count()) {
    throw InvalidArgument(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
  }
}

}  // namespace

Pair make_pair_sorted(Vertex a, Vertex b) { return a < b ? Pair{a, b} : Pair{b, a}; }

Triple::Triple(Vertex a, Vertex b, Vertex c) {
  if (!is_three_set(a, b, c)) {
    throw InvalidArgument("triple has a repeated vertex");
  }
  v_ = {a, b, c};
  std::sort(v_.begin(), v_.end());
}

std::uint64_t Triple::rank() const { return choose3(v_[2]) + (v_[1] < 2 ? 0 : choose2(v_[1])) + v_[0]; }

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : bits_(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::all(std::size_t universe) {
  VertexSet s(universe);
  s.bits_.set();
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= bits_.size()) throw InvalidArgument("vertex set: member out of range");
  bits_.set(v);
}

void VertexSet::erase(Vertex v) {
  if (v < bits_.size()) bits_.reset(v);
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != decltype(bits_)::npos; i = bits_.find_next(i)) {
    out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

Hypergraph3::Hypergraph3(std::size_t vertex_count) : n_(vertex_count) {
  if (dense()) bits_.assign((choose3(n_) + 63) / 64, 0);
}

Hypergraph3::Hypergraph3(std::size_t vertex_count, std::vector<Triple> edges)
    : Hypergraph3(vertex_count) {
  for (const auto& t : edges) check_vertex_range(t);
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InvalidArgument("duplicate edge");
  }
  edges_ = std::move(edges);
  if (dense()) {
    for (const auto& t : edges_) set_bit(t, true);
  }
}

Hypergraph3::Hypergraph3(std::size_t vertex_count,
                         std::initializer_list<std::array<Vertex, 3>> edges)
    : Hypergraph3(vertex_count, [&] {
        std::vector<Triple> out;
        for (const auto& e : edges) out.emplace_back(e[0], e[1], e[2]);
        return out;
      }()) {}

void Hypergraph3::check_vertex_range(const Triple& t) const {
  if (t[2] >= n_) {
    throw InvalidArgument("edge vertex " + std::to_string(t[2]) + " out of range for n=" +
                          std::to_string(n_));
  }
}

void Hypergraph3::set_bit(const Triple& t, bool on) {
  const auto r = t.rank();
  const auto mask = std::uint64_t{1} << (r % 64);
  if (on) {
    bits_[r / 64] |= mask;
  } else {
    bits_[r / 64] &= ~mask;
  }
}

bool Hypergraph3::contains(const Triple& t) const {
  if (t[2] >= n_) return false;
  if (dense()) {
    const auto r = t.rank();
    return (bits_[r / 64] >> (r % 64)) & 1U;
  }
  return std::binary_search(edges_.begin(), edges_.end(), t);
}

bool Hypergraph3::contains(Vertex a, Vertex b, Vertex c) const {
  if (!is_three_set(a, b, c)) return false;
  return contains(Triple(a, b, c));
}

bool Hypergraph3::add_edge(const Triple& t) {
  check_vertex_range(t);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), t);
  if (it != edges_.end() && *it == t) return false;
  edges_.insert(it, t);
  if (dense()) set_bit(t, true);
  return true;
}

bool Hypergraph3::remove_edge(const Triple& t) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), t);
  if (it == edges_.end() || *it != t) return false;
  edges_.erase(it);
  if (dense()) set_bit(t, false);
  return true;
}

std::size_t Hypergraph3::degree(Vertex v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const Triple& t) { return t.contains(v); }));
}

std::vector<std::size_t> Hypergraph3::degrees() const {
  std::vector<std::size_t> d(n_, 0);
  for (const auto& t : edges_) {
    for (Vertex x : t.vertices()) ++d[x];
  }
  return d;
}

CodegreeResult codegree(const Hypergraph3& h, Vertex u, Vertex v, const VertexSet& s) {
  require_vertex(h, u, "codegree");
  require_vertex(h, v, "codegree");
  if (u == v) throw InvalidArgument("codegree: u and v must differ");
  CodegreeResult out{0, VertexSet(h.vertex_count())};
  for (Vertex w : s.members()) {
    if (w < h.vertex_count() && h.contains(u, v, w)) {
      out.neighbors.insert(w);
      ++out.count;
    }
  }
  return out;
}

CodegreeResult codegree(const Hypergraph3& h, Vertex u, Vertex v) {
  return codegree(h, u, v, VertexSet::all(h.vertex_count()));
}

std::vector<Pair> link_graph(const Hypergraph3& h, Vertex v, const VertexSet& s1,
                             const VertexSet& s2) {
  require_vertex(h, v, "link_graph");
  std::vector<Pair> out;
  for (const auto& t : h.edges()) {
    if (!t.contains(v)) continue;
    Vertex x = 0, y = 0;
    bool first = true;
    for (Vertex w : t.vertices()) {
      if (w == v) continue;
      (first ? x : y) = w;
      first = false;
    }
    if ((s1.contains(x) && s2.contains(y)) || (s1.contains(y) && s2.contains(x))) {
      out.push_back(make_pair_sorted(x, y));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Pair> link_graph(const Hypergraph3& h, Vertex v) {
  const auto all = VertexSet::all(h.vertex_count());
  return link_graph(h, v, all, all);
}

Partition3::Partition3(std::size_t vertex_count, std::array<std::vector<Vertex>, 3> parts)
    : n_(vertex_count), parts_(std::move(parts)), owner_(vertex_count, -1) {
  for (int i = 0; i < 3; ++i) {
    auto& p = parts_[static_cast<std::size_t>(i)];
    std::sort(p.begin(), p.end());
    for (Vertex v : p) {
      if (v >= n_) throw InvalidArgument("partition: vertex out of range");
      if (owner_[v] != -1) throw InvalidArgument("partition: parts overlap");
      owner_[v] = i;
    }
  }
  if (std::find(owner_.begin(), owner_.end(), -1) != owner_.end()) {
    throw InvalidArgument("partition: parts do not cover every vertex");
  }
}

PartitionReport classify_partition(const Hypergraph3& h, const Partition3& pi) {
  if (pi.vertex_count() != h.vertex_count()) {
    throw InvalidArgument("classify_partition: vertex count mismatch");
  }
  PartitionReport report;
  for (const auto& t : h.edges()) {
    std::array<int, 3> counts{0, 0, 0};
    for (Vertex x : t.vertices()) ++counts[static_cast<std::size_t>(pi.part_of(x))];
    const int top = std::max({counts[0], counts[1], counts[2]});
    if (top == 1) {
      report.crossing.push_back(t);
    } else if (top == 2) {
      report.bad.push_back(t);
    }
  }
  for (Vertex a : pi.part(0)) {
    for (Vertex b : pi.part(1)) {
      for (Vertex c : pi.part(2)) {
        Triple t(a, b, c);
        if (!h.contains(t)) report.missing_crossing.push_back(t);
      }
    }
  }
  std::sort(report.missing_crossing.begin(), report.missing_crossing.end());
  return report;
}

Hypergraph3 blow_up(const Hypergraph3& h, std::size_t t) {
  if (t == 0) throw InvalidArgument("blow_up: t must be positive");
  std::vector<Triple> edges;
  edges.reserve(h.edge_count() * t * t * t);
  const auto tv = static_cast<Vertex>(t);
  for (const auto& e : h.edges()) {
    for (Vertex i = 0; i < tv; ++i) {
      for (Vertex j = 0; j < tv; ++j) {
        for (Vertex k = 0; k < tv; ++k) {
          edges.emplace_back(e[0] * tv + i, e[1] * tv + j, e[2] * tv + k);
        }
      }
    }
  }
  return Hypergraph3(h.vertex_count() * t, std::move(edges));
}

SymmetrizeResult symmetrize(const Hypergraph3& h, const VertexSet& s, Vertex v) {
  const auto n = h.vertex_count();
  require_vertex(h, v, "symmetrize");
  if (s.universe() != n) throw InvalidArgument("symmetrize: vertex set universe mismatch");
  if (s.contains(v)) throw InvalidArgument("symmetrize: v must not lie in S");

  SymmetrizeResult out{Hypergraph3(n), std::vector<Vertex>(n, SymmetrizeResult::kRemoved), {}};
  Vertex next = 0;
  for (Vertex x = 0; x < n; ++x) {
    if (!s.contains(x)) out.old_to_new[x] = next++;
  }
  for (std::size_t i = 0; i < s.size(); ++i) out.clones.push_back(next++);

  std::vector<Triple> edges;
  for (const auto& e : h.edges()) {
    if (s.contains(e[0]) || s.contains(e[1]) || s.contains(e[2])) continue;
    edges.emplace_back(out.old_to_new[e[0]], out.old_to_new[e[1]], out.old_to_new[e[2]]);
  }
  for (const auto& [x, y] : link_graph(h, v)) {
    if (s.contains(x) || s.contains(y)) continue;
    for (Vertex c : out.clones) edges.emplace_back(c, out.old_to_new[x], out.old_to_new[y]);
  }
  out.graph = Hypergraph3(n, std::move(edges));
  return out;
}

Hypergraph3 k4_minus() { return Hypergraph3(4, {{0, 1, 2}, {1, 2, 3}, {0, 1, 3}}); }

Hypergraph3 complete_hypergraph(std::size_t n) {
  std::vector<Triple> edges;
  const auto nv = static_cast<Vertex>(n);
  for (Vertex a = 0; a < nv; ++a) {
    for (Vertex b = a + 1; b < nv; ++b) {
      for (Vertex c = b + 1; c < nv; ++c) edges.emplace_back(a, b, c);
    }
  }
  return Hypergraph3(n, std::move(edges));
}

}  // namespace turanlab
