#include "turanlab/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "turanlab/error.hpp"

namespace turanlab {

namespace {

using Mask = unsigned __int128;

struct Labeling {
  std::vector<Vertex> order;                      // vertices in invariant order
  std::vector<std::pair<std::size_t, std::size_t>> classes;  // [begin, end) in order
};

Labeling degree_classes(std::size_t n, std::span<const std::vector<Triple>> layers) {
  std::vector<std::vector<std::size_t>> inv(n, std::vector<std::size_t>(layers.size(), 0));
  for (std::size_t l = 0; l < layers.size(); ++l) {
    for (const auto& t : layers[l]) {
      for (Vertex x : t.vertices()) ++inv[x][l];
    }
  }
  Labeling lab;
  lab.order.resize(n);
  std::iota(lab.order.begin(), lab.order.end(), Vertex{0});
  std::stable_sort(lab.order.begin(), lab.order.end(),
                   [&](Vertex a, Vertex b) { return inv[a] < inv[b]; });
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && inv[lab.order[j]] == inv[lab.order[i]]) ++j;
    lab.classes.emplace_back(i, j);
    i = j;
  }
  return lab;
}

std::string encode(std::size_t n, const std::vector<Mask>& masks) {
  std::string out;
  out.push_back(static_cast<char>(n));
  for (Mask m : masks) {
    for (int byte = 15; byte >= 0; --byte) {
      out.push_back(static_cast<char>(static_cast<unsigned char>(m >> (8 * byte))));
    }
  }
  return out;
}

}  // namespace

std::string canonical_form_layers(std::size_t n, std::span<const std::vector<Triple>> layers,
                                  std::size_t limit) {
  if (n > limit || n > kCanonicalHardLimit) {
    throw UnsupportedSize("canonical_form: n=" + std::to_string(n) + " exceeds limit " +
                          std::to_string(std::min(limit, kCanonicalHardLimit)));
  }
  for (const auto& layer : layers) {
    for (const auto& t : layer) {
      if (t[2] >= n) throw InvalidArgument("canonical_form: edge out of range");
    }
  }

  Labeling lab = degree_classes(n, layers);
  // `slots` holds, per class, the vertices to place in that class's label range.
  std::vector<Vertex> slots = lab.order;
  for (auto [b, e] : lab.classes) std::sort(slots.begin() + static_cast<long>(b), slots.begin() + static_cast<long>(e));

  std::vector<Vertex> label(n);
  std::vector<Mask> best, current(layers.size());
  bool have_best = false;

  while (true) {
    for (std::size_t pos = 0; pos < n; ++pos) label[slots[pos]] = static_cast<Vertex>(pos);
    for (std::size_t l = 0; l < layers.size(); ++l) {
      Mask m = 0;
      for (const auto& t : layers[l]) {
        m |= Mask{1} << Triple(label[t[0]], label[t[1]], label[t[2]]).rank();
      }
      current[l] = m;
    }
    if (!have_best || current > best) {
      best = current;
      have_best = true;
    }

    // Odometer over per-class permutations.
    std::size_t c = 0;
    for (; c < lab.classes.size(); ++c) {
      auto [b, e] = lab.classes[c];
      if (std::next_permutation(slots.begin() + static_cast<long>(b), slots.begin() + static_cast<long>(e))) break;
    }
    if (c == lab.classes.size()) break;
  }
  if (!have_best) best.assign(layers.size(), 0);
  return encode(n, best);
}

std::string canonical_form(const Hypergraph3& h, std::size_t limit) {
  const std::vector<Triple>& edges = h.edges();
  return canonical_form_layers(h.vertex_count(), std::span(&edges, 1), limit);
}

std::string to_hex(const std::string& bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (char ch : bytes) {
    const auto b = static_cast<unsigned char>(ch);
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

}  // namespace turanlab
