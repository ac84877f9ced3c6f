#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "turanlab/canonical.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/error.hpp"
#include "turanlab/orientation.hpp"
#include "turanlab/search.hpp"

using namespace turanlab;

namespace {

/// Largest free edge set by trying every subset of triples.
std::size_t brute_turan(std::size_t n, const ForbiddenFamily& family) {
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << oracle::triple_count(n)); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    if (family.is_free(oracle::from_mask(n, mask))) best = size;
  }
  return best;
}

std::set<std::vector<Vertex>> parts_of(const Partition3& p) {
  return {p.part(0), p.part(1), p.part(2)};
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("family constructors") {
    CHECK(ForbiddenFamily().name() == "empty");
    CHECK(ForbiddenFamily::by_name("k4-minus").members().size() == 1);
    CHECK(ForbiddenFamily::by_name("fcm", 11).kind() == ForbiddenFamily::Kind::CycleMinusOneWalks);
    CHECK(ForbiddenFamily::by_name("fcm", 11).max_length() == 11);
    CHECK_THROWS_AS(ForbiddenFamily::by_name("fcm", 3), InvalidArgument);
    CHECK_THROWS_AS(ForbiddenFamily::by_name("nope"), InvalidArgument);
    CHECK_THROWS_AS(ForbiddenFamily::patterns({Hypergraph3(3)}), InvalidArgument);
    CHECK_THROWS_AS(ForbiddenFamily::patterns({Hypergraph3(8, {{0, 1, 7}})}), InvalidArgument);
    CHECK(ForbiddenFamily::k4_minus().is_free(tight_cycle(5)));
    CHECK_FALSE(ForbiddenFamily::c5_minus().is_free(tight_cycle(5)));
  }

  TEST_CASE("exact Turan examples") {
    for (std::size_t n = 0; n <= 7; ++n) CHECK(exact_turan(n, ForbiddenFamily()).max_edges == oracle::triple_count(n));
    const auto k4 = exact_turan(4, ForbiddenFamily::k4_minus());
    CHECK(k4.max_edges == 2);
    CHECK(k4.extremal_examples.size() == 1);
    CHECK(exact_turan(6, ForbiddenFamily::k4_minus()).max_edges == 10);
    CHECK_THROWS_AS(exact_turan(9, ForbiddenFamily()), UnsupportedSize);
  }

  TEST_CASE("exact Turan agrees with subset enumeration for n <= 5") {
    const std::vector<ForbiddenFamily> families{ForbiddenFamily(), ForbiddenFamily::k4_minus(),
                                                ForbiddenFamily::c5_minus(), ForbiddenFamily::fcm(4),
                                                ForbiddenFamily::fcm(11)};
    for (const auto& family : families) {
      for (std::size_t n = 3; n <= 5; ++n) {
        CAPTURE(family.name());
        CAPTURE(n);
        const auto result = exact_turan(n, family);
        CHECK(result.max_edges == brute_turan(n, family));
        CHECK(result.extremal_examples.size() == result.extremal_forms.size());
        for (const auto& h : result.extremal_examples) {
          CHECK(h.edge_count() == result.max_edges);
          CHECK(family.is_free(h));
        }
      }
    }
  }

  TEST_CASE("extremal examples are the isomorphism classes of maximum free graphs") {
    const auto family = ForbiddenFamily::k4_minus();
    const auto result = exact_turan(5, family);
    std::set<std::string> forms;
    for (std::uint64_t mask = 0; mask < 1024; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != result.max_edges) continue;
      const auto h = oracle::from_mask(5, mask);
      if (family.is_free(h)) forms.insert(canonical_form(h));
    }
    CHECK(std::vector<std::string>(forms.begin(), forms.end()) == result.extremal_forms);
  }

  TEST_CASE("FCM extremal numbers reach the iterated blow-up") {
    for (std::size_t n = 3; n <= 6; ++n) {
      CHECK(exact_turan(n, ForbiddenFamily::fcm(11)).max_edges >= e_n_edge_count(n));
    }
  }

  TEST_CASE("results do not depend on jobs or memo depth") {
    const auto family = ForbiddenFamily::fcm(11);
    const auto base = exact_turan(6, family, {1, 3, true});
    for (TuranOptions options : {TuranOptions{4, 3, true}, TuranOptions{2, 0, false}, TuranOptions{3, 5, true}}) {
      const auto other = exact_turan(6, family, options);
      CHECK(other.max_edges == base.max_edges);
      CHECK(other.extremal_forms == base.extremal_forms);
    }
  }

  TEST_CASE("local search never loses edges and stays free") {
    const auto family = ForbiddenFamily::k4_minus();
    const auto grown = local_search(Hypergraph3(4), family, 200, 1);
    CHECK(grown.edge_count() == 2);
    CHECK(local_search(Hypergraph3(4), family, 200, 1) == grown);
    CHECK_THROWS_AS(local_search(k4_minus(), family, 10, 1), InvalidArgument);
    std::mt19937_64 rng(71);
    const auto fcm = ForbiddenFamily::fcm(8);
    for (int trial = 0; trial < 30; ++trial) {
      auto seed = iterated_blowup(5 + trial % 5);
      const auto out = local_search(seed, fcm, 50, rng());
      CHECK(out.edge_count() >= seed.edge_count());
      CHECK(fcm.is_free(out));
      CHECK(out.vertex_count() == seed.vertex_count());
    }
    CHECK(local_search(Hypergraph3(6), ForbiddenFamily(), 0, 3).empty());
  }

  TEST_CASE("codegree cleaning examples") {
    CHECK(codegree_clean(k4_minus(), 2).empty());
    CHECK(codegree_clean(k4_minus(), 1) == k4_minus());
    CHECK(codegree_clean(k4_minus(), 0) == k4_minus());
    const auto k5 = complete_hypergraph(5);
    CHECK(codegree_clean(k5, 3) == k5);
    CHECK(codegree_clean(k5, 4).empty());
    const auto trace = codegree_clean_traced(k4_minus(), 2);
    REQUIRE_FALSE(trace.steps.empty());
    CHECK(trace.steps.front().pair == Pair{0, 2});
    CHECK(trace.steps.front().codegree == 1);
  }

  TEST_CASE("cleaning reaches a fixed point and is idempotent") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 4 + rng() % 9;
      const std::size_t threshold = rng() % 5;
      const auto h = oracle::random_hypergraph(n, 0.1 + 0.5 * (rng() % 100) / 100.0, rng);
      const auto trace = codegree_clean_traced(h, threshold);
      const auto& out = trace.result;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          const auto c = oracle::codegree(out, u, v);
          CHECK((c == 0 || c >= threshold));
        }
      }
      for (const auto& e : out.edges()) CHECK(h.contains(e));
      CHECK(codegree_clean(out, threshold) == out);
      std::size_t removed = 0;
      for (const auto& step : trace.steps) {
        CHECK(step.codegree >= 1);
        CHECK(step.codegree + 1 <= std::max<std::size_t>(threshold, 1));
        removed += step.codegree;
      }
      CHECK(removed == h.edge_count() - out.edge_count());
    }
  }

  TEST_CASE("stability partition examples") {
    const auto single = stability_partition(Hypergraph3(3, {{0, 1, 2}}));
    CHECK(single.report.crossing.size() == 1);
    CHECK(single.report.bad.empty());
    const auto e9 = stability_partition(iterated_blowup(9));
    CHECK(e9.report.bad.empty());
    CHECK(e9.report.crossing.size() == 27);
    CHECK(parts_of(e9.partition) == std::set<std::vector<Vertex>>{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
    CHECK_THROWS_AS(stability_partition(k4_minus()), NotOrientable);
    CHECK_THROWS_AS(stability_partition(Hypergraph3(0)), InvalidArgument);
  }

  TEST_CASE("stability recovers planted tripartite graphs") {
    std::mt19937_64 rng(79);
    for (std::size_t k = 1; k <= 6; ++k) {
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<Vertex> relabel(3 * k);
        std::iota(relabel.begin(), relabel.end(), 0);
        std::shuffle(relabel.begin(), relabel.end(), rng);
        std::vector<Triple> edges;
        const auto planted_graph = oracle::complete_tripartite(k, k, k);
        for (const auto& e : planted_graph.edges()) {
          edges.emplace_back(relabel[e[0]], relabel[e[1]], relabel[e[2]]);
        }
        const Hypergraph3 h(3 * k, edges);
        std::set<std::vector<Vertex>> planted;
        for (std::size_t part = 0; part < 3; ++part) {
          std::vector<Vertex> members;
          for (std::size_t i = 0; i < k; ++i) members.push_back(relabel[part * k + i]);
          std::sort(members.begin(), members.end());
          planted.insert(members);
        }
        const auto result = stability_partition(h);
        CHECK(result.report.bad.empty());
        CHECK(result.report.missing_crossing.empty());
        CHECK(parts_of(result.partition) == planted);
        CHECK(result.link_bipartite);
      }
    }
  }

  TEST_CASE("link components are complete bipartite") {
    const auto t = oracle::complete_tripartite(2, 3, 2);
    for (Vertex v = 0; v < t.vertex_count(); ++v) CHECK(check_link_components_bipartite_complete(t, v));
    auto holey = t;
    holey.remove_edge(Triple(0, 2, 5));
    CHECK_FALSE(check_link_components_bipartite_complete(holey, 0));
    CHECK(check_link_components_bipartite_complete(Hypergraph3(4), 2));
    CHECK_THROWS_AS(check_link_components_bipartite_complete(k4_minus(), 0), NotOrientable);
  }
}
