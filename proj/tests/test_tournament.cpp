#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "turanlab/error.hpp"
#include "turanlab/tournament.hpp"
#include "turanlab/walks.hpp"

using namespace turanlab;

TEST_SUITE("tournament") {
  TEST_CASE("cyclic triangle count examples") {
    const auto triangle = Tournament::circulant(3, {1});
    CHECK(cyclic_triangle_count(triangle) == 1);
    for (std::size_t n = 0; n < 9; ++n) CHECK(cyclic_triangle_count(Tournament::transitive(n)) == 0);
    // The regular 5-vertex tournament: u -> v iff v - u is 1 or 2 mod 5.
    CHECK(cyclic_triangle_count(Tournament::circulant(5, {1, 2})) == 5);
    CHECK(cyclic_triangle_count(Tournament::quadratic_residue(7)) == 14);
    CHECK(cyclic_triangle_count(Tournament::quadratic_residue(11)) == kendall_smith_bound(11));
  }

  TEST_CASE("residue sets closed under negation do not define tournaments") {
    CHECK_THROWS_AS(Tournament::circulant(5, {1, 4}), InvalidArgument);
    CHECK_THROWS_AS(Tournament::quadratic_residue(5), InvalidArgument);
    CHECK_THROWS_AS(Tournament::quadratic_residue(9), InvalidArgument);
  }

  TEST_CASE("Kendall-Smith bound examples") {
    CHECK(kendall_smith_bound(5) == 5);
    CHECK(kendall_smith_bound(4) == 2);
    CHECK(kendall_smith_bound(1) == 0);
    CHECK(kendall_smith_bound(7) == 14);
  }

  TEST_CASE("closed form, enumeration and oracle agree; scores sum to C(n,2)") {
    std::mt19937_64 rng(29);
    for (std::size_t n = 0; n <= 6; ++n) {
      const std::size_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        const auto t = Tournament::from_code(n, code);
        const auto by_scores = cyclic_triangle_count_by_scores(t);
        CHECK(by_scores == cyclic_triangle_count_by_enumeration(t));
        CHECK(by_scores == oracle::cyclic_triangles(t));
        CHECK(by_scores <= kendall_smith_bound(n));
        std::size_t out = 0;
        for (Vertex v = 0; v < n; ++v) out += t.out_degree(v);
        CHECK(out == pairs);
      }
    }
    for (int trial = 0; trial < 200; ++trial) {
      const auto n = 7 + rng() % 26;
      const auto t = oracle::random_tournament(n, rng);
      CHECK(cyclic_triangle_count(t) == oracle::cyclic_triangles(t));
    }
  }

  TEST_CASE("cyclic hypergraph examples") {
    CHECK(cyclic_hypergraph(Tournament::transitive(6)).empty());
    CHECK(cyclic_hypergraph(Tournament::circulant(3, {1})) == Hypergraph3(3, {{0, 1, 2}}));
    CHECK(cyclic_hypergraph(Tournament::circulant(5, {1, 2})).edge_count() == 5);
  }

  TEST_CASE("cyclic hypergraphs never contain K4-minus") {
    for (std::size_t n = 4; n <= 6; ++n) {
      const std::size_t pairs = n * (n - 1) / 2;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        CHECK_FALSE(naive_contains(cyclic_hypergraph(Tournament::from_code(n, code)), k4_minus(), true));
      }
    }
  }

  TEST_CASE("near-regular set examples and monotonicity") {
    CHECK(near_regular_set(Tournament::circulant(3, {1}), 0.01).size() == 3);
    CHECK(near_regular_set(Tournament::transitive(5), 0.1) == std::vector<Vertex>{2});
    CHECK(near_regular_set(Tournament::transitive(5), 1.0).size() == 5);
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
      const auto t = oracle::random_tournament(12, rng);
      const auto small = near_regular_set(t, 0.05), large = near_regular_set(t, 0.2);
      CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
    }
  }

  TEST_CASE("low-coverage pairs examples and monotonicity") {
    CHECK(low_coverage_pairs(Tournament::circulant(3, {1}), 0.1).empty());
    CHECK(low_coverage_pairs(Tournament::transitive(6), 0.0).size() == 15);
    CHECK(low_coverage_pairs(Tournament::circulant(7, {1, 2, 4}), 5.0 / 7.0).size() == 21);
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 50; ++trial) {
      const auto t = oracle::random_tournament(12, rng);
      const auto small = low_coverage_pairs(t, 0.1), large = low_coverage_pairs(t, 0.3);
      CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
      for (const auto& [u, v] : large) CHECK(pair_cyclic_count(t, u, v) <= static_cast<std::size_t>(0.3 * 12));
    }
  }

  TEST_CASE("D5 matches its arc list") {
    const auto d = d5();
    const std::vector<std::pair<Vertex, Vertex>> arcs{{0, 1}, {0, 2}, {3, 0}, {4, 0}, {1, 2},
                                                      {1, 3}, {1, 4}, {2, 3}, {4, 2}, {4, 3}};
    CHECK(d == Tournament::from_arcs(5, arcs));
    CHECK(d.is_cyclic(0, 1, 3));
    CHECK(cyclic_triangle_count(d) > 0);
    CHECK(pair_cyclic_count(d, 3, 4) == 0);
  }

  TEST_CASE("count_induced examples") {
    CHECK(count_induced(d5(), d5()) == 1);
    CHECK(count_induced(Tournament::transitive(8), d5()) == 0);
    CHECK(count_induced(Tournament::transitive(7), Tournament(1)) == 7);
    CHECK(count_induced(Tournament(3), d5()) == 0);
    // Every 3-subset of a regular 5-tournament spans a transitive or cyclic triangle.
    const auto reg = Tournament::circulant(5, {1, 2});
    CHECK(count_induced(reg, Tournament::circulant(3, {1})) + count_induced(reg, Tournament::transitive(3)) == 10);
  }

  TEST_CASE("t5 family: members contain C5-minus injectively") {
    const auto family = t5_family();
    CHECK(family.size() <= 1024);
    CHECK_FALSE(family.empty());
    const auto cm5 = cycle_minus_one(5);
    std::uint64_t previous = 0;
    bool first = true;
    for (const auto& t : family) {
      CHECK(naive_contains(cyclic_hypergraph(t), cm5, true));
      CHECK(cyclic_triangle_count(t) >= 4);
      if (!first) CHECK(t.code() > previous);
      previous = t.code();
      first = false;
    }
    // Complement: every excluded tournament fails the injective test.
    std::size_t members = 0;
    for (std::uint64_t code = 0; code < 1024; ++code) {
      if (naive_contains(cyclic_hypergraph(Tournament::from_code(5, code)), cm5, true)) ++members;
    }
    CHECK(members == family.size());
    const bool rotational = naive_contains(cyclic_hypergraph(Tournament::circulant(5, {1, 2})), cm5, true);
    const bool listed = std::find(family.begin(), family.end(), Tournament::circulant(5, {1, 2})) != family.end();
    CHECK(rotational == listed);
  }

  TEST_CASE("tournament files round-trip") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
      const auto t = oracle::random_tournament(1 + rng() % 9, rng);
      const auto text = format_tournament(t);
      CHECK(parse_tournament(text) == t);
      CHECK(format_tournament(parse_tournament(text)) == text);
    }
    CHECK_THROWS_AS(parse_tournament("n 3\na 0 1\na 1 2\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_tournament("n 3\na 0 1\na 1 0\na 1 2\n"), InvalidArgument);
  }
}
