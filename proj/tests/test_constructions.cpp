#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/error.hpp"
#include "turanlab/walks.hpp"

using namespace turanlab;

namespace {

/// Knapsack over block sizes; a block of size s contributes floor(s^2/4).
std::int64_t xy_sum_knapsack(std::int64_t a, std::int64_t b) {
  std::vector<std::int64_t> best(static_cast<std::size_t>(a) + 1, 0);
  for (std::int64_t total = 1; total <= a; ++total) {
    for (std::int64_t s = 1; s <= std::min(total, b); ++s) {
      best[total] = std::max(best[total], best[total - s] + s * s / 4);
    }
  }
  return best[a];
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("iterated blow-up sizes") {
    CHECK(e_n_edge_count(1) == 0);
    CHECK(e_n_edge_count(2) == 0);
    CHECK(e_n_edge_count(3) == 1);
    CHECK(e_n_edge_count(9) == 30);
    CHECK(iterated_blowup(9).edge_count() == 30);
    for (std::size_t n = 1; n <= 40; ++n) CHECK(iterated_blowup(n).edge_count() == e_n_edge_count(n));
    CHECK(iterated_blowup_parts(10) == std::array<std::size_t, 3>{3, 3, 4});
    CHECK_THROWS_AS(iterated_blowup(0), InvalidArgument);
  }

  TEST_CASE("iterated blow-up structure") {
    const auto h = iterated_blowup(9);
    CHECK(h.contains(0, 3, 6));
    CHECK(h.contains(0, 1, 2));
    CHECK_FALSE(h.contains(0, 1, 3));
    CHECK(h.edge_count() == 27 + 3);
    // Counts obey the recursion |E_n| = product of parts + sum over parts.
    for (std::size_t n = 3; n <= 300; ++n) {
      const auto [a, b, c] = iterated_blowup_parts(n);
      CHECK(a + b + c == n);
      CHECK(e_n_edge_count(n) == a * b * c + e_n_edge_count(a) + e_n_edge_count(b) + e_n_edge_count(c));
    }
  }

  TEST_CASE("edge cap is enforced") {
    const auto count = e_n_edge_count(27);
    CHECK(iterated_blowup(27, count).edge_count() == count);
    CHECK_THROWS_AS(iterated_blowup(27, count - 1), ResourceLimit);
  }

  TEST_CASE("iterated blow-ups are FCM-free") {
    for (std::size_t n = 1; n <= 27; ++n) CHECK(is_fcm_free(iterated_blowup(n), 11).free);
  }

  TEST_CASE("max xy sum examples") {
    CHECK(max_xy_sum_exact(4, 2) == 2);
    CHECK(max_xy_sum_bound(4, 2) == Rational64(2));
    CHECK(max_xy_sum_exact(5, 5) == 6);
    CHECK(max_xy_sum_bound(5, 5) == Rational64(25, 4));
    CHECK(max_xy_sum_exact(1, 1) == 0);
    CHECK(max_xy_sum_bound(1, 1) == Rational64(1, 4));
    CHECK_THROWS_AS(max_xy_sum_exact(25, 3), UnsupportedSize);
    CHECK_THROWS_AS(max_xy_sum_bound(2, 3), InvalidArgument);
    CHECK_THROWS_AS(max_xy_sum_bound(3, 0), InvalidArgument);
  }

  TEST_CASE("max xy sum: exhaustive value matches knapsack and stays under the bound") {
    for (std::int64_t a = 1; a <= kMaxXySumExactLimit; ++a) {
      for (std::int64_t b = 1; b <= a; ++b) {
        const auto exact = max_xy_sum_exact(a, b);
        CHECK(exact == xy_sum_knapsack(a, b));
        CHECK(Rational64(exact) <= max_xy_sum_bound(a, b));
      }
    }
  }
}
