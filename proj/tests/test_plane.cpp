#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "turanlab/error.hpp"
#include "turanlab/plane.hpp"

using namespace turanlab;

namespace {

std::vector<PlanePoint> transform(const std::vector<PlanePoint>& points, const QSqrt3& cos_t, const QSqrt3& sin_t,
                                  const QSqrt3& scale, const PlanePoint& shift) {
  std::vector<PlanePoint> out;
  for (const auto& p : points) {
    out.push_back({scale * (cos_t * p.x - sin_t * p.y) + shift.x, scale * (sin_t * p.x + cos_t * p.y) + shift.y});
  }
  return out;
}

const QSqrt3 kHalf = QSqrt3(BigRational(1, 2));
const QSqrt3 kHalfRoot = QSqrt3(0, BigRational(1, 2));

bool is_subgraph(const Hypergraph3& small, const Hypergraph3& large) {
  return std::all_of(small.edges().begin(), small.edges().end(), [&](const Triple& e) { return large.contains(e); });
}

}  // namespace

TEST_SUITE("plane") {
  TEST_CASE("QSqrt3 arithmetic") {
    const auto r = QSqrt3::sqrt3();
    CHECK(r * r == QSqrt3(3));
    CHECK((QSqrt3(1, 1) * QSqrt3(1, -1)) == QSqrt3(-2));
    CHECK(QSqrt3(1) / QSqrt3(2, 1) == QSqrt3(2, -1));
    CHECK((QSqrt3(BigRational(1, 3), 2) - QSqrt3(BigRational(1, 3), 2)).is_zero());
    CHECK_THROWS_AS(QSqrt3(1) / QSqrt3(0), InvalidArgument);
    CHECK(doctest::Approx(QSqrt3(1, 1).approx()) == 2.7320508075688772);
  }

  TEST_CASE("QSqrt3 sign is exact") {
    CHECK(QSqrt3(0).sign() == 0);
    CHECK(QSqrt3(2, -1).sign() == 1);
    CHECK(QSqrt3(-2, 1).sign() == -1);
    CHECK(QSqrt3(-1, 1).sign() == 1);
    CHECK(QSqrt3(3, -2).sign() == -1);
    // 1351/780 is a convergent of sqrt(3) from above.
    CHECK(QSqrt3(BigRational(1351, 780), -1).sign() == 1);
    CHECK(QSqrt3(BigRational(265, 153), -1).sign() == -1);
    CHECK(QSqrt3(1) < QSqrt3::sqrt3());
    CHECK(QSqrt3::sqrt3() < QSqrt3(2));
  }

  TEST_CASE("triangle shapes") {
    CHECK(TriangleShape::parse("equilateral").is_equilateral());
    const auto s = TriangleShape::parse("90,30,60");
    CHECK(s.angles()[0] == Degrees(30));
    CHECK(s.angles()[2] == Degrees(90));
    CHECK_FALSE(s.is_equilateral());
    CHECK(TriangleShape::parse("45/2,135/2,90").angles()[0] == Degrees(45, 2));
    CHECK_THROWS_AS(TriangleShape::parse("60,60,61"), InvalidArgument);
    CHECK_THROWS_AS(TriangleShape::parse("0,90,90"), InvalidArgument);
    CHECK_THROWS_AS(TriangleShape::parse("60,60"), InvalidArgument);
    CHECK_THROWS_AS(TriangleShape::parse("a,b,c"), InvalidArgument);
  }

  TEST_CASE("similarity hypergraph examples") {
    const std::vector<PlanePoint> unit{lattice_point(0, 0), lattice_point(1, 0), lattice_point(0, 1)};
    CHECK(similarity_hypergraph(unit, TriangleShape::equilateral(), Degrees(0)).edge_count() == 1);
    const std::vector<PlanePoint> line{{0, 0}, {1, 0}, {2, 0}};
    CHECK(similarity_hypergraph(line, TriangleShape::equilateral(), Degrees(0)).empty());
    CHECK(similarity_hypergraph(line, TriangleShape::equilateral(), Degrees(10)).empty());
    const std::vector<PlanePoint> right{{0, 0}, {QSqrt3::sqrt3(), 0}, {0, 1}};
    CHECK(similarity_hypergraph(right, TriangleShape::parse("30,60,90"), Degrees(0)).edge_count() == 1);
    CHECK(similarity_hypergraph(right, TriangleShape::equilateral(), Degrees(0)).empty());
    CHECK(similarity_hypergraph(right, TriangleShape::equilateral(), Degrees(31)).edge_count() == 1);
    CHECK_THROWS_AS(similarity_hypergraph(right, TriangleShape::equilateral(), Degrees(30)), Indeterminate);
    const std::vector<PlanePoint> twice{{0, 0}, {1, 0}, {0, 0}};
    CHECK_THROWS_AS(similarity_hypergraph(twice, TriangleShape::equilateral(), Degrees(0)), InvalidArgument);
  }

  TEST_CASE("equilateral triangles of a patch match the norm oracle") {
    for (std::int64_t r = 0; r <= 3; ++r) {
      const auto patch = lattice_patch(r);
      std::vector<std::pair<std::int64_t, std::int64_t>> coords;
      for (const auto& p : patch) coords.emplace_back(p.x, p.y);
      CHECK(similarity_hypergraph(points_of(patch), TriangleShape::equilateral(), Degrees(0)).edge_count() ==
            oracle::equilateral_triples(coords));
    }
    CHECK(oracle::equilateral_triples({{0, 0}, {1, 0}, {0, 1}, {1, 1}}) == 2);
  }

  TEST_CASE("lattice colours") {
    const auto patch = lattice_patch(2);
    CHECK(patch.size() == 25);
    auto colour = [&](std::int64_t x, std::int64_t y) {
      for (const auto& p : patch)
        if (p.x == x && p.y == y) return p.color;
      return -1;
    };
    CHECK(colour(0, 0) == 0);
    CHECK(colour(1, 0) == 1);
    CHECK(colour(1, 2) == 2);
    CHECK(colour(-1, 0) == 2);
    CHECK(lattice_point(1, 1) == PlanePoint{QSqrt3(BigRational(3, 2)), QSqrt3(0, BigRational(1, 2))});
    CHECK_THROWS_AS(lattice_patch(-1), InvalidArgument);
  }

  TEST_CASE("rainbow colouring") {
    for (std::int64_t r = 0; r <= 6; ++r) CHECK(rainbow_check(lattice_patch(r)));
    auto patch = lattice_patch(3);
    for (auto& p : patch) {
      if (p.x == 0 && p.y == 0) p.color = 1;
    }
    CHECK_FALSE(rainbow_check(patch));
  }

  TEST_CASE("lattice equilateral hypergraph is FCM-free") {
    CHECK(equilateral_cm_free_check(points_of(lattice_patch(3)), 11));
    CHECK(triangle_family_vertex_cap(11) == 14);
  }

  TEST_CASE("exact hypergraphs are invariant under rotation, translation and scaling") {
    const auto points = points_of(lattice_patch(2));
    const PlanePoint shift{QSqrt3(BigRational(1, 3), BigRational(2, 7)), QSqrt3(BigRational(-5, 4), 1)};
    const auto scale = QSqrt3(2, 1);
    for (const char* shape_text : {"equilateral", "30,60,90", "30,30,120"}) {
      CAPTURE(shape_text);
      const auto shape = TriangleShape::parse(shape_text);
      const auto base = similarity_hypergraph(points, shape, Degrees(0));
      CHECK(similarity_hypergraph(transform(points, kHalf, kHalfRoot, 1, {0, 0}), shape, Degrees(0)) == base);
      CHECK(similarity_hypergraph(transform(points, kHalfRoot, kHalf, scale, shift), shape, Degrees(0)) == base);
      CHECK(similarity_hypergraph(transform(points, 1, 0, 1, shift), shape, Degrees(0)) == base);
    }
  }

  TEST_CASE("larger tolerance gives more edges") {
    std::mt19937_64 rng(83);
    std::vector<PlanePoint> points;
    for (int i = 0; i < 14; ++i) {
      points.push_back({QSqrt3(BigRational(static_cast<long>(rng() % 2000), 97)),
                        QSqrt3(BigRational(static_cast<long>(rng() % 2000), 89))});
    }
    const auto shape = TriangleShape::parse("50,60,70");
    const auto tight = similarity_hypergraph(points, shape, Degrees(1));
    const auto mid = similarity_hypergraph(points, shape, Degrees(4));
    const auto loose = similarity_hypergraph(points, shape, Degrees(12));
    CHECK(is_subgraph(tight, mid));
    CHECK(is_subgraph(mid, loose));
    CHECK(loose.edge_count() > tight.edge_count());
  }

  TEST_CASE("point files round-trip") {
    const std::vector<PlanePoint> points{{QSqrt3(BigRational(1, 3), -2), QSqrt3(0, BigRational(5, 7))}, {0, 1}};
    CHECK(parse_points(format_points(points)) == points);
    CHECK(parse_points("# comment\n\np 1 0 0.25 0\n")[0].y == QSqrt3(BigRational(1, 4)));
    CHECK_THROWS_AS(parse_points("p 1 0 0\n"), InvalidArgument);
    CHECK(parse_rational("-3/6") == BigRational(-1, 2));
    CHECK(parse_rational("1.5") == BigRational(3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
    CHECK(parse_degrees("45/2") == Degrees(45, 2));
  }
}
