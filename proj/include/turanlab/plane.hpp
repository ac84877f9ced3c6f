#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "turanlab/hypergraph.hpp"

namespace turanlab {

using BigRational = boost::multiprecision::cpp_rational;
using Degrees = boost::rational<std::int64_t>;

/// Exact number a + b*sqrt(3) with rational a, b.
class QSqrt3 {
 public:
  QSqrt3() = default;
  QSqrt3(BigRational rational, BigRational root_coefficient = 0)
      : a_(std::move(rational)), b_(std::move(root_coefficient)) {}
  QSqrt3(int value) : a_(value) {}

  static QSqrt3 sqrt3() { return {0, 1}; }

  const BigRational& rational_part() const { return a_; }
  const BigRational& root_part() const { return b_; }

  QSqrt3 operator-() const { return {-a_, -b_}; }
  QSqrt3& operator+=(const QSqrt3& o);
  QSqrt3& operator-=(const QSqrt3& o);
  QSqrt3& operator*=(const QSqrt3& o);
  /// Throws InvalidArgument on division by zero.
  QSqrt3& operator/=(const QSqrt3& o);
  friend QSqrt3 operator+(QSqrt3 x, const QSqrt3& y) { return x += y; }
  friend QSqrt3 operator-(QSqrt3 x, const QSqrt3& y) { return x -= y; }
  friend QSqrt3 operator*(QSqrt3 x, const QSqrt3& y) { return x *= y; }
  friend QSqrt3 operator/(QSqrt3 x, const QSqrt3& y) { return x /= y; }

  bool operator==(const QSqrt3& o) const { return a_ == o.a_ && b_ == o.b_; }
  /// -1, 0 or 1, decided exactly.
  int sign() const;
  bool operator<(const QSqrt3& o) const { return (*this - o).sign() < 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// Nearest double, for display only.
  double approx() const;

 private:
  BigRational a_;
  BigRational b_;
};

struct PlanePoint {
  QSqrt3 x;
  QSqrt3 y;

  bool operator==(const PlanePoint&) const = default;
  /// Total order on exact coordinates, for lookup tables.
  bool operator<(const PlanePoint& o) const;
};

QSqrt3 squared_distance(const PlanePoint& p, const PlanePoint& q);

/// Triangle angles in degrees, sorted ascending.
class TriangleShape {
 public:
  /// Throws InvalidArgument unless every angle lies in (0, 180) and they sum to 180.
  TriangleShape(Degrees a, Degrees b, Degrees c);

  static TriangleShape equilateral() { return {60, 60, 60}; }
  /// "equilateral" or three comma-separated angles such as "30,60,90" or "45/2,135/2,90".
  static TriangleShape parse(const std::string& text);

  const std::array<Degrees, 3>& angles() const { return angles_; }
  bool is_equilateral() const { return angles_[0] == Degrees(60) && angles_[2] == Degrees(60); }
  std::string to_string() const;

 private:
  std::array<Degrees, 3> angles_;
};

/// Vertices are point indices; {a,b,c} is an edge when the triangle is
/// non-degenerate and its sorted angles lie within eps degrees of the
/// shape's, coordinate by coordinate.
///
/// eps = 0 with every shape angle a multiple of 15 degrees is decided
/// exactly (equal side lengths for the equilateral shape, squared cosines
/// otherwise). Every other case uses outward-rounded interval arithmetic and
/// throws Indeterminate when a comparison cannot be certified. Duplicate
/// points throw InvalidArgument.
Hypergraph3 similarity_hypergraph(const std::vector<PlanePoint>& points, const TriangleShape& shape,
                                  Degrees eps);

struct ColoredPoint {
  PlanePoint point;
  int color = 0;
  std::int64_t x = 0;  // lattice coordinates: point = x*(1,0) + y*(1/2, sqrt(3)/2)
  std::int64_t y = 0;
};

/// All lattice points with |x|, |y| <= radius, coloured (x + 2y) mod 3.
std::vector<ColoredPoint> lattice_patch(std::int64_t radius);

PlanePoint lattice_point(std::int64_t x, std::int64_t y);

/// Every unit equilateral triangle inside the patch sees three colours.
bool rainbow_check(const std::vector<ColoredPoint>& patch);

/// Points of a coloured patch, in order.
std::vector<PlanePoint> points_of(const std::vector<ColoredPoint>& patch);

/// The hypergraph of equilateral triangles on `points` is free of every
/// pseudo-cycle minus one edge of size 4..max_length (sizes divisible by 3 excluded).
bool equilateral_cm_free_check(const std::vector<PlanePoint>& points, std::size_t max_length);

/// Vertex cap of the forbidden family that the triangle reduction produces: L + 3.
inline constexpr std::size_t triangle_family_vertex_cap(std::size_t max_length) { return max_length + 3; }

/// Lines "p ax bx ay by" with x = ax + bx*sqrt(3), y = ay + by*sqrt(3), each
/// coefficient an integer or "num/den". Blank lines and '#' comments are skipped.
std::vector<PlanePoint> read_points(std::istream& in);
void write_points(std::ostream& out, const std::vector<PlanePoint>& points);
std::vector<PlanePoint> parse_points(const std::string& text);
std::string format_points(const std::vector<PlanePoint>& points);

/// Integer, "num/den" or decimal ("0.25") text.
BigRational parse_rational(const std::string& text);
Degrees parse_degrees(const std::string& text);

}  // namespace turanlab
