#include "turanlab/plane.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "turanlab/error.hpp"
#include "turanlab/text_util.hpp"
#include "turanlab/walks.hpp"

namespace turanlab {

// ------------------------------------------------------------------ QSqrt3

QSqrt3& QSqrt3::operator+=(const QSqrt3& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt3& QSqrt3::operator-=(const QSqrt3& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt3& QSqrt3::operator*=(const QSqrt3& o) {
  BigRational a = a_ * o.a_ + 3 * b_ * o.b_;
  BigRational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QSqrt3& QSqrt3::operator/=(const QSqrt3& o) {
  // Multiply through by the conjugate c - d*sqrt(3); the norm c^2 - 3d^2 is non-zero.
  const BigRational norm = o.a_ * o.a_ - 3 * o.b_ * o.b_;
  if (norm == 0) throw InvalidArgument("QSqrt3: division by zero");
  *this *= QSqrt3(o.a_, -o.b_);
  a_ /= norm;
  b_ /= norm;
  return *this;
}

int QSqrt3::sign() const {
  const int sa = a_.sign(), sb = b_.sign();
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // Opposite signs: compare a^2 with 3b^2.
  const BigRational lhs = a_ * a_, rhs = 3 * b_ * b_;
  return lhs > rhs ? sa : sb;
}

double QSqrt3::approx() const {
  return static_cast<double>(a_) + static_cast<double>(b_) * std::numbers::sqrt3;
}

bool PlanePoint::operator<(const PlanePoint& o) const {
  auto key = [](const PlanePoint& p) {
    return std::tie(p.x.rational_part(), p.x.root_part(), p.y.rational_part(), p.y.root_part());
  };
  return key(*this) < key(o);
}

QSqrt3 squared_distance(const PlanePoint& p, const PlanePoint& q) {
  const auto dx = p.x - q.x, dy = p.y - q.y;
  return dx * dx + dy * dy;
}

// ------------------------------------------------------------- shapes

TriangleShape::TriangleShape(Degrees a, Degrees b, Degrees c) : angles_{a, b, c} {
  std::sort(angles_.begin(), angles_.end());
  if (angles_[0] <= 0 || angles_[2] >= 180) {
    throw InvalidArgument("triangle shape: angles must lie strictly between 0 and 180 degrees");
  }
  if (a + b + c != Degrees(180)) throw InvalidArgument("triangle shape: angles must sum to 180 degrees");
}

TriangleShape TriangleShape::parse(const std::string& text) {
  if (text == "equilateral") return equilateral();
  std::vector<Degrees> parts;
  std::stringstream in(text);
  for (std::string field; std::getline(in, field, ',');) parts.push_back(parse_degrees(field));
  if (parts.size() != 3) throw InvalidArgument("triangle shape: expected 'equilateral' or three angles 'a,b,c'");
  return {parts[0], parts[1], parts[2]};
}

std::string TriangleShape::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) out << ',';
    out << angles_[i].numerator();
    if (angles_[i].denominator() != 1) out << '/' << angles_[i].denominator();
  }
  return out.str();
}

// ------------------------------------------------------- interval arithmetic

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x, int ulps = 1) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, -kInf);
  return x;
}
double up(double x, int ulps = 1) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, kInf);
  return x;
}

/// Closed interval; every operation rounds outward by at least one ulp.
struct Interval {
  double lo;
  double hi;

  static Interval of(const BigRational& r) {
    const auto d = static_cast<double>(r);
    return {down(d, 2), up(d, 2)};
  }
  static Interval of(const Degrees& r) {
    return of(BigRational(r.numerator()) / BigRational(r.denominator()));
  }

  friend Interval operator+(Interval x, Interval y) { return {down(x.lo + y.lo), up(x.hi + y.hi)}; }
  friend Interval operator-(Interval x, Interval y) { return {down(x.lo - y.hi), up(x.hi - y.lo)}; }
  friend Interval operator*(Interval x, Interval y) {
    const double p[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
    return {down(*std::min_element(p, p + 4)), up(*std::max_element(p, p + 4))};
  }
  friend Interval operator/(Interval x, Interval y) {
    if (y.lo <= 0 && y.hi >= 0) throw Indeterminate("interval division by an interval containing zero");
    const double p[4] = {x.lo / y.lo, x.lo / y.hi, x.hi / y.lo, x.hi / y.hi};
    return {down(*std::min_element(p, p + 4)), up(*std::max_element(p, p + 4))};
  }
};

const Interval kSqrt3{down(std::sqrt(3.0)), up(std::sqrt(3.0))};
// The double nearest pi lies below it.
const Interval kPi{std::numbers::pi, up(std::numbers::pi)};

Interval enclose(const QSqrt3& v) { return Interval::of(v.rational_part()) + Interval::of(v.root_part()) * kSqrt3; }

Interval sqrt_of(Interval x) { return {down(std::sqrt(std::max(0.0, x.lo))), up(std::sqrt(std::max(0.0, x.hi)))}; }

/// Angle in degrees with the given cosine enclosure. libm acos is faithful to
/// a few ulps, so the result is widened by four.
Interval acos_degrees(Interval c) {
  const double lo = std::clamp(c.lo, -1.0, 1.0), hi = std::clamp(c.hi, -1.0, 1.0);
  const Interval radians{std::max(0.0, down(std::acos(hi), 4)), up(std::acos(lo), 4)};
  return radians * Interval{180, 180} / kPi;
}

/// cos(30k degrees) for k = 0..11 as exact values.
QSqrt3 cos_multiple_of_30(std::int64_t k) {
  const BigRational half(1, 2);
  switch (((k % 12) + 12) % 12) {
    case 0: return 1;
    case 1: return {0, half};
    case 2: return {half};
    case 3: return 0;
    case 4: return {-half};
    case 5: return {0, -half};
    case 6: return -1;
    case 7: return {0, -half};
    case 8: return {-half};
    case 9: return 0;
    case 10: return {half};
    default: return {0, half};
  }
}

/// Exact description of an angle in (0,180): the sign of its cosine and the squared cosine.
struct CosineKey {
  int sign;
  QSqrt3 squared;
  bool operator==(const CosineKey&) const = default;
};

bool exact_shape(const TriangleShape& shape) {
  return std::all_of(shape.angles().begin(), shape.angles().end(),
                     [](const Degrees& a) { return a.denominator() == 1 && a.numerator() % 15 == 0; });
}

CosineKey shape_key(const Degrees& angle) {
  const auto k = angle.numerator() / 15;  // angle = 15k degrees
  // cos^2(t) = (1 + cos 2t) / 2 and 2t is a multiple of 30.
  const auto squared = (QSqrt3(1) + cos_multiple_of_30(k)) * QSqrt3(BigRational(1, 2));
  const int sign = angle < 90 ? 1 : (angle == Degrees(90) ? 0 : -1);
  return {sign, squared};
}

struct Triangle {
  std::array<QSqrt3, 3> opposite;  // squared side opposite each vertex
};

/// cos(A) = (b^2 + c^2 - a^2) / (2bc): numerator exact, squared cosine exact.
CosineKey triangle_key(const Triangle& t, int i) {
  const auto& a2 = t.opposite[static_cast<std::size_t>(i)];
  const auto& b2 = t.opposite[static_cast<std::size_t>((i + 1) % 3)];
  const auto& c2 = t.opposite[static_cast<std::size_t>((i + 2) % 3)];
  const auto num = b2 + c2 - a2;
  return {num.sign(), num * num / (QSqrt3(4) * b2 * c2)};
}

bool matches_exactly(const Triangle& t, const std::array<CosineKey, 3>& shape) {
  const std::array<CosineKey, 3> keys{triangle_key(t, 0), triangle_key(t, 1), triangle_key(t, 2)};
  std::array<int, 3> perm{0, 1, 2};
  do {
    bool all = true;
    for (int i = 0; i < 3 && all; ++i) all = keys[static_cast<std::size_t>(i)] == shape[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    if (all) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool matches_certified(const Triangle& t, const TriangleShape& shape, const Degrees& eps) {
  std::array<Interval, 3> sides2;
  for (int i = 0; i < 3; ++i) sides2[static_cast<std::size_t>(i)] = enclose(t.opposite[static_cast<std::size_t>(i)]);
  std::array<double, 3> lows{}, highs{};
  for (int i = 0; i < 3; ++i) {
    const auto b2 = sides2[static_cast<std::size_t>((i + 1) % 3)];
    const auto c2 = sides2[static_cast<std::size_t>((i + 2) % 3)];
    const auto num = enclose(t.opposite[static_cast<std::size_t>((i + 1) % 3)] + t.opposite[static_cast<std::size_t>((i + 2) % 3)] -
                             t.opposite[static_cast<std::size_t>(i)]);
    const auto angle = acos_degrees(num / (Interval{2, 2} * sqrt_of(b2 * c2)));
    lows[static_cast<std::size_t>(i)] = angle.lo;
    highs[static_cast<std::size_t>(i)] = angle.hi;
  }
  // The k-th smallest of the lower (upper) bounds bounds the k-th smallest angle.
  std::sort(lows.begin(), lows.end());
  std::sort(highs.begin(), highs.end());
  const auto tol = Interval::of(eps);
  bool uncertain = false;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto diff = Interval{lows[i], highs[i]} - Interval::of(shape.angles()[i]);
    if (diff.lo > tol.hi || diff.hi < -tol.hi) return false;
    if (!(diff.hi <= tol.lo && diff.lo >= -tol.lo)) uncertain = true;
  }
  if (uncertain) throw Indeterminate("similarity_hypergraph: angle comparison could not be certified");
  return true;
}

bool collinear(const PlanePoint& p, const PlanePoint& q, const PlanePoint& r) {
  return ((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)).is_zero();
}

}  // namespace

Hypergraph3 similarity_hypergraph(const std::vector<PlanePoint>& points, const TriangleShape& shape,
                                  Degrees eps) {
  if (eps < 0) throw InvalidArgument("similarity_hypergraph: eps must be non-negative");
  const auto n = points.size();
  {
    auto sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidArgument("similarity_hypergraph: duplicate points");
    }
  }
  std::vector<QSqrt3> dist(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) dist[i * n + j] = dist[j * n + i] = squared_distance(points[i], points[j]);
  }
  const bool exact = eps == Degrees(0) && exact_shape(shape);
  const bool equilateral = exact && shape.is_equilateral();
  std::array<CosineKey, 3> keys{};
  if (exact) {
    for (std::size_t i = 0; i < 3; ++i) keys[i] = shape_key(shape.angles()[i]);
  }

  std::vector<Triple> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto& ab = dist[a * n + b];
      for (std::size_t c = b + 1; c < n; ++c) {
        bool edge;
        if (equilateral) {
          edge = ab == dist[a * n + c] && ab == dist[b * n + c];
        } else {
          if (collinear(points[a], points[b], points[c])) continue;
          const Triangle t{{dist[b * n + c], dist[a * n + c], ab}};
          edge = exact ? matches_exactly(t, keys) : matches_certified(t, shape, eps);
        }
        if (edge) edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c));
      }
    }
  }
  return Hypergraph3(n, std::move(edges));
}

// ------------------------------------------------------------- lattice

PlanePoint lattice_point(std::int64_t x, std::int64_t y) {
  const BigRational half(1, 2);
  return {QSqrt3(BigRational(x) + BigRational(y) * half), QSqrt3(0, BigRational(y) * half)};
}

std::vector<ColoredPoint> lattice_patch(std::int64_t radius) {
  if (radius < 0) throw InvalidArgument("lattice_patch: radius must be non-negative");
  std::vector<ColoredPoint> out;
  for (auto x = -radius; x <= radius; ++x) {
    for (auto y = -radius; y <= radius; ++y) {
      out.push_back({lattice_point(x, y), static_cast<int>((((x + 2 * y) % 3) + 3) % 3), x, y});
    }
  }
  return out;
}

std::vector<PlanePoint> points_of(const std::vector<ColoredPoint>& patch) {
  std::vector<PlanePoint> out;
  out.reserve(patch.size());
  for (const auto& p : patch) out.push_back(p.point);
  return out;
}

bool rainbow_check(const std::vector<ColoredPoint>& patch) {
  std::map<PlanePoint, int> color;
  for (const auto& p : patch) color.emplace(p.point, p.color);
  const QSqrt3 half(BigRational(1, 2));
  const QSqrt3 half_root(0, BigRational(1, 2));
  for (const auto& p : patch) {
    for (const auto& q : patch) {
      if (squared_distance(p.point, q.point) != QSqrt3(1)) continue;
      // Third corner: rotate q - p by 60 degrees about p.
      const auto dx = q.point.x - p.point.x, dy = q.point.y - p.point.y;
      const PlanePoint r{p.point.x + dx * half - dy * half_root, p.point.y + dx * half_root + dy * half};
      const auto it = color.find(r);
      if (it == color.end()) continue;
      if (p.color == q.color || p.color == it->second || q.color == it->second) return false;
    }
  }
  return true;
}

bool equilateral_cm_free_check(const std::vector<PlanePoint>& points, std::size_t max_length) {
  return is_fcm_free(similarity_hypergraph(points, TriangleShape::equilateral(), 0), max_length).free;
}

// ------------------------------------------------------------------- I/O

BigRational parse_rational(const std::string& text) {
  try {
    if (const auto slash = text.find('/'); slash != std::string::npos) {
      const boost::multiprecision::cpp_int num(text.substr(0, slash)), den(text.substr(slash + 1));
      if (den == 0) throw InvalidArgument("rational '" + text + "' has a zero denominator");
      return BigRational(num, den);
    }
    if (const auto dot = text.find('.'); dot != std::string::npos) {
      const auto frac = text.substr(dot + 1);
      const bool negative = !text.empty() && text[0] == '-';
      auto whole = text.substr(0, dot);
      if (whole.empty() || whole == "-" || whole == "+") whole += "0";
      boost::multiprecision::cpp_int scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      const boost::multiprecision::cpp_int int_part(whole);
      const boost::multiprecision::cpp_int frac_part(frac.empty() ? "0" : frac);
      BigRational r(int_part);
      r += BigRational(frac_part, scale) * (negative ? -1 : 1);
      return r;
    }
    return BigRational(boost::multiprecision::cpp_int(text));
  } catch (const InvalidArgument&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidArgument("malformed rational '" + text + "'");
  }
}

Degrees parse_degrees(const std::string& text) {
  const auto r = parse_rational(text);
  const auto num = numerator(r), den = denominator(r);
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  if (abs(num) > kMax || den > kMax) throw InvalidArgument("angle '" + text + "' is out of range");
  return Degrees(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

namespace {

std::string format_rational(const BigRational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace

std::vector<PlanePoint> read_points(std::istream& in) {
  LineReader reader(in, "points");
  std::vector<PlanePoint> out;
  while (auto fields = reader.next()) {
    if (fields->size() != 5 || (*fields)[0] != "p") {
      throw InvalidArgument(reader.where() + ": expected 'p ax bx ay by'");
    }
    try {
      out.push_back({QSqrt3(parse_rational((*fields)[1]), parse_rational((*fields)[2])),
                     QSqrt3(parse_rational((*fields)[3]), parse_rational((*fields)[4]))});
    } catch (const InvalidArgument& e) {
      throw InvalidArgument(reader.where() + ": " + e.what());
    }
  }
  return out;
}

void write_points(std::ostream& out, const std::vector<PlanePoint>& points) {
  for (const auto& p : points) {
    out << "p " << format_rational(p.x.rational_part()) << ' ' << format_rational(p.x.root_part()) << ' '
        << format_rational(p.y.rational_part()) << ' ' << format_rational(p.y.root_part()) << '\n';
  }
}

std::vector<PlanePoint> parse_points(const std::string& text) {
  std::istringstream in(text);
  return read_points(in);
}

std::string format_points(const std::vector<PlanePoint>& points) {
  std::ostringstream out;
  write_points(out, points);
  return out.str();
}

}  // namespace turanlab
