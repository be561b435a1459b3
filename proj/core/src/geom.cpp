#include "htl/geom.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "htl/builders.hpp"
#include "htl/errors.hpp"

namespace htl {

double PiMultiple::value() const {
  return static_cast<double>(coefficient.numerator()) / static_cast<double>(coefficient.denominator()) *
         std::numbers::pi;
}

std::string PiMultiple::to_string() const {
  return std::to_string(coefficient.numerator()) + "/" + std::to_string(coefficient.denominator()) + "·π";
}

PiMultiple operator*(std::int64_t scale, const PiMultiple& a) { return {a.coefficient * scale}; }
PiMultiple operator*(const Rational& scale, const PiMultiple& a) { return {a.coefficient * scale}; }

TriangleGeometry triangle_geometry(double alpha) {
  constexpr double kThird = std::numbers::pi / 3;
  if (!(alpha > 0 && alpha < kThird)) {
    throw PreconditionError("triangle_geometry: angle must lie in (0, pi/3)");
  }
  TriangleGeometry t;
  t.alpha = alpha;
  t.area = std::numbers::pi - 3 * alpha;
  // Right triangle (centre, vertex, foot): cos A = cosh(opposite) * sin B.
  // The inradius is opposite the vertex angle alpha/2.
  t.inradius = std::acosh(std::cos(alpha / 2) / std::sin(kThird));
  // Hypotenuse: cosh c = cot A * cot B.
  t.circumradius = std::acosh(1 / (std::tan(kThird) * std::tan(alpha / 2)));
  return t;
}

PiMultiple triangle_area(std::int64_t k) {
  if (k < 7) throw PreconditionError("triangle_area: k must be at least 7");
  return {Rational(1) - Rational(6, k)};
}

PiMultiple area_from_chi(long chi) {
  if (chi >= 0) throw PreconditionError("area_from_chi: hyperbolic surfaces have negative Euler characteristic");
  return {Rational(2 * static_cast<std::int64_t>(-chi))};
}

PiMultiple triangle_bound_value(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 3) throw PreconditionError("triangle_bound_value: need n >= 1 and k >= 3");
  // n * (2pi / (3 * 2pi/k)) * (pi - 3 * 2pi/k) = n * (k/3) * (1 - 6/k) * pi
  return {Rational(n) * Rational(k, 3) * (Rational(1) - Rational(6, k))};
}

double triangle_bound_value(std::int64_t n, double alpha) {
  return static_cast<double>(n) * (2 * std::numbers::pi / (3 * alpha)) * (std::numbers::pi - 3 * alpha);
}

bool oriented_minimum_matches(std::int64_t k) {
  const auto r = k % 12;
  return r == 2 || r == 6 || r == 10;
}

MinimalArea minimal_area(std::int64_t k) {
  const std::int64_t n = n_min(k);
  MinimalArea out;
  out.general = {Rational(n * (k - 6), 3)};
  out.oriented = oriented_minimum_matches(k) ? out.general : 2 * out.general;
  out.subgroup_index = 2 * n * k;
  return out;
}

}  // namespace htl
