#pragma once

// Hyperbolic area bookkeeping. Every area in this library is a rational
// multiple of pi, so areas are carried exactly as that rational coefficient.

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace htl {

using Rational = boost::rational<std::int64_t>;

/// coefficient * pi
struct PiMultiple {
  Rational coefficient{0};

  double value() const;
  /// "p/q·π"
  std::string to_string() const;

  friend bool operator==(const PiMultiple&, const PiMultiple&) = default;
};

PiMultiple operator*(std::int64_t scale, const PiMultiple& a);
PiMultiple operator*(const Rational& scale, const PiMultiple& a);

/// Regular hyperbolic triangle with all three angles equal to `alpha`.
struct TriangleGeometry {
  double alpha = 0;
  double area = 0;
  double inradius = 0;
  double circumradius = 0;
};

/// Requires 0 < alpha < pi/3. Radii come from splitting the triangle into six
/// right triangles with angles pi/3, alpha/2, pi/2 at centre, vertex and foot.
TriangleGeometry triangle_geometry(double alpha);

/// Area of the regular triangle with angle 2*pi/k, exactly (1 - 6/k) * pi.
PiMultiple triangle_area(std::int64_t k);

/// Gauss-Bonnet area 2*pi*|chi| of a closed hyperbolic surface. chi must be negative.
PiMultiple area_from_chi(long chi);

/// n * (2*pi / (3*alpha)) * A(T) at alpha = 2*pi/k, i.e. n * (k - 6) / 3 * pi.
PiMultiple triangle_bound_value(std::int64_t n, std::int64_t k);

/// Same quantity for an arbitrary angle, as a floating value.
double triangle_bound_value(std::int64_t n, double alpha);

/// True when orientable minimal surfaces are no larger than general ones:
/// k = 2, 6, 10 (mod 12).
bool oriented_minimum_matches(std::int64_t k);

struct MinimalArea {
  PiMultiple general;
  PiMultiple oriented;
  /// Index of a fixed-point-free subgroup in the triangle group: 2*N*k.
  std::int64_t subgroup_index = 0;
};

/// Minimal areas of surfaces tiled by regular triangles of angle 2*pi/k. Requires k >= 7.
MinimalArea minimal_area(std::int64_t k);

}  // namespace htl
