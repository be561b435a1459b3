#pragma once

// Minimal proper labelings for every k >= 7, grown from six base families by
// repeated local rewrites.

#include <cstdint>
#include <string>

#include "htl/geom.hpp"
#include "htl/labeling.hpp"

namespace htl {

/// Smallest N >= 1 with 6 | N*k. Requires k >= 7.
std::int64_t n_min(std::int64_t k);

/// n * (1 - k/6), exact.
Rational predicted_chi(std::int64_t k, std::int64_t n);

/// Admissible triangle counts for a tiling by triangles of angle 2*pi/k: t even and k | 3t.
bool eek_admissible(std::int64_t t, std::int64_t k);

/// Residue classes of k mod 12, numbered as the six base families.
enum class Case : std::uint8_t {
  k1 = 1,  // k = 1, 5, 7, 11 (mod 12): six polygons, base k = 7
  k2 = 2,  // k = 2, 10: three polygons, base k = 10, oriented
  k3 = 3,  // k = 3, 9: two polygons, base k = 9
  k4 = 4,  // k = 4, 8: three polygons, base k = 8
  k5 = 5,  // k = 6: one polygon, base k = 18, oriented
  k6 = 6,  // k = 0: one polygon, base k = 12
};

Case case_of(std::int64_t k);

enum class Operation : std::uint8_t { kA, kB, kC, kAlternateBA };

struct CasePlan {
  Case id = Case::k1;
  std::int64_t residue = 0;
  std::int64_t n = 0;
  std::int64_t base_k = 0;
  Operation operation = Operation::kB;
  /// Growth of k per round.
  std::int64_t increment = 0;
  /// Built labelings are already oriented for this k; otherwise the oriented
  /// minimum is reached through the double cover.
  bool oriented_directly = false;
};

/// Requires k >= 7.
CasePlan plan_for(std::int64_t k);

/// The base family of a case as embedded data. Case 5 carries a one-position
/// correction of the reference sequence, which is not proper as given.
Labeling base_labeling(Case id);

/// The Case 5 reference sequence before correction (fails (i)).
Labeling base18_uncorrected();

/// Proper labeling of n_min(k) k-gons with glued chi = predicted_chi(k, n_min(k)).
/// Every intermediate step is re-verified. Throws ConstructionIncomplete when no
/// rewrite site is found and exhaustive search cannot close the gap.
Labeling build(std::int64_t k);

/// Oriented proper labeling of the orientable minimum: n_min(k) k-gons for
/// k = 2, 6, 10 (mod 12), otherwise 2 * n_min(k) from a double cover.
Labeling build_oriented(std::int64_t k);

/// Labeling whose double cover is representable: equal to build(k) except for
/// cases 3 and 4, whose standard chains contain fold pairs.
Labeling build_fold_free(std::int64_t k);

}  // namespace htl
