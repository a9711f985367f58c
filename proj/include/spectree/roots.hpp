#ifndef SPECTREE_ROOTS_HPP
#define SPECTREE_ROOTS_HPP

#include <vector>

#include "spectree/polynomial.hpp"

namespace spectree {

/// An isolating interval for one real root of `poly`: the polynomial has
/// exactly one root in [lo, hi], and the endpoints are not roots unless
/// lo == hi (the root itself is rational and known exactly).
struct RootInterval {
  IntPoly poly;
  Rat lo;
  Rat hi;

  bool is_point() const { return lo == hi; }
  Rat midpoint() const { return (lo + hi) / 2; }
  Rat width() const { return hi - lo; }
};

/// Sturm chain of a squarefree polynomial; every entry is primitive with
/// the sign pattern of the rational-division chain preserved.
std::vector<IntPoly> sturm_chain(const IntPoly& p);

/// Sign variations of the chain evaluated at x (zeros skipped).
int sign_variations(const std::vector<IntPoly>& chain, const Rat& x);

/// Number of distinct real roots of a squarefree polynomial.
int count_real_roots(const IntPoly& p);

/// Isolating intervals for all real roots of a squarefree polynomial,
/// sorted ascending. Throws kNotSquarefree on repeated roots.
std::vector<RootInterval> isolate_roots(const IntPoly& p);

/// Shrinks the interval below `max_width` (bisection by sign); the
/// contained root never escapes. Returns a point interval when the root
/// is hit exactly.
RootInterval refine(RootInterval iv, const Rat& max_width);

/// Exact order of the two algebraic numbers: -1, 0, +1. Equality is
/// decided through a gcd witness; otherwise the intervals are refined
/// until disjoint.
int compare_roots(const RootInterval& a, const RootInterval& b);

/// Exact order of the root against a rational value.
int compare_root_rational(const RootInterval& a, const Rat& value);

/// Decimal approximation of the root to `digits` fractional digits.
/// Presentational only.
std::string decimal_approx(const RootInterval& iv, int digits);

}  // namespace spectree

#endif  // SPECTREE_ROOTS_HPP
