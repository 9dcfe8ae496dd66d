#pragma once

#include <vector>

#include "shadowpack/interval.hpp"
#include "shadowpack/rational.hpp"

namespace shadowpack {

/// Dense univariate polynomial, coefficients[k] is the coefficient of x^k.
struct Polynomial {
  std::vector<Rat> coeffs;

  Rat eval(const Rat& x) const;
  Interval eval(const Interval& x) const;
};

/// Bisects a sign-changing bracket down to the requested width and returns
/// a certified enclosure of the root.  Sign changes are decided exactly at
/// rational endpoints; throws if the polynomial does not change sign.
Interval refine_root(const Polynomial& poly, const Rat& lo, const Rat& hi,
                     const Rat& tol_width);

}  // namespace shadowpack
