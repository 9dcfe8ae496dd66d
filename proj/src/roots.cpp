#include "shadowpack/roots.hpp"

#include <stdexcept>

namespace shadowpack {

Rat Polynomial::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Interval Polynomial::eval(const Interval& x) const {
  Interval acc{Rat(0)};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * x + Interval(*it);
  return acc;
}

Interval refine_root(const Polynomial& poly, const Rat& lo, const Rat& hi,
                     const Rat& tol_width) {
  if (lo >= hi) throw std::invalid_argument("refine_root: empty bracket");
  if (tol_width.sign() <= 0) throw std::invalid_argument("refine_root: nonpositive tolerance");
  Rat a = lo, b = hi;
  Rat fa = poly.eval(a), fb = poly.eval(b);
  if (fa.is_zero()) return Interval(a, a);
  if (fb.is_zero()) return Interval(b, b);
  if (fa.sign() == fb.sign())
    throw std::domain_error("refine_root: no sign change on bracket");
  while (b - a > tol_width) {
    Rat m = (a + b) / Rat(2);
    Rat fm = poly.eval(m);
    if (fm.is_zero()) return Interval(m, m);
    if (fm.sign() == fa.sign()) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return Interval(a, b);
}

}  // namespace shadowpack
