#include "shadowpack/bounds.hpp"

#include <stdexcept>

namespace shadowpack {

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_exact() && o.is_exact()) return Scalar(rat() + o.rat());
  return Scalar(as_interval() + o.as_interval());
}
Scalar Scalar::operator-(const Scalar& o) const {
  if (is_exact() && o.is_exact()) return Scalar(rat() - o.rat());
  return Scalar(as_interval() - o.as_interval());
}
Scalar Scalar::operator*(const Scalar& o) const {
  if (is_exact() && o.is_exact()) return Scalar(rat() * o.rat());
  return Scalar(as_interval() * o.as_interval());
}
Scalar Scalar::operator/(const Scalar& o) const {
  if (is_exact() && o.is_exact()) return Scalar(rat() / o.rat());
  return Scalar(as_interval() / o.as_interval());
}

std::string Scalar::str() const {
  if (is_exact()) return rat().str();
  const Interval iv = as_interval();
  return "[" + iv.lo_string() + ", " + iv.hi_string() + "]";
}

Scalar upper_bound_from_mu(const Rat& vol, const Scalar& mu) {
  if (vol.sign() <= 0) throw std::invalid_argument("volume must be positive");
  if (mu.as_interval().lo().sign() < 0)
    throw std::invalid_argument("shadow measure must be nonnegative");
  return Scalar(vol) / (Scalar(vol) + mu);
}

Scalar upper_bound_from_mu_bar(const Rat& vol, const Scalar& mu_bar) {
  return upper_bound_from_mu(vol, mu_bar);
}

Scalar quadrant_combine(const Scalar& mu1) {
  if (mu1.as_interval().lo().sign() < 0)
    throw std::invalid_argument("quadrant measure must be nonnegative");
  return Scalar(Rat(4)) * mu1;
}

Scalar transfer_difference_body(const Scalar& bound_dk, const Rat& vol_k, const Rat& vol_dk) {
  if (vol_k.sign() <= 0 || vol_dk.sign() <= 0)
    throw std::invalid_argument("volumes must be positive");
  Rat ratio = Rat(8) * vol_k / vol_dk;
  if (ratio > Rat(1)) throw std::domain_error("difference-body ratio exceeds 1");
  return Scalar(ratio) * bound_dk;
}

MainTheoremReport main_theorem() {
  const Rat w = default_width_target();
  const Rat tol = Rat(1, 1000000000);  // 1e-9 certification width

  Interval mu1 = eval_constant(ConstantTag::mu1_exact, w);
  Scalar mu = quadrant_combine(Scalar(mu1));
  Scalar bound_c = upper_bound_from_mu(Rat(20, 3), mu);

  Interval closed_c = eval_constant(ConstantTag::bound_C, w);
  Interval got_c = bound_c.as_interval();
  if (!got_c.overlaps(closed_c) || got_c.width() > tol || closed_c.width() > tol)
    throw std::runtime_error("main theorem certification failed for the cuboctahedron bound");

  // vol(T) = 8/3 in the rational embedding, vol(D(T)) = 20 vol(T)
  Rat vol_t(8, 3);
  Rat vol_dt = Rat(20) * vol_t;
  Scalar bound_t = transfer_difference_body(bound_c, vol_t, vol_dt);
  Interval closed_t = eval_constant(ConstantTag::bound_T, w);
  Interval got_t = bound_t.as_interval();
  if (!got_t.overlaps(closed_t) || got_t.width() > tol || closed_t.width() > tol)
    throw std::runtime_error("main theorem certification failed for the tetrahedron bound");

  // sandwich against the lattice densities
  if (!(Rat(45, 49) <= got_c.hi()) || !(Rat(18, 49) <= got_t.hi()))
    throw std::runtime_error("main theorem bound dips below the lattice density");

  MainTheoremReport rep;
  rep.cubocta = BoundReport{"cubocta",
                            "quadrant",
                            Scalar(mu1),
                            {"e1"},
                            bound_c,
                            {"quadrant_min_value", "quadrant_combine", "density_from_mu"}};
  rep.tetra = BoundReport{"tetra",
                          "quadrant",
                          Scalar(mu1),
                          {"e1"},
                          bound_t,
                          {"quadrant_min_value", "quadrant_combine", "density_from_mu",
                           "difference_body_transfer"}};
  return rep;
}

}  // namespace shadowpack
