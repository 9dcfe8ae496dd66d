#pragma once

#include <string>
#include <variant>
#include <vector>

#include "shadowpack/constants.hpp"
#include "shadowpack/interval.hpp"

namespace shadowpack {

/// Exact rational or certified interval; arithmetic promotes to interval
/// as soon as one operand is inexact.
class Scalar {
 public:
  Scalar() : v_(Rat(0)) {}
  Scalar(Rat r) : v_(std::move(r)) {}
  Scalar(Interval iv) : v_(std::move(iv)) {}

  bool is_exact() const { return std::holds_alternative<Rat>(v_); }
  const Rat& rat() const { return std::get<Rat>(v_); }
  Interval as_interval() const {
    if (is_exact()) return Interval(rat());
    return std::get<Interval>(v_);
  }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;

  std::string str() const;

 private:
  std::variant<Rat, Interval> v_;
};

/// Density upper bound vol/(vol + mu); mu must be certainly nonnegative.
Scalar upper_bound_from_mu(const Rat& vol, const Scalar& mu);
Scalar upper_bound_from_mu_bar(const Rat& vol, const Scalar& mu_bar);
/// Lower bound on the axis shadow measure from one quadrant: 4 * mu1.
Scalar quadrant_combine(const Scalar& mu1);
/// Upper bound induced on K by a bound for its difference body:
/// (8 vol(K) / vol(D(K))) * bound.  The ratio may not exceed 1.
Scalar transfer_difference_body(const Scalar& bound_dk, const Rat& vol_k, const Rat& vol_dk);

struct BoundReport {
  std::string body;
  std::string measure_kind;  // mu | mu_bar | quadrant
  Scalar measure;
  std::vector<std::string> directions;
  Scalar bound;
  std::vector<std::string> chain;  // applied rules, in order
};

struct MainTheoremReport {
  BoundReport cubocta;
  BoundReport tetra;
};

/// Composes the quadrant value, the quadrant combination, the density
/// bound and the difference-body transfer, and certifies the resulting
/// enclosures against the closed forms to width 1e-9.  Throws when the
/// certification fails.
MainTheoremReport main_theorem();

}  // namespace shadowpack
