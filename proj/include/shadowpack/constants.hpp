#pragma once

#include <string>
#include <vector>

#include "shadowpack/interval.hpp"

namespace shadowpack {

enum class ConstantTag {
  sqrt2,
  sqrt10,
  alpha,        // root of 3x^3 - 6x^2 + 2 in (0, 1)
  beta,         // root of (x-1)^3 - 1/2 in (1, 2)
  thm31_const,  // (4*sqrt2 + 2) / (25 + 22*sqrt2)
  mu1_exact,    // (1/6) * (5/9 - (4/9)*sqrt(1/10))
  bound_C,      // 90*sqrt10 / (95*sqrt10 - 4)
  bound_T,      // 36*sqrt10 / (95*sqrt10 - 4)
  lemma43_const,  // 6 - 12*sqrt(6/29)
};

const std::vector<ConstantTag>& all_constant_tags();
std::string constant_name(ConstantTag tag);
/// Throws std::invalid_argument on unknown names.
ConstantTag parse_constant_tag(const std::string& name);

/// Enclosure of the named constant with width <= width_target.
Interval eval_constant(ConstantTag tag, const Rat& width_target);

/// Substitutes an enclosure of the constant into its defining relation;
/// the result must contain zero.
Interval defining_residual(ConstantTag tag, const Interval& value);

/// Default enclosure width, overridable via SHADOWPACK_PRECISION.
Rat default_width_target();

/// Bundle of the enclosures the inequality registry needs, all computed
/// once at high precision.
struct Constants {
  Interval sqrt2, sqrt10, alpha, beta;
  Interval c_star;         // 5/9 - (4/9)*sqrt(1/10), the mu1 bracket times 6
  Interval thm31_const;    // (4*sqrt2+2)/(25+22*sqrt2)
  Interval lemma43_const;  // 6 - 12*sqrt(6/29)

  static const Constants& get();  // shared instance at 2^-160 width
};

}  // namespace shadowpack
