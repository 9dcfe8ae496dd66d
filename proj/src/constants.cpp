#include "shadowpack/constants.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>

#include "shadowpack/roots.hpp"

namespace shadowpack {

namespace {

const std::map<std::string, ConstantTag>& name_map() {
  static const std::map<std::string, ConstantTag> m = {
      {"sqrt2", ConstantTag::sqrt2},
      {"sqrt10", ConstantTag::sqrt10},
      {"alpha", ConstantTag::alpha},
      {"beta", ConstantTag::beta},
      {"thm31_const", ConstantTag::thm31_const},
      {"mu1_exact", ConstantTag::mu1_exact},
      {"bound_C", ConstantTag::bound_C},
      {"bound_T", ConstantTag::bound_T},
      {"lemma43_const", ConstantTag::lemma43_const},
  };
  return m;
}

Interval eval_at_bits(ConstantTag tag, unsigned bits) {
  const Rat half(1, 2);
  switch (tag) {
    case ConstantTag::sqrt2:
      return sqrt_enclosure(Rat(2), bits);
    case ConstantTag::sqrt10:
      return sqrt_enclosure(Rat(10), bits);
    case ConstantTag::alpha: {
      Polynomial p{{Rat(2), Rat(0), Rat(-6), Rat(3)}};
      Rat tol = Rat(1) / Rat(mpz_class(mpz_class(1) << bits));
      return refine_root(p, Rat(0), Rat(1), tol);
    }
    case ConstantTag::beta: {
      // (x-1)^3 - 1/2 = x^3 - 3x^2 + 3x - 3/2
      Polynomial p{{Rat(-3, 2), Rat(3), Rat(-3), Rat(1)}};
      Rat tol = Rat(1) / Rat(mpz_class(mpz_class(1) << bits));
      return refine_root(p, Rat(1), Rat(2), tol);
    }
    case ConstantTag::thm31_const: {
      Interval s2 = sqrt_enclosure(Rat(2), bits);
      return (Interval(Rat(4)) * s2 + Interval(Rat(2))) /
             (Interval(Rat(25)) + Interval(Rat(22)) * s2);
    }
    case ConstantTag::mu1_exact: {
      Interval r = sqrt_enclosure(Rat(1, 10), bits);
      return (Interval(Rat(5, 9)) - Interval(Rat(4, 9)) * r) * Interval(Rat(1, 6));
    }
    case ConstantTag::bound_C: {
      Interval s10 = sqrt_enclosure(Rat(10), bits);
      return (Interval(Rat(90)) * s10) / (Interval(Rat(95)) * s10 - Interval(Rat(4)));
    }
    case ConstantTag::bound_T: {
      Interval s10 = sqrt_enclosure(Rat(10), bits);
      return (Interval(Rat(36)) * s10) / (Interval(Rat(95)) * s10 - Interval(Rat(4)));
    }
    case ConstantTag::lemma43_const: {
      Interval r = sqrt_enclosure(Rat(6, 29), bits);
      return Interval(Rat(6)) - Interval(Rat(12)) * r;
    }
  }
  throw std::invalid_argument("unknown constant tag");
}

}  // namespace

const std::vector<ConstantTag>& all_constant_tags() {
  static const std::vector<ConstantTag> tags = {
      ConstantTag::sqrt2,       ConstantTag::sqrt10,  ConstantTag::alpha,
      ConstantTag::beta,        ConstantTag::thm31_const, ConstantTag::mu1_exact,
      ConstantTag::bound_C,     ConstantTag::bound_T, ConstantTag::lemma43_const,
  };
  return tags;
}

std::string constant_name(ConstantTag tag) {
  for (const auto& [name, t] : name_map())
    if (t == tag) return name;
  throw std::invalid_argument("unknown constant tag");
}

ConstantTag parse_constant_tag(const std::string& name) {
  auto it = name_map().find(name);
  if (it == name_map().end())
    throw std::invalid_argument("unknown constant name: " + name);
  return it->second;
}

Interval eval_constant(ConstantTag tag, const Rat& width_target) {
  if (width_target.sign() <= 0)
    throw std::invalid_argument("nonpositive width target");
  for (unsigned bits = 64; bits <= 4096; bits *= 2) {
    Interval iv = eval_at_bits(tag, bits);
    if (iv.width() <= width_target) return iv;
  }
  throw std::runtime_error("constant enclosure did not converge: " + constant_name(tag));
}

Interval defining_residual(ConstantTag tag, const Interval& x) {
  unsigned bits = 192;
  switch (tag) {
    case ConstantTag::sqrt2:
      return x.square() - Interval(Rat(2));
    case ConstantTag::sqrt10:
      return x.square() - Interval(Rat(10));
    case ConstantTag::alpha:
      return Interval(Rat(3)) * x.cube() - Interval(Rat(6)) * x.square() + Interval(Rat(2));
    case ConstantTag::beta:
      return (x - Interval(Rat(1))).cube() - Interval(Rat(1, 2));
    case ConstantTag::thm31_const: {
      Interval s2 = sqrt_enclosure(Rat(2), bits);
      return x * (Interval(Rat(25)) + Interval(Rat(22)) * s2) -
             (Interval(Rat(4)) * s2 + Interval(Rat(2)));
    }
    case ConstantTag::mu1_exact: {
      Interval r = sqrt_enclosure(Rat(1, 10), bits);
      return Interval(Rat(6)) * x - (Interval(Rat(5, 9)) - Interval(Rat(4, 9)) * r);
    }
    case ConstantTag::bound_C: {
      Interval s10 = sqrt_enclosure(Rat(10), bits);
      return x * (Interval(Rat(95)) * s10 - Interval(Rat(4))) - Interval(Rat(90)) * s10;
    }
    case ConstantTag::bound_T: {
      Interval s10 = sqrt_enclosure(Rat(10), bits);
      return x * (Interval(Rat(95)) * s10 - Interval(Rat(4))) - Interval(Rat(36)) * s10;
    }
    case ConstantTag::lemma43_const: {
      Interval t = (Interval(Rat(6)) - x) * Interval(Rat(1, 12));
      return t.square() - Interval(Rat(6, 29));
    }
  }
  throw std::invalid_argument("unknown constant tag");
}

Rat default_width_target() {
  if (const char* env = std::getenv("SHADOWPACK_PRECISION")) {
    std::string s(env);
    // accepts "1e-12" style or plain rationals/decimals
    auto e = s.find_first_of("eE");
    if (e != std::string::npos) {
      Rat mant = Rat::parse(s.substr(0, e));
      long exp = std::stol(s.substr(e + 1));
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), 10, (unsigned long)std::abs(exp));
      Rat scale = Rat(p);
      return exp >= 0 ? mant * scale : mant / scale;
    }
    return Rat::parse(s);
  }
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, 12);
  return Rat(1) / Rat(p);
}

const Constants& Constants::get() {
  static const Constants c = [] {
    const unsigned bits = 160;
    Constants k;
    k.sqrt2 = eval_at_bits(ConstantTag::sqrt2, bits);
    k.sqrt10 = eval_at_bits(ConstantTag::sqrt10, bits);
    k.alpha = eval_at_bits(ConstantTag::alpha, bits);
    k.beta = eval_at_bits(ConstantTag::beta, bits);
    k.c_star = eval_at_bits(ConstantTag::mu1_exact, bits) * Interval(Rat(6));
    k.thm31_const = eval_at_bits(ConstantTag::thm31_const, bits);
    k.lemma43_const = eval_at_bits(ConstantTag::lemma43_const, bits);
    return k;
  }();
  return c;
}

}  // namespace shadowpack
