#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shadowpack/constants.hpp"
#include "shadowpack/geom.hpp"
#include "shadowpack/interval.hpp"
#include "shadowpack/roots.hpp"

using namespace shadowpack;

namespace {

// Independent 3x3 determinant by cofactor expansion along the first row.
Rat cofactor_det(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
         a.z * (b.x * c.y - b.y * c.x);
}

Rat pow10_inv(int k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
  return Rat(1) / Rat(p);
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rat(1, 6) * Rat(1, 2) == Rat(1, 12));
  Rat x(-7, 3);
  CHECK(x + Rat(0) == x);
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(2, -4).str() == "-1/2");
  CHECK(Rat(6, 3).str() == "2/1");
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
  CHECK(Rat::parse("-22/7") == Rat(-22, 7));
  CHECK(Rat::parse("1.25") == Rat(5, 4));
  CHECK(Rat::parse("-0.8") == Rat(-4, 5));
  CHECK(Rat::parse("3") == Rat(3));
}

TEST_CASE("lattice determinant oracle feeds the density division") {
  // basis of the first example lattice
  Vec3 a1{Rat(2), Rat(-1, 3), Rat(-1, 3)};
  Vec3 a2{Rat(-1, 3), Rat(2), Rat(-1, 3)};
  Vec3 a3{Rat(-1, 3), Rat(-1, 3), Rat(2)};
  Rat det = cofactor_det(a1, a2, a3);
  CHECK(det == Rat(196, 27));
  CHECK(Rat(20, 3) / det == Rat(45, 49));
}

TEST_CASE("renormalization leaves values unchanged") {
  for (long k = 1; k < 50; ++k) {
    Rat base(37, 91);
    Rat scaled(37 * k, 91 * k);
    CHECK(base == scaled);
    CHECK(base.str() == scaled.str());
  }
}

TEST_CASE("interval arithmetic encloses exact rational results") {
  std::uint64_t state = 12345;
  auto next = [&]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    long num = (long)((state >> 33) % 2001) - 1000;
    long den = (long)((state >> 11) % 97) + 1;
    return Rat(num, den);
  };
  for (int i = 0; i < 200; ++i) {
    Rat a = next(), b = next(), c = next();
    Interval ia(a - Rat(1, 1000), a + Rat(1, 1000));
    Interval ib(b - Rat(1, 1000), b + Rat(1, 1000));
    Rat truth = a * b + c - a.square() * b;
    Interval enclosed = ia * ib + Interval(c) - ia.square() * ib;
    CHECK(enclosed.contains(truth));
  }
}

TEST_CASE("three-valued comparison") {
  Interval iv(Rat(1, 3), Rat(1, 2));
  CHECK(iv.compare(Rat(1)) == Cmp3::Less);
  CHECK(iv.compare(Rat(0)) == Cmp3::Greater);
  CHECK(iv.compare(Rat(2, 5)) == Cmp3::Undecided);
}

TEST_CASE("sqrt enclosures") {
  Interval s2 = sqrt_enclosure(Rat(2), 64);
  CHECK(s2.square().contains(Rat(2)));
  CHECK(s2.width() <= Rat(1, 1L << 62));
  Interval s = sqrt_enclosure(Rat(9, 4), 32);
  CHECK(s.contains(Rat(3, 2)));
}

TEST_CASE("coarsening rounds outward onto a dyadic grid") {
  Interval iv(Rat(22, 7) - Rat(1, 1000000), Rat(22, 7));
  Interval coarse = iv.coarsen(40);
  CHECK(coarse.lo() <= iv.lo());
  CHECK(coarse.hi() >= iv.hi());
  CHECK(coarse.width() <= iv.width() + Rat(2, 1L << 40));
  CHECK(coarse.lo().den() <= mpz_class(mpz_class(1) << 40));
}

TEST_CASE("root refinement brackets the cubic roots") {
  Rat tol = pow10_inv(9);
  Polynomial alpha_poly{{Rat(2), Rat(0), Rat(-6), Rat(3)}};
  Interval alpha = refine_root(alpha_poly, Rat(0), Rat(1), tol);
  CHECK(alpha.lo() <= Rat(7223518, 10000000));
  CHECK(alpha.hi() >= Rat(7223517, 10000000));
  CHECK(alpha_poly.eval(alpha).contains_zero());

  Polynomial linear{{Rat(-1), Rat(1)}};
  Interval one = refine_root(linear, Rat(0), Rat(2), tol);
  CHECK(one.contains(Rat(1)));

  Polynomial beta_poly{{Rat(-3, 2), Rat(3), Rat(-3), Rat(1)}};
  Interval beta = refine_root(beta_poly, Rat(1), Rat(2), tol);
  CHECK(beta.lo() <= Rat(17937006, 10000000));
  CHECK(beta.hi() >= Rat(17937005, 10000000));
  CHECK(beta_poly.eval(beta).contains_zero());

  Polynomial no_root{{Rat(1), Rat(0), Rat(1)}};
  CHECK_THROWS_AS(refine_root(no_root, Rat(-1), Rat(1), tol), std::domain_error);
}

TEST_CASE("named constants match their decimal expansions") {
  Rat w = pow10_inv(9);
  auto check_contains = [&](ConstantTag tag, const Rat& approx, int digits) {
    Interval iv = eval_constant(tag, w);
    Rat slack = pow10_inv(digits);
    CHECK(iv.lo() <= approx + slack);
    CHECK(iv.hi() >= approx - slack);
    Interval residual = defining_residual(tag, iv);
    CHECK(residual.contains_zero());
  };
  check_contains(ConstantTag::alpha, Rat(7223517, 10000000), 7);
  check_contains(ConstantTag::beta, Rat(17937005, 10000000), 7);
  check_contains(ConstantTag::thm31_const, Rat(1364549, 10000000), 7);
  check_contains(ConstantTag::lemma43_const, Rat(541694086, 1000000000), 9);
  check_contains(ConstantTag::bound_C, Rat(9601527, 10000000), 7);
  check_contains(ConstantTag::bound_T, Rat(3840610, 10000000), 7);

  Interval mu1 = eval_constant(ConstantTag::mu1_exact, w);
  Interval six_mu1 = mu1 * Interval(Rat(6));
  CHECK(six_mu1.lo() <= Rat(415009882, 1000000000));
  CHECK(six_mu1.hi() >= Rat(415009881, 1000000000));

  CHECK_THROWS_AS(parse_constant_tag("no_such_constant"), std::invalid_argument);
}

TEST_CASE("residuals are tight at the default width") {
  Rat w = default_width_target();
  for (ConstantTag tag : all_constant_tags()) {
    Interval iv = eval_constant(tag, w);
    CHECK(iv.width() <= w);
    Interval residual = defining_residual(tag, iv);
    CHECK(residual.contains_zero());
    CHECK(residual.width() <= Rat(1, 1000000) * Rat(1, 1000000));  // 1e-12
  }
}
