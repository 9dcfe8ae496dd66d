#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shadowpack/bounds.hpp"

using namespace shadowpack;

TEST_CASE("density bound from a shadow measure") {
  Scalar b = upper_bound_from_mu(Rat(20, 3), Scalar(Rat(16, 27)));
  REQUIRE(b.is_exact());
  CHECK(b.rat() == Rat(45, 49));
  CHECK(upper_bound_from_mu(Rat(20, 3), Scalar(Rat(0))).rat() == Rat(1));
  CHECK_THROWS_AS(upper_bound_from_mu(Rat(20, 3), Scalar(Rat(-1))), std::invalid_argument);

  Scalar avg = upper_bound_from_mu_bar(Rat(20, 3), Scalar(Rat(29, 18)));
  CHECK(avg.rat() == Rat(120, 149));
  // the conjectured average would reproduce the lattice density
  CHECK(upper_bound_from_mu_bar(Rat(20, 3), Scalar(Rat(16, 27))).rat() == Rat(45, 49));
}

TEST_CASE("quadrant combination") {
  CHECK(quadrant_combine(Scalar(Rat(1, 12))).rat() == Rat(1, 3));
  CHECK(quadrant_combine(Scalar(Rat(0))).rat() == Rat(0));
  Interval mu1 = eval_constant(ConstantTag::mu1_exact, default_width_target());
  Interval mu = quadrant_combine(Scalar(mu1)).as_interval();
  // (2/3)(5/9 - (4/9) sqrt(1/10)) ~ 0.2766732
  CHECK(mu.lo() <= Rat(2766733, 10000000));
  CHECK(mu.hi() >= Rat(2766732, 10000000));
}

TEST_CASE("difference body transfer") {
  Scalar t = transfer_difference_body(Scalar(Rat(45, 49)), Rat(8, 3), Rat(160, 3));
  CHECK(t.rat() == Rat(18, 49));
  Scalar same = transfer_difference_body(Scalar(Rat(3, 7)), Rat(1), Rat(8));
  CHECK(same.rat() == Rat(3, 7));
  CHECK_THROWS_AS(transfer_difference_body(Scalar(Rat(1, 2)), Rat(2), Rat(8)),
                  std::domain_error);
}

TEST_CASE("main theorem chain") {
  MainTheoremReport rep = main_theorem();
  Interval c = rep.cubocta.bound.as_interval();
  CHECK(c.lo() <= Rat(9601528, 10000000));
  CHECK(c.hi() >= Rat(9601527, 10000000));
  CHECK(c.width() <= Rat(1, 1000000000));
  Interval t = rep.tetra.bound.as_interval();
  CHECK(t.lo() <= Rat(3840611, 10000000));
  CHECK(t.hi() >= Rat(3840610, 10000000));
  // sandwich between the known lattice densities and 1
  CHECK(Rat(45, 49) <= c.hi());
  CHECK(c.hi() < Rat(1));
  CHECK(Rat(18, 49) <= t.hi());
  CHECK(t.hi() < Rat(2, 5));
  // the tetrahedron bound is exactly 2/5 of the cuboctahedron bound
  Interval scaled = c * Interval(Rat(2, 5));
  CHECK(scaled.overlaps(t));
  CHECK(!rep.cubocta.chain.empty());
  CHECK(rep.tetra.chain.back() == "difference_body_transfer");

  // recomputing the chain reproduces the bound
  Interval mu1 = rep.cubocta.measure.as_interval();
  Scalar redo = upper_bound_from_mu(Rat(20, 3), quadrant_combine(Scalar(mu1)));
  CHECK(redo.as_interval().overlaps(c));
}

TEST_CASE("bound monotonicity") {
  // decreasing in mu, increasing in vol, on a rational grid
  for (long m = 0; m <= 20; ++m)
    for (long v = 1; v <= 10; ++v) {
      Rat mu(m, 7), vol(v, 2);
      Rat b = upper_bound_from_mu(vol, Scalar(mu)).rat();
      Rat b_more_mu = upper_bound_from_mu(vol, Scalar(mu + Rat(1, 7))).rat();
      Rat b_more_vol = upper_bound_from_mu(vol + Rat(1, 2), Scalar(mu)).rat();
      CHECK(b_more_mu < b);
      if (m > 0) CHECK(b_more_vol > b);
      CHECK(b <= Rat(1));
      CHECK(b > Rat(0));
    }
  // transfer is linear and reciprocal transfers cancel
  Scalar b(Rat(3, 5));
  Scalar down = transfer_difference_body(b, Rat(1), Rat(16));     // ratio 1/2
  Scalar up = Scalar(Rat(2)) * down;
  CHECK(up.rat() == b.rat());
}
