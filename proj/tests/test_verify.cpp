#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shadowpack/constants.hpp"
#include "shadowpack/fixtures.hpp"
#include "shadowpack/verify.hpp"
#include "shadowpack/witnesses.hpp"

using namespace shadowpack;

namespace {

Rat approx(long digits10, long value) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, digits10);
  return Rat(value) / Rat(p);
}

WitnessParams at(const Rat& x, const Rat& y, const Rat& z) {
  return WitnessParams{Vec3{x, y, z}, std::nullopt, std::nullopt};
}

}  // namespace

TEST_CASE("registry lists the full case set") {
  auto ids = registered_case_ids();
  CHECK(ids.size() >= 40);
  CHECK(resolve_case_ids("lem44").size() >= 15);
  CHECK(resolve_case_ids("lem45").size() >= 14);
  CHECK(resolve_case_ids("thm31").size() == 2);
  CHECK_THROWS_AS(resolve_case_ids("lem99"), std::invalid_argument);
}

TEST_CASE("reduced hexagon-case sweep finds the stated minimizer") {
  Verdict v = verify_scalar_bound("thm31", Rat(1, 1000));
  CHECK(v.pass);
  REQUIRE(v.argmin.size() == 1);
  CHECK((v.argmin[0] - approx(5, 126120)).abs() <= Rat(1, 100));
  REQUIRE(v.minimum.has_value());
  // minimum stays within 1e-6 of the sharp constant
  Interval c = Constants::get().thm31_const;
  CHECK(v.minimum->lo() >= c.lo() - Rat(1, 1000000));
  CHECK(v.margin->lo().sign() >= 0);
}

TEST_CASE("first parallelogram case attains its rational minimum") {
  Verdict v = verify_scalar_bound("lem42", Rat(1, 100));
  CHECK(v.pass);
  REQUIRE(v.argmin.size() == 2);
  CHECK((v.argmin[0] - Rat(3, 2)).abs() <= Rat(1, 100));
  CHECK((v.argmin[1] - Rat(7, 4)).abs() <= Rat(1, 100));
  // the exact minimum is hit on the decimal grid
  CHECK(v.minimum->contains(Rat(9, 16)));
  CHECK(v.margin->contains(Rat(0)));
  CHECK(v.margin->lo().sign() >= 0);
}

TEST_CASE("bracket endpoints reproduce the defining values") {
  // at the upper root, the corner cube is exactly one half
  Interval beta = Constants::get().beta;
  Interval cube_val = (beta - Interval(Rat(1))).cube();
  CHECK(cube_val.contains(Rat(1, 2)));
  // at the lower root, the paired-corner expression is exactly one half
  Interval alpha = Constants::get().alpha;
  Interval expr = Interval(Rat(2)) * (Interval(Rat(1)) - alpha * Interval(Rat(1, 2))).cube() -
                  (Interval(Rat(1)) - alpha).cube();
  CHECK(expr.contains(Rat(1, 2)));
}

TEST_CASE("out-of-bracket sweeps") {
  for (const char* id : {"lem41.x_hi", "lem41.x_lo", "lem41.y_hi", "lem41.y_lo",
                         "lem41.z_hi", "lem41.z_lo"}) {
    Verdict v = verify_scalar_bound(id, Rat(1, 50));
    CHECK(v.pass);
    CHECK(v.points_admissible > 0);
    CHECK(v.margin->lo().sign() >= 0);
  }
}

TEST_CASE("second parallelogram case: scalar chains") {
  for (const char* id : {"lem43.s1", "lem43.s2", "lem43.s3"}) {
    Verdict v = verify_scalar_bound(id, Rat(1, 100));
    CHECK(v.pass);
    CHECK(v.points_admissible > 0);
  }
}

TEST_CASE("second parallelogram case: barrier sweep") {
  Verdict v = verify_scalar_bound("lem43.pt", Rat(1, 12));
  CHECK(v.pass);
  CHECK(v.points_admissible > 0);
  CHECK(v.margin->lo().sign() >= 0);
}

TEST_CASE("empty subcase is certified empty") {
  Verdict v = verify_scalar_bound("lem45.c2_7", Rat(1, 40));
  CHECK(v.pass);
  CHECK(v.points_admissible == 0);
}

TEST_CASE("a coarse pass over every registered case") {
  for (const auto& id : registered_case_ids()) {
    Verdict v = verify_scalar_bound(id, Rat(1, 25));
    INFO(id, ": ", v.note);
    CHECK(v.pass);
  }
}

TEST_CASE("grid minima are monotone under refinement") {
  Verdict coarse = verify_scalar_bound("lem44.s2_1", Rat(1, 20));
  Verdict fine = verify_scalar_bound("lem44.s2_1", Rat(1, 40));
  REQUIRE(coarse.minimum.has_value());
  REQUIRE(fine.minimum.has_value());
  CHECK(fine.minimum->lo() <= coarse.minimum->hi());
  CHECK(coarse.pass);
  CHECK(fine.pass);
}

TEST_CASE("witness homothety ratios") {
  // symmetric hexagon contact: all four solids are corner homothets
  WitnessParams p = at(Rat(4, 3), Rat(4, 3), Rat(4, 3));
  auto ws = witness_polytopes("thm31", p);
  REQUIRE(ws.size() == 4);
  Rat total(0);
  for (const auto& w : ws) {
    REQUIRE(w.ratio.has_value());
    CHECK(*w.ratio == Rat(1, 3));
    CHECK(is_corner_homothet(w.poly, *w.ratio));
    total += w.poly.volume();
  }
  CHECK(total == Rat(4) * Rat(1, 27) / Rat(6));  // 2/81
  // boundary parameter: one witness flattens out
  auto flat = witness_polytopes("thm31", at(Rat(2), Rat(1), Rat(1)));
  CHECK(flat[1].poly.dim() < 3);  // ratio y1 - 1 = 0
}

TEST_CASE("witness geometry for the symmetric contact") {
  GeometryReport rep = verify_witness_geometry("thm31", at(Rat(4, 3), Rat(4, 3), Rat(4, 3)),
                                               make_named_config("thm31"));
  INFO((rep.failures.empty() ? std::string("ok") : rep.failures[0]));
  CHECK(rep.pass);
  CHECK(rep.witness_union_volume == Rat(2, 81));
  CHECK(*rep.shadow_quadrant_volume >= rep.witness_union_volume);
}

TEST_CASE("witness geometry against the second lattice window") {
  // the touching translate of the window is (1, 3/2, 3/2); its witnesses
  // must fit inside the exact first-quadrant volume 1/12
  GeometryReport rep = verify_witness_geometry("thm31", at(Rat(1), Rat(3, 2), Rat(3, 2)),
                                               make_named_config("lambda2"));
  INFO((rep.failures.empty() ? std::string("ok") : rep.failures[0]));
  CHECK(rep.pass);
  CHECK(*rep.shadow_quadrant_volume == Rat(1, 12));
  CHECK(rep.witness_union_volume == Rat(1, 24));
}

TEST_CASE("witness geometry for the sharp parallelogram case") {
  GeometryReport rep = verify_witness_geometry("lem42", at(Rat(3, 2), Rat(3, 4), Rat(7, 4)),
                                               make_named_config("lem42"));
  INFO((rep.failures.empty() ? std::string("ok") : rep.failures[0]));
  CHECK(rep.pass);
  CHECK(Rat(6) * rep.witness_union_volume == Rat(9, 16));
  CHECK(rep.witness_union_volume <= *rep.shadow_quadrant_volume);
}

TEST_CASE("degenerate single-anchor case passes vacuously") {
  GeometryReport rep = verify_witness_geometry("thm31", at(Rat(2), Rat(1), Rat(1)),
                                               make_named_config("single"));
  CHECK(rep.pass);
}

TEST_CASE("witness geometry for the bracketed parallelogram side") {
  // touching point inside the fourth triangle and the bracket box
  Vec3 x1{Rat(9, 10), Rat(3, 2), Rat(8, 5)};
  Configuration cfg{make_cuboctahedron(), {Vec3{Rat(0), Rat(0), Rat(0)}, x1}};
  REQUIRE(is_packing(cfg));
  for (const char* id : {"lem44", "lem44.s2_1"}) {
    GeometryReport rep =
        verify_witness_geometry(id, WitnessParams{x1, std::nullopt, std::nullopt}, cfg);
    INFO((rep.failures.empty() ? std::string("ok") : rep.failures[0]));
    CHECK(rep.pass);
  }
}

TEST_CASE("corner piece constructors build valid solids") {
  ConvexPolytope p1 = region_p1();
  Vec3 x1{Rat(9, 10), Rat(3, 2), Rat(8, 5)};
  struct Probe { const char* id; Vec3 x2; };
  std::vector<Probe> probes = {
      {"lem44.s2_2", Vec3{Rat(23, 10), Rat(-9, 20), Rat(-2, 5)}},
      {"lem44.s3_3", Vec3{Rat(2), Rat(-3, 5), Rat(13, 10)}},
      {"lem44.s3_6", Vec3{Rat(2), Rat(-2, 5), Rat(-1, 2)}},
      {"lem44.s3_7", Vec3{Rat(2), Rat(13, 10), Rat(-1, 2)}},
      {"lem44.s3_8", Vec3{Rat(2), Rat(1, 2), Rat(-1, 2)}},
  };
  for (const auto& probe : probes) {
    auto ws = witness_polytopes(probe.id, WitnessParams{x1, probe.x2, std::nullopt});
    REQUIRE(ws.size() >= 3);
    const Witness& piece = ws.back();
    INFO(probe.id, " -> ", piece.name);
    if (piece.poly.is_empty()) continue;
    CHECK(piece.poly.volume() >= Rat(0));
    // every piece is carved out of the corner region
    for (const auto& v : piece.poly.vertices()) CHECK(p1.contains(v));
  }
  // the reflected-case pieces at a mid-range slope
  auto ws = witness_polytopes("lem45.c1_1",
                              WitnessParams{Vec3{Rat(5, 4), Rat(11, 8), Rat(11, 8)},
                                            std::nullopt, std::nullopt});
  CHECK(ws.size() == 7);
  for (const auto& w : ws)
    if (w.ratio) CHECK(is_corner_homothet(w.poly, *w.ratio));
}

TEST_CASE("barrier volume behaves like a volume") {
  Vec3 x1{Rat(3, 2), Rat(1), Rat(3, 2)};
  Rat far = barrier_volume(x1, Rat(10));
  Rat near = barrier_volume(x1, Rat(1));
  CHECK(far > near);
  CHECK(near.sign() >= 0);
  // a translate pair far away leaves the whole box
  ConvexPolytope p1 = region_p1();
  CHECK(p1.volume() > Rat(0));
}
