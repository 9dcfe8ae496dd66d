#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shadowpack/bodies.hpp"

using namespace shadowpack;

namespace {
Vec3 v3(long x, long y, long z) { return {Rat(x), Rat(y), Rat(z)}; }
}

TEST_CASE("named bodies have their exact volumes") {
  CHECK(make_cuboctahedron().volume() == Rat(20, 3));
  CHECK(make_cube(Rat(1)).volume() == Rat(8));
  CHECK(make_cube(Rat(2)).volume() == Rat(64));
  CHECK(make_octahedron().volume() == Rat(4, 3));
  ConvexPolytope t = make_regular_tetrahedron();
  CHECK(difference_body(t).volume() == Rat(20) * t.volume());
  CHECK(make_body("cube:3/2").volume() == Rat(27));
  CHECK_THROWS_AS(make_body("sphere"), std::invalid_argument);
}

TEST_CASE("named facets") {
  NamedFacet f0 = cuboctahedron_facet(0);
  CHECK(f0.plane.n == v3(1, 0, 0));
  CHECK(f0.plane.d == Rat(1));
  CHECK(f0.poly.vertices().size() == 4);
  CHECK(f0.poly.facet_area() == Rat(2));

  NamedFacet f1 = cuboctahedron_facet(1);
  ConvexPolytope tri =
      ConvexPolytope::hull({v3(0, 1, 1), v3(1, 0, 1), v3(1, 1, 0)});
  CHECK(f1.poly.same_point_set(tri));

  NamedFacet f5 = cuboctahedron_facet(5);
  CHECK(f5.plane.n == v3(0, 0, -1));
  CHECK(f5.plane.d == Rat(1));
  for (const auto& v : f5.poly.vertices()) CHECK(v.z == Rat(-1));

  // each named facet equals the clip of the body to its tight plane
  ConvexPolytope c = make_cuboctahedron();
  for (int tag = 0; tag < 6; ++tag) {
    NamedFacet f = cuboctahedron_facet(tag);
    ConvexPolytope clipped = c.clip(Halfspace::make(-f.plane.n, -f.plane.d));
    CHECK(clipped.same_point_set(f.poly));
  }
  CHECK_THROWS_AS(cuboctahedron_facet(6), std::invalid_argument);
}

TEST_CASE("contact regions") {
  ContactRegion hex = contact_region(Vec3{Rat(4, 3), Rat(4, 3), Rat(4, 3)});
  CHECK(hex.kind == ContactKind::Hexagon);
  CHECK(hex.region.vertices().size() == 6);

  ContactRegion par = contact_region(Vec3{Rat(3, 2), Rat(3, 4), Rat(7, 4)});
  CHECK(par.kind == ContactKind::Quad);
  ConvexPolytope expected = ConvexPolytope::hull({v3(1, 0, 1),
                                                  Vec3{Rat(1), Rat(1, 4), Rat(3, 4)},
                                                  Vec3{Rat(1, 2), Rat(3, 4), Rat(3, 4)},
                                                  Vec3{Rat(1, 2), Rat(1, 2), Rat(1)}});
  CHECK(par.region.same_point_set(expected));

  ContactRegion square = contact_region(v3(2, 0, 0));
  CHECK(square.kind == ContactKind::Quad);
  CHECK(square.region.vertices().size() == 4);

  CHECK_THROWS_AS(contact_region(v3(1, 0, 0)), std::domain_error);
  CHECK_THROWS_AS(contact_region(v3(5, 5, 5)), std::domain_error);

  // symmetry: swapping the roles of the two translates mirrors the contact
  Vec3 x1{Rat(3, 2), Rat(3, 4), Rat(7, 4)};
  ContactRegion mirrored = contact_region(-x1);
  CHECK(mirrored.region.same_point_set(par.region.translated(-x1)));
}

TEST_CASE("contact classification matches the parameter regions") {
  // x1 on the touching plane x+y+z = 4, parameterized by (x, z)
  struct Sample { long xn, xd, zn, zd; };
  std::vector<Sample> samples = {{3, 2, 3, 2}, {5, 4, 7, 4}, {4, 3, 4, 3}, {7, 4, 9, 8},
                                 {1, 1, 2, 1}, {19, 10, 19, 10}, {6, 5, 8, 5}};
  for (const auto& s : samples) {
    Rat x(s.xn, s.xd), z(s.zn, s.zd);
    Rat y = Rat(4) - x - z;
    if (in_triangle_delta(x, z) != Membership::In) continue;
    // interior points only (the classification flips on the edges)
    if (x == Rat(2) || z == Rat(2) || x + z == Rat(2)) continue;
    ContactRegion r = contact_region(Vec3{x, y, z});
    if (in_triangle_delta_star(x, z) == Membership::In && x > Rat(1) && z > Rat(1) &&
        x + z < Rat(3)) {
      CHECK(r.kind == ContactKind::Hexagon);
    } else if (in_triangle_delta_star(x, z) == Membership::Out) {
      CHECK(r.kind == ContactKind::Quad);
    }
  }
}

TEST_CASE("parameter plane regions") {
  CHECK(in_triangle_delta(Rat(3, 2), Rat(3, 2)) == Membership::In);
  CHECK(in_triangle_delta(Rat(0), Rat(0)) == Membership::Out);
  CHECK(in_triangle_delta_star(Rat(3, 2), Rat(3, 2)) == Membership::In);
  CHECK(in_triangle_delta_star(Rat(1, 2), Rat(2)) == Membership::Out);

  // the four case triangles tile the z >= y half of the touching triangle
  for (long xi = 0; xi <= 40; ++xi)
    for (long zi = 0; zi <= 40; ++zi) {
      Rat x(xi, 20), z(zi, 20);
      if (in_triangle_delta(x, z) != Membership::In) continue;
      Rat y = Rat(4) - x - z;
      if (z < y) continue;
      int members = 0;
      for (int i = 1; i <= 4; ++i)
        if (in_triangle_delta_i(i, x, z) == Membership::In) ++members;
      CHECK(members >= 1);
    }

  // the sharp parallelogram-case point lies inside the bracket box
  CHECK(in_region_h(Rat(3, 2), Rat(7, 4)) == Membership::In);
  CHECK(in_region_h(Rat(1, 2), Rat(7, 4)) == Membership::Out);   // x below alpha
  CHECK(in_region_h(Rat(19, 10), Rat(19, 10)) == Membership::Out);  // y below alpha
  CHECK(in_triangle_delta_prime(Rat(1, 2), Rat(3, 4)) == Membership::In);
  CHECK(in_triangle_delta_prime(Rat(0), Rat(0)) == Membership::Out);
}
