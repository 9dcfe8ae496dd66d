#pragma once

#include <string>

#include "shadowpack/polytope.hpp"

namespace shadowpack {

/// Cube { max(|x|,|y|,|z|) <= r }.
ConvexPolytope make_cube(const Rat& half_width);
/// { max(|x|,|y|,|z|) <= 1, |x|+|y|+|z| <= 2 }, volume 20/3.
ConvexPolytope make_cuboctahedron();
/// Regular tetrahedron in its rational embedding
/// (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1).
ConvexPolytope make_regular_tetrahedron();
/// Regular octahedron, vertices +-e_i.
ConvexPolytope make_octahedron();

/// Parses the CLI body tags: cube:r | cubocta | tetra | octa.
ConvexPolytope make_body(const std::string& tag);

/// The distinguished facets of the cuboctahedron: F0 is the square facet
/// in the plane x = 1, F1..F4 are the four triangular facets around it,
/// F5 is the square facet in the plane z = -1.
struct NamedFacet {
  Halfspace plane;       // supporting plane, n.x <= d tight on the facet
  ConvexPolytope poly;   // the 2-dimensional facet itself
};
NamedFacet cuboctahedron_facet(int tag);  // tag in 0..5

enum class ContactKind { Point, Segment, Quad, Hexagon, Other };

struct ContactRegion {
  ConvexPolytope region;
  ContactKind kind;
};

/// The touching set C cap (C + x1); throws std::domain_error when the
/// translates overlap or do not touch at all.
ContactRegion contact_region(const Vec3& x1);

/// Membership of a parameter point in the case-split regions of the
/// touching-parameter plane x + y + z = 4, parameterized by (x, z).
/// Regions with irrational bounds (H) are decided by certified intervals
/// and may report Undecided near their boundary.
enum class Membership { In, Out, Undecided };

Membership in_triangle_delta(const Rat& x, const Rat& z);       // (0,2),(2,0),(2,2)
Membership in_triangle_delta_star(const Rat& x, const Rat& z);  // (2,1),(1,1),(1,2)
Membership in_triangle_delta_i(int i, const Rat& x, const Rat& z);  // i = 1..4
Membership in_region_h(const Rat& x, const Rat& z);
/// Triangle (0,1),(1,1),(1,0) in the plane x + y + z = 2.
Membership in_triangle_delta_prime(const Rat& x, const Rat& z);

}  // namespace shadowpack
