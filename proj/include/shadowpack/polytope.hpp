#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shadowpack/geom.hpp"
#include "shadowpack/polygon.hpp"

namespace shadowpack {

/// Closed halfspace  n.x * x + n.y * y + n.z * z <= d  with an integer
/// primitive normal (entries coprime, not all zero).
struct Halfspace {
  Vec3 n;
  Rat d;

  /// Builds from arbitrary rational data, scaling the normal to a
  /// primitive integer triple.
  static Halfspace make(const Vec3& normal, const Rat& offset);
  /// Supporting plane through three points, oriented so that `inside`
  /// satisfies the inequality; nullopt when the points are collinear.
  static std::optional<Halfspace> through(const Vec3& a, const Vec3& b,
                                          const Vec3& c, const Vec3& inside);

  Rat eval(const Vec3& p) const { return d - dot(n, p); }  // >= 0 inside
  bool operator==(const Halfspace& o) const { return n == o.n && d == o.d; }
};

struct Facet {
  Halfspace plane;
  std::vector<int> ring;  // vertex indices, ccw as seen from outside
};

/// Bounded convex polytope with synchronized V- and H-representations.
/// Degenerate (dim < 3) polytopes are first-class values: they keep their
/// extreme vertices, have volume 0, and carry their affine hull plane
/// when two-dimensional.
class ConvexPolytope {
 public:
  ConvexPolytope() = default;

  static ConvexPolytope empty() { return ConvexPolytope(); }
  static ConvexPolytope point(const Vec3& p);

  /// Convex hull of a finite point set; degenerate inputs yield the
  /// lower-dimensional hull.
  static ConvexPolytope hull(const std::vector<Vec3>& points);

  /// Vertex enumeration by exact triple-plane intersection.  Throws
  /// std::domain_error when the intersection is unbounded; an empty
  /// intersection is a valid (empty) result.
  static ConvexPolytope from_halfspaces(const std::vector<Halfspace>& hs);

  int dim() const { return dim_; }
  bool is_empty() const { return dim_ < 0; }
  const std::vector<Vec3>& vertices() const { return verts_; }
  const std::vector<Facet>& facets() const { return facets_; }
  /// Affine hull plane of a 2-dimensional polytope (n·x = d).
  const std::optional<Halfspace>& hull_plane() const { return plane_; }

  Rat volume() const;
  /// Area of a 2-dimensional polytope (0 for other dimensions).
  Rat facet_area() const;

  bool contains(const Vec3& p) const;
  bool contains_interior(const Vec3& p) const;
  Vec3 vertex_centroid() const;

  Rat support(const Vec3& dir) const;  // max of dir . x over the polytope
  void bounding_box(Vec3& lo, Vec3& hi) const;

  ConvexPolytope translated(const Vec3& t) const;
  ConvexPolytope scaled(const Rat& s) const;  // throws on s == 0
  ConvexPolytope reflected() const;           // x -> -x

  /// P cap { n . x <= d }, exact; works for dim 3 and dim 2 inputs.
  ConvexPolytope clip(const Halfspace& h) const;

  /// Canonical sorted vertex list, for point-set equality tests.
  std::vector<Vec3> sorted_vertices() const;
  bool same_point_set(const ConvexPolytope& o) const;

  std::vector<Halfspace> halfspaces() const;
  /// Vertex cycle of facet f as points.
  std::vector<Vec3> facet_points(int f) const;
  /// Unique undirected edges as vertex-index pairs.
  std::vector<std::pair<int, int>> edges() const;

 private:
  friend ConvexPolytope intersect(const ConvexPolytope&, const ConvexPolytope&);
  static ConvexPolytope from_vertices_and_planes(std::vector<Vec3> verts,
                                                 const std::vector<Halfspace>& planes);
  static ConvexPolytope assemble(std::vector<Vec3> verts,
                                 const std::vector<Halfspace>& planes);

  std::vector<Vec3> verts_;
  std::vector<Facet> facets_;
  std::optional<Halfspace> plane_;
  int dim_ = -1;
};

ConvexPolytope intersect(const ConvexPolytope& p, const ConvexPolytope& q);
ConvexPolytope minkowski_sum(const ConvexPolytope& p, const ConvexPolytope& q);
ConvexPolytope difference_body(const ConvexPolytope& p);
/// True iff vol(P cap Q) = 0 (touching is allowed).
bool interior_disjoint(const ConvexPolytope& p, const ConvexPolytope& q);

/// One affine piece of a projected entry/exit sheet.
struct SheetPiece {
  Polygon2 region;  // footprint cell the piece covers, ccw
  Affine2 height;   // measure coordinate over the region
  int facet;        // source facet index
};

/// Orthogonal projection of a solid along a coordinate axis: the footprint
/// outline plus the piecewise-affine lower (entry) and upper (exit)
/// envelopes, each piece tagged by its source facet.  Footprint plane
/// coordinates are the remaining axes in cyclic order.
struct Footprint {
  Polygon2 outline;
  std::vector<SheetPiece> lower;
  std::vector<SheetPiece> upper;
};

Footprint project(const ConvexPolytope& p, int axis);

/// Maps a 3D point to footprint-plane coordinates for the given axis.
Vec2 footprint_coords(const Vec3& p, int axis);
Rat axis_coord(const Vec3& p, int axis);

}  // namespace shadowpack
