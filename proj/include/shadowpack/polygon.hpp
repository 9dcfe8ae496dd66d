#pragma once

#include <optional>
#include <vector>

#include "shadowpack/geom.hpp"

namespace shadowpack {

/// Convex polygon with exact vertices in counterclockwise order.
/// An empty vertex list is the empty polygon; one or two vertices are
/// degenerate (point / segment) and have zero area.
struct Polygon2 {
  std::vector<Vec2> verts;

  bool empty() const { return verts.empty(); }
  /// Twice the signed area (nonnegative for ccw polygons).
  Rat area2() const;
  Rat area() const { return area2() / Rat(2); }
  /// Area centroid; pre: area > 0.
  Vec2 centroid() const;
  bool contains(const Vec2& p) const;

  /// Intersection with the halfplane a*x + b*y <= c.
  Polygon2 clip(const Rat& a, const Rat& b, const Rat& c) const;

  /// Exact integral of an affine function over the polygon.
  Rat integrate(const Affine2& f) const;
};

Polygon2 convex_hull_2d(std::vector<Vec2> pts);

Polygon2 rectangle(const Rat& x0, const Rat& y0, const Rat& x1, const Rat& y1);

/// Intersection of two convex polygons.
Polygon2 intersect(const Polygon2& a, const Polygon2& b);

}  // namespace shadowpack
