#include "shadowpack/polygon.hpp"

#include <algorithm>

namespace shadowpack {

Rat Polygon2::area2() const {
  Rat acc(0);
  const size_t n = verts.size();
  if (n < 3) return acc;
  for (size_t i = 0; i < n; ++i) {
    const Vec2& p = verts[i];
    const Vec2& q = verts[(i + 1) % n];
    acc += cross2(p, q);
  }
  return acc;
}

Vec2 Polygon2::centroid() const {
  const size_t n = verts.size();
  Rat a2 = area2();
  if (a2.is_zero()) throw std::domain_error("centroid of degenerate polygon");
  Rat cx(0), cy(0);
  for (size_t i = 0; i < n; ++i) {
    const Vec2& p = verts[i];
    const Vec2& q = verts[(i + 1) % n];
    Rat w = cross2(p, q);
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  Rat denom = Rat(3) * a2;
  return {cx / denom, cy / denom};
}

bool Polygon2::contains(const Vec2& p) const {
  const size_t n = verts.size();
  if (n == 0) return false;
  if (n == 1) return verts[0] == p;
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a = verts[i];
    const Vec2& b = verts[(i + 1) % n];
    if (cross2(b - a, p - a).sign() < 0) return false;
  }
  return true;
}

Polygon2 Polygon2::clip(const Rat& a, const Rat& b, const Rat& c) const {
  const size_t n = verts.size();
  if (n == 0) return {};
  std::vector<Rat> side(n);
  for (size_t i = 0; i < n; ++i) side[i] = c - (a * verts[i].x + b * verts[i].y);
  Polygon2 out;
  for (size_t i = 0; i < n; ++i) {
    const size_t j = (i + 1) % n;
    const bool pin = side[i].sign() >= 0;
    const bool qin = side[j].sign() >= 0;
    if (pin) out.verts.push_back(verts[i]);
    if (pin != qin) {
      // edge crosses the boundary line; side[i] != side[j] here
      Rat t = side[i] / (side[i] - side[j]);
      out.verts.push_back(verts[i] + (verts[j] - verts[i]) * t);
    }
  }
  // drop consecutive duplicates
  Polygon2 dedup;
  for (const auto& v : out.verts)
    if (dedup.verts.empty() || !(dedup.verts.back() == v)) dedup.verts.push_back(v);
  while (dedup.verts.size() > 1 && dedup.verts.front() == dedup.verts.back())
    dedup.verts.pop_back();
  return dedup;
}

Rat Polygon2::integrate(const Affine2& f) const {
  Rat a2 = area2();
  if (a2.is_zero()) return Rat(0);
  return a2 / Rat(2) * f.eval(centroid());
}

Polygon2 convex_hull_2d(std::vector<Vec2> pts) {
  auto less = [](const Vec2& a, const Vec2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  };
  std::sort(pts.begin(), pts.end(), less);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec2& a, const Vec2& b) { return a == b; }),
            pts.end());
  const size_t n = pts.size();
  if (n <= 2) return Polygon2{pts};
  std::vector<Vec2> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() < 3) {
    // all input points collinear: keep the two extremes
    return Polygon2{{pts.front(), pts.back()}};
  }
  return Polygon2{std::move(h)};
}

Polygon2 rectangle(const Rat& x0, const Rat& y0, const Rat& x1, const Rat& y1) {
  return Polygon2{{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

Polygon2 intersect(const Polygon2& a, const Polygon2& b) {
  if (a.verts.size() < 3 || b.verts.size() < 3) return {};
  Polygon2 out = a;
  const size_t n = b.verts.size();
  for (size_t i = 0; i < n && !out.empty(); ++i) {
    const Vec2& v = b.verts[i];
    const Vec2& w = b.verts[(i + 1) % n];
    Vec2 d = w - v;
    // left of the directed edge:  d.y*x - d.x*y <= d.y*v.x - d.x*v.y
    out = out.clip(d.y, -d.x, d.y * v.x - d.x * v.y);
  }
  return out;
}

}  // namespace shadowpack
