#include "shadowpack/polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace shadowpack {

namespace {

bool lex_less(const Vec3& a, const Vec3& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

std::vector<Vec3> dedupe_points(std::vector<Vec3> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec3& a, const Vec3& b) { return a == b; }),
            pts.end());
  return pts;
}

// Rank of a set of vectors (0..3), exact Gaussian elimination.
int rank3(std::vector<Vec3> vs) {
  int rank = 0;
  for (int col = 0; col < 3 && rank < (int)vs.size(); ++col) {
    int pivot = -1;
    for (int r = rank; r < (int)vs.size(); ++r)
      if (!vs[r][col].is_zero()) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(vs[rank], vs[pivot]);
    for (int r = 0; r < (int)vs.size(); ++r) {
      if (r == rank || vs[r][col].is_zero()) continue;
      Rat f = vs[r][col] / vs[rank][col];
      for (int c = 0; c < 3; ++c) vs[r][c] = vs[r][c] - f * vs[rank][c];
    }
    ++rank;
  }
  return rank;
}

int affine_dim(const std::vector<Vec3>& pts) {
  if (pts.empty()) return -1;
  std::vector<Vec3> diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  return diffs.empty() ? 0 : rank3(diffs);
}

mpz_class gcd3(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

bool halfspace_less(const Halfspace& a, const Halfspace& b) {
  if (a.n.x != b.n.x) return a.n.x < b.n.x;
  if (a.n.y != b.n.y) return a.n.y < b.n.y;
  if (a.n.z != b.n.z) return a.n.z < b.n.z;
  return a.d < b.d;
}

// Orders facet vertices counterclockwise around the outward normal.
std::vector<int> order_ring(const std::vector<int>& idx, const std::vector<Vec3>& verts,
                            const Vec3& normal) {
  Vec3 c{Rat(0), Rat(0), Rat(0)};
  for (int i : idx) c = c + verts[i];
  Rat inv(1, (long)idx.size());
  c = c * inv;
  Vec3 u = verts[idx[0]] - c;
  Vec3 w = cross(normal, u);
  struct Ang { int vert; Rat a, b; };
  std::vector<Ang> ang;
  ang.reserve(idx.size());
  for (int i : idx) {
    Vec3 r = verts[i] - c;
    ang.push_back({i, dot(r, u), dot(r, w)});
  }
  auto half = [](const Ang& p) {
    if (p.b.sign() > 0 || (p.b.is_zero() && p.a.sign() > 0)) return 0;
    return 1;
  };
  std::sort(ang.begin(), ang.end(), [&](const Ang& p, const Ang& q) {
    int hp = half(p), hq = half(q);
    if (hp != hq) return hp < hq;
    return (p.a * q.b - p.b * q.a).sign() > 0;
  });
  std::vector<int> ring;
  ring.reserve(ang.size());
  for (const auto& a : ang) ring.push_back(a.vert);
  return ring;
}

}  // namespace

Halfspace Halfspace::make(const Vec3& normal, const Rat& offset) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), normal.x.den().get_mpz_t(), normal.y.den().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), normal.z.den().get_mpz_t());
  Rat scale{l};
  mpz_class a = (normal.x * scale).num();
  mpz_class b = (normal.y * scale).num();
  mpz_class c = (normal.z * scale).num();
  mpz_class g = gcd3(a, b, c);
  if (g == 0) throw std::invalid_argument("halfspace with zero normal");
  Halfspace h;
  h.n = Vec3{Rat(mpz_class(a / g)), Rat(mpz_class(b / g)), Rat(mpz_class(c / g))};
  h.d = offset * scale / Rat(g);
  return h;
}

std::optional<Halfspace> Halfspace::through(const Vec3& a, const Vec3& b, const Vec3& c,
                                            const Vec3& inside) {
  Vec3 n = cross(b - a, c - a);
  if (n.x.is_zero() && n.y.is_zero() && n.z.is_zero()) return std::nullopt;
  Rat d = dot(n, a);
  if (dot(n, inside) > d) {
    n = -n;
    d = -d;
  }
  return Halfspace::make(n, d);
}

ConvexPolytope ConvexPolytope::point(const Vec3& p) {
  ConvexPolytope r;
  r.verts_ = {p};
  r.dim_ = 0;
  return r;
}

ConvexPolytope ConvexPolytope::assemble(std::vector<Vec3> verts,
                                        const std::vector<Halfspace>& planes) {
  ConvexPolytope r;
  verts = dedupe_points(std::move(verts));
  if (verts.empty()) return r;
  int dim = affine_dim(verts);
  if (dim == 0) return point(verts[0]);
  if (dim == 1) {
    Vec3 dir = verts[1] - verts[0];
    auto param = [&](const Vec3& p) { return dot(p - verts[0], dir); };
    Vec3 lo = verts[0], hi = verts[0];
    for (const auto& v : verts) {
      if (param(v) < param(lo)) lo = v;
      if (param(v) > param(hi)) hi = v;
    }
    r.verts_ = {lo, hi};
    r.dim_ = 1;
    return r;
  }
  if (dim == 2) {
    const Vec3 zero{Rat(0), Rat(0), Rat(0)};
    Vec3 n = zero;
    for (size_t i = 1; i < verts.size() && n == zero; ++i)
      for (size_t j = i + 1; j < verts.size(); ++j) {
        Vec3 c = cross(verts[i] - verts[0], verts[j] - verts[0]);
        if (!(c == zero)) { n = c; break; }
      }
    Halfspace plane = Halfspace::make(n, dot(n, verts[0]));
    Vec3 u = verts[1] - verts[0];
    Vec3 w = cross(plane.n, u);
    std::vector<Vec2> flat;
    flat.reserve(verts.size());
    for (const auto& v : verts) flat.push_back({dot(v - verts[0], u), dot(v - verts[0], w)});
    Polygon2 hull2 = convex_hull_2d(flat);
    std::vector<Vec3> ring;
    for (const auto& f : hull2.verts)
      for (size_t k = 0; k < verts.size(); ++k)
        if (flat[k] == f) {
          ring.push_back(verts[k]);
          break;
        }
    r.verts_ = std::move(ring);
    r.dim_ = 2;
    r.plane_ = plane;
    return r;
  }

  // dim 3: keep only true vertices (active normal rank 3), then build facets.
  std::vector<Halfspace> uniq = planes;
  std::sort(uniq.begin(), uniq.end(), halfspace_less);
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());

  std::vector<Vec3> kept;
  for (const auto& v : verts) {
    std::vector<Vec3> active;
    for (const auto& h : uniq)
      if (h.eval(v).is_zero()) active.push_back(h.n);
    if (active.size() >= 3 && rank3(active) == 3) kept.push_back(v);
  }
  r.verts_ = std::move(kept);
  if ((int)r.verts_.size() < 4 || affine_dim(r.verts_) < 3)
    throw std::logic_error("assemble: inconsistent vertex/plane data");

  for (const auto& h : uniq) {
    std::vector<int> tight;
    for (int i = 0; i < (int)r.verts_.size(); ++i) {
      Rat e = h.eval(r.verts_[i]);
      if (e.sign() < 0) throw std::logic_error("assemble: vertex violates halfspace");
      if (e.is_zero()) tight.push_back(i);
    }
    if (tight.size() < 3) continue;
    std::vector<Vec3> pts;
    for (int i : tight) pts.push_back(r.verts_[i]);
    if (affine_dim(pts) != 2) continue;
    Facet f;
    f.plane = h;
    f.ring = order_ring(tight, r.verts_, h.n);
    r.facets_.push_back(std::move(f));
  }
  r.dim_ = 3;
  return r;
}

ConvexPolytope ConvexPolytope::from_vertices_and_planes(std::vector<Vec3> verts,
                                                        const std::vector<Halfspace>& planes) {
  return assemble(std::move(verts), planes);
}

namespace {

// Fourier-Motzkin feasibility for a small system n.x <= d.
bool feasible_fm(std::vector<std::pair<Vec3, Rat>> rows) {
  for (int var = 2; var >= 0; --var) {
    std::vector<std::pair<Vec3, Rat>> next;
    std::vector<std::pair<Vec3, Rat>> pos, neg;
    for (auto& row : rows) {
      Rat c = row.first[var];
      if (c.sign() > 0) pos.push_back(row);
      else if (c.sign() < 0) neg.push_back(row);
      else next.push_back(row);
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Rat cp = p.first[var], cn = -n.first[var];
        Vec3 comb = p.first * cn + n.first * cp;
        comb[var] = Rat(0);
        next.push_back({comb, p.second * cn + n.second * cp});
        if (next.size() > 200000) throw std::runtime_error("feasibility blow-up");
      }
    rows = std::move(next);
  }
  for (const auto& row : rows)
    if (row.second.sign() < 0) return false;
  return true;
}

// True iff the recession cone {v : n_i . v <= 0} contains a nonzero vector.
bool has_recession_ray(const std::vector<Halfspace>& hs) {
  std::vector<Vec3> normals;
  for (const auto& h : hs) normals.push_back(h.n);
  if (rank3(normals) < 3) return true;
  auto admissible = [&](const Vec3& v) {
    for (const auto& n : normals)
      if (dot(n, v).sign() > 0) return false;
    return true;
  };
  for (size_t i = 0; i < normals.size(); ++i)
    for (size_t j = i + 1; j < normals.size(); ++j) {
      Vec3 c = cross(normals[i], normals[j]);
      if (c.x.is_zero() && c.y.is_zero() && c.z.is_zero()) continue;
      if (admissible(c) || admissible(-c)) return true;
    }
  return false;
}

}  // namespace

ConvexPolytope ConvexPolytope::from_halfspaces(const std::vector<Halfspace>& hs_in) {
  if (hs_in.empty()) throw std::domain_error("unbounded halfspace intersection");
  // merge duplicates with the same normal, keeping the tightest offset
  std::vector<Halfspace> hs;
  {
    std::vector<Halfspace> sorted = hs_in;
    std::sort(sorted.begin(), sorted.end(), halfspace_less);
    for (const auto& h : sorted) {
      if (!hs.empty() && hs.back().n == h.n) continue;  // sorted: first has min d
      hs.push_back(h);
    }
  }

  const size_t m = hs.size();
  std::vector<Vec3> candidates;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      for (size_t k = j + 1; k < m; ++k) {
        const Vec3 &a = hs[i].n, &b = hs[j].n, &c = hs[k].n;
        Rat det = det3(a, b, c);
        if (det.is_zero()) continue;
        const Rat &d1 = hs[i].d, &d2 = hs[j].d, &d3 = hs[k].d;
        Rat x = det3(Vec3{d1, a.y, a.z}, Vec3{d2, b.y, b.z}, Vec3{d3, c.y, c.z});
        Rat y = det3(Vec3{a.x, d1, a.z}, Vec3{b.x, d2, b.z}, Vec3{c.x, d3, c.z});
        Rat z = det3(Vec3{a.x, a.y, d1}, Vec3{b.x, b.y, d2}, Vec3{c.x, c.y, d3});
        Vec3 p{x / det, y / det, z / det};
        bool ok = true;
        for (const auto& h : hs)
          if (h.eval(p).sign() < 0) { ok = false; break; }
        if (ok) candidates.push_back(p);
      }

  if (candidates.empty()) {
    std::vector<std::pair<Vec3, Rat>> rows;
    for (const auto& h : hs) rows.push_back({h.n, h.d});
    if (!feasible_fm(rows)) return empty();
    throw std::domain_error("unbounded halfspace intersection");
  }
  if (has_recession_ray(hs)) throw std::domain_error("unbounded halfspace intersection");
  return assemble(std::move(candidates), hs);
}

ConvexPolytope ConvexPolytope::hull(const std::vector<Vec3>& points) {
  if (points.empty()) throw std::invalid_argument("hull of empty point set");
  std::vector<Vec3> pts = dedupe_points(points);
  int dim = affine_dim(pts);
  if (dim <= 2) return assemble(std::move(pts), {});
  Vec3 inside{Rat(0), Rat(0), Rat(0)};
  for (const auto& p : pts) inside = inside + p;
  inside = inside * Rat(1, (long)pts.size());
  std::vector<Halfspace> planes;
  const size_t n = pts.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        auto h = Halfspace::through(pts[i], pts[j], pts[k], inside);
        if (!h) continue;
        bool supporting = true;
        for (const auto& p : pts)
          if (h->eval(p).sign() < 0) { supporting = false; break; }
        if (supporting) planes.push_back(*h);
      }
  return assemble(std::move(pts), planes);
}

Rat ConvexPolytope::volume() const {
  if (dim_ < 3) return Rat(0);
  Rat six_vol(0);
  for (const auto& f : facets_) {
    const auto& ring = f.ring;
    for (size_t i = 1; i + 1 < ring.size(); ++i)
      six_vol += det3(verts_[ring[0]], verts_[ring[i]], verts_[ring[i + 1]]);
  }
  return six_vol / Rat(6);
}

Rat ConvexPolytope::facet_area() const {
  if (dim_ != 2) return Rat(0);
  Vec3 acc{Rat(0), Rat(0), Rat(0)};
  for (size_t i = 1; i + 1 < verts_.size(); ++i)
    acc = acc + cross(verts_[i] - verts_[0], verts_[i + 1] - verts_[0]);
  Rat s = dot(acc, acc);
  // exact only when |acc| is rational
  mpz_class num_root, den_root;
  mpz_sqrt(num_root.get_mpz_t(), s.num().get_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), s.den().get_mpz_t());
  if (num_root * num_root != s.num() || den_root * den_root != s.den())
    throw std::domain_error("facet area is irrational");
  return Rat(mpq_class(mpq_class(num_root) / mpq_class(den_root))) / Rat(2);
}

bool ConvexPolytope::contains(const Vec3& p) const {
  if (dim_ < 0) return false;
  if (dim_ < 3) {
    // must lie in the affine hull and satisfy the edge fences
    if (dim_ == 0) return verts_[0] == p;
    if (dim_ == 1) {
      Vec3 d = verts_[1] - verts_[0];
      if (!(cross(d, p - verts_[0]) == Vec3{Rat(0), Rat(0), Rat(0)})) return false;
      Rat t = dot(p - verts_[0], d);
      return t.sign() >= 0 && t <= dot(d, d);
    }
    const auto& pl = *plane_;
    if (dot(pl.n, p) != pl.d) return false;
    for (size_t i = 0; i < verts_.size(); ++i) {
      const Vec3& a = verts_[i];
      const Vec3& b = verts_[(i + 1) % verts_.size()];
      if (dot(cross(pl.n, b - a), p - a).sign() < 0) return false;
    }
    return true;
  }
  for (const auto& f : facets_)
    if (f.plane.eval(p).sign() < 0) return false;
  return true;
}

bool ConvexPolytope::contains_interior(const Vec3& p) const {
  if (dim_ < 3) return false;
  for (const auto& f : facets_)
    if (f.plane.eval(p).sign() <= 0) return false;
  return true;
}

Vec3 ConvexPolytope::vertex_centroid() const {
  if (verts_.empty()) throw std::domain_error("centroid of empty polytope");
  Vec3 c{Rat(0), Rat(0), Rat(0)};
  for (const auto& v : verts_) c = c + v;
  return c * Rat(1, (long)verts_.size());
}

Rat ConvexPolytope::support(const Vec3& dir) const {
  if (verts_.empty()) throw std::domain_error("support of empty polytope");
  Rat best = dot(dir, verts_[0]);
  for (const auto& v : verts_) best = max(best, dot(dir, v));
  return best;
}

void ConvexPolytope::bounding_box(Vec3& lo, Vec3& hi) const {
  if (verts_.empty()) throw std::domain_error("bounding box of empty polytope");
  lo = hi = verts_[0];
  for (const auto& v : verts_)
    for (int c = 0; c < 3; ++c) {
      if (v[c] < lo[c]) lo[c] = v[c];
      if (v[c] > hi[c]) hi[c] = v[c];
    }
}

ConvexPolytope ConvexPolytope::translated(const Vec3& t) const {
  ConvexPolytope r = *this;
  for (auto& v : r.verts_) v = v + t;
  for (auto& f : r.facets_) f.plane.d += dot(f.plane.n, t);
  if (r.plane_) r.plane_->d += dot(r.plane_->n, t);
  return r;
}

ConvexPolytope ConvexPolytope::scaled(const Rat& s) const {
  if (s.is_zero()) throw std::domain_error("scale by zero");
  std::vector<Vec3> vs;
  vs.reserve(verts_.size());
  for (const auto& v : verts_) vs.push_back(v * s);
  if (dim_ < 3) {
    ConvexPolytope r = assemble(std::move(vs), {});
    return r;
  }
  std::vector<Halfspace> planes;
  for (const auto& f : facets_) {
    Vec3 n = s.sign() > 0 ? f.plane.n : -f.plane.n;
    planes.push_back(Halfspace::make(n, f.plane.d * (s.sign() > 0 ? s : -s)));
  }
  return assemble(std::move(vs), planes);
}

ConvexPolytope ConvexPolytope::reflected() const { return scaled(Rat(-1)); }

ConvexPolytope ConvexPolytope::clip(const Halfspace& h) const {
  if (dim_ < 0) return *this;
  std::vector<Rat> side;
  side.reserve(verts_.size());
  bool any_pos = false, any_neg = false;
  for (const auto& v : verts_) {
    side.push_back(h.eval(v));
    if (side.back().sign() > 0) any_pos = true;
    if (side.back().sign() < 0) any_neg = true;
  }
  if (!any_neg) return *this;
  if (!any_pos) {
    std::vector<Vec3> kept;
    for (size_t i = 0; i < verts_.size(); ++i)
      if (side[i].is_zero()) kept.push_back(verts_[i]);
    if (kept.empty()) return empty();
    return assemble(std::move(kept), {});
  }

  std::vector<Vec3> out;
  for (size_t i = 0; i < verts_.size(); ++i)
    if (side[i].sign() >= 0) out.push_back(verts_[i]);

  auto cross_point = [&](int i, int j) {
    Rat t = side[i] / (side[i] - side[j]);
    return verts_[i] + (verts_[j] - verts_[i]) * t;
  };

  if (dim_ == 3) {
    for (const auto& [i, j] : edges()) {
      if (side[i].sign() > 0 && side[j].sign() < 0) out.push_back(cross_point(i, j));
      if (side[i].sign() < 0 && side[j].sign() > 0) out.push_back(cross_point(j, i));
    }
    std::vector<Halfspace> planes;
    for (const auto& f : facets_) planes.push_back(f.plane);
    planes.push_back(h);
    return assemble(std::move(out), planes);
  }
  // dim 1 or 2: consecutive vertices are the edges
  const size_t n = verts_.size();
  for (size_t i = 0; i < n; ++i) {
    size_t j = (i + 1) % n;
    if (dim_ == 1 && j == 0) break;
    if (side[i].sign() > 0 && side[j].sign() < 0) out.push_back(cross_point((int)i, (int)j));
    if (side[i].sign() < 0 && side[j].sign() > 0) out.push_back(cross_point((int)j, (int)i));
  }
  return assemble(std::move(out), {});
}

std::vector<Vec3> ConvexPolytope::sorted_vertices() const {
  std::vector<Vec3> vs = verts_;
  std::sort(vs.begin(), vs.end(), lex_less);
  return vs;
}

bool ConvexPolytope::same_point_set(const ConvexPolytope& o) const {
  if (dim_ != o.dim_) return false;
  auto a = sorted_vertices(), b = o.sorted_vertices();
  return a == b;
}

std::vector<Halfspace> ConvexPolytope::halfspaces() const {
  std::vector<Halfspace> hs;
  hs.reserve(facets_.size());
  for (const auto& f : facets_) hs.push_back(f.plane);
  return hs;
}

std::vector<Vec3> ConvexPolytope::facet_points(int f) const {
  std::vector<Vec3> pts;
  for (int i : facets_.at(f).ring) pts.push_back(verts_[i]);
  return pts;
}

std::vector<std::pair<int, int>> ConvexPolytope::edges() const {
  std::vector<std::pair<int, int>> es;
  for (const auto& f : facets_) {
    const auto& r = f.ring;
    for (size_t i = 0; i < r.size(); ++i) {
      int a = r[i], b = r[(i + 1) % r.size()];
      es.push_back({std::min(a, b), std::max(a, b)});
    }
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return es;
}

ConvexPolytope intersect(const ConvexPolytope& p, const ConvexPolytope& q) {
  if (p.is_empty() || q.is_empty()) return ConvexPolytope::empty();
  const ConvexPolytope* a = &p;
  const ConvexPolytope* b = &q;
  if (a->dim() < b->dim()) std::swap(a, b);
  // a has the larger dimension
  if (b->dim() == 3) {
    ConvexPolytope r = *a;
    for (const auto& f : b->facets()) {
      r = r.clip(f.plane);
      if (r.is_empty()) return r;
    }
    return r;
  }
  // b degenerate: clip a by b's affine hull (both sides) and edge fences
  ConvexPolytope r = *a;
  auto clip_both = [&](const Vec3& n, const Rat& d) {
    r = r.clip(Halfspace::make(n, d));
    if (!r.is_empty()) r = r.clip(Halfspace::make(-n, -d));
  };
  if (b->dim() == 0) {
    return a->contains(b->vertices()[0]) ? ConvexPolytope::point(b->vertices()[0])
                                         : ConvexPolytope::empty();
  }
  if (b->dim() == 1) {
    const Vec3& v0 = b->vertices()[0];
    const Vec3& v1 = b->vertices()[1];
    Vec3 dvec = v1 - v0;
    // two independent planes containing the line
    Vec3 probe = dvec.x.is_zero() && dvec.y.is_zero() ? Vec3{Rat(1), Rat(0), Rat(0)}
                                                      : Vec3{Rat(0), Rat(0), Rat(1)};
    Vec3 n1 = cross(dvec, probe);
    Vec3 n2 = cross(dvec, n1);
    clip_both(n1, dot(n1, v0));
    if (r.is_empty()) return r;
    clip_both(n2, dot(n2, v0));
    if (r.is_empty()) return r;
    // clip to the segment extent
    r = r.clip(Halfspace::make(dvec, dot(dvec, v1)));
    if (!r.is_empty()) r = r.clip(Halfspace::make(-dvec, dot(-dvec, v0)));
    return r;
  }
  // b is a flat polygon
  const auto& pl = *b->hull_plane();
  clip_both(pl.n, pl.d);
  if (r.is_empty()) return r;
  const auto& ring = b->vertices();
  for (size_t i = 0; i < ring.size() && !r.is_empty(); ++i) {
    const Vec3& u = ring[i];
    const Vec3& w = ring[(i + 1) % ring.size()];
    Vec3 inward = cross(pl.n, w - u);
    r = r.clip(Halfspace::make(-inward, dot(-inward, u)));
  }
  return r;
}

ConvexPolytope minkowski_sum(const ConvexPolytope& p, const ConvexPolytope& q) {
  if (p.is_empty() || q.is_empty()) return ConvexPolytope::empty();
  if (p.dim() == 0) return q.translated(p.vertices()[0]);
  if (q.dim() == 0) return p.translated(q.vertices()[0]);
  if (p.dim() < 3 || q.dim() < 3) {
    std::vector<Vec3> sums;
    for (const auto& a : p.vertices())
      for (const auto& b : q.vertices()) sums.push_back(a + b);
    return ConvexPolytope::hull(sums);
  }
  // Facet normals of the sum are among: normals of p, normals of q, and
  // cross products of an edge direction of p with one of q.
  std::vector<Vec3> dirs;
  auto add_dir = [&](const Vec3& v) {
    if (v.x.is_zero() && v.y.is_zero() && v.z.is_zero()) return;
    Halfspace h = Halfspace::make(v, Rat(0));
    dirs.push_back(h.n);
  };
  for (const auto& f : p.facets()) add_dir(f.plane.n);
  for (const auto& f : q.facets()) add_dir(f.plane.n);
  auto edge_dirs = [](const ConvexPolytope& poly) {
    std::vector<Vec3> ds;
    for (const auto& [i, j] : poly.edges()) {
      Vec3 dvec = poly.vertices()[j] - poly.vertices()[i];
      ds.push_back(Halfspace::make(dvec, Rat(0)).n);
    }
    std::sort(ds.begin(), ds.end(), lex_less);
    ds.erase(std::unique(ds.begin(), ds.end(),
                         [](const Vec3& a, const Vec3& b) { return a == b; }),
             ds.end());
    return ds;
  };
  for (const auto& ep : edge_dirs(p))
    for (const auto& eq : edge_dirs(q)) {
      Vec3 c = cross(ep, eq);
      add_dir(c);
      add_dir(-c);
    }
  std::sort(dirs.begin(), dirs.end(), lex_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end(),
                         [](const Vec3& a, const Vec3& b) { return a == b; }),
             dirs.end());
  // keep only true facet normals: the support face of the sum is the sum of
  // the support faces, and it must be 2-dimensional
  auto support_face = [](const ConvexPolytope& poly, const Vec3& u, std::vector<Vec3>& out) {
    Rat best = poly.support(u);
    out.clear();
    for (const auto& v : poly.vertices())
      if (dot(u, v) == best) out.push_back(v);
  };
  std::vector<Halfspace> hs;
  std::vector<Vec3> fp, fq, span;
  for (const auto& u : dirs) {
    support_face(p, u, fp);
    support_face(q, u, fq);
    span.clear();
    for (size_t i = 1; i < fp.size(); ++i) span.push_back(fp[i] - fp[0]);
    for (size_t i = 1; i < fq.size(); ++i) span.push_back(fq[i] - fq[0]);
    if (rank3(span) != 2) continue;
    hs.push_back(Halfspace{u, p.support(u) + q.support(u)});
  }
  return ConvexPolytope::from_halfspaces(hs);
}

ConvexPolytope difference_body(const ConvexPolytope& p) {
  return minkowski_sum(p, p.reflected());
}

bool interior_disjoint(const ConvexPolytope& p, const ConvexPolytope& q) {
  return intersect(p, q).volume().is_zero();
}

Vec2 footprint_coords(const Vec3& p, int axis) {
  switch (axis) {
    case 0: return {p.y, p.z};
    case 1: return {p.z, p.x};
    default: return {p.x, p.y};
  }
}

Rat axis_coord(const Vec3& p, int axis) { return p[axis]; }

Footprint project(const ConvexPolytope& p, int axis) {
  if (p.dim() != 3) throw std::invalid_argument("project requires a solid");
  Footprint fp;
  std::vector<Vec2> shadow;
  for (const auto& v : p.vertices()) shadow.push_back(footprint_coords(v, axis));
  fp.outline = convex_hull_2d(shadow);
  for (int fi = 0; fi < (int)p.facets().size(); ++fi) {
    const auto& f = p.facets()[fi];
    Rat na = f.plane.n[axis];
    if (na.is_zero()) continue;
    Polygon2 region;
    for (int vi : f.ring) region.verts.push_back(footprint_coords(p.vertices()[vi], axis));
    if (region.area2().sign() < 0) std::reverse(region.verts.begin(), region.verts.end());
    int u = (axis + 1) % 3, w = (axis + 2) % 3;
    Affine2 fn{f.plane.d / na, -f.plane.n[u] / na, -f.plane.n[w] / na};
    SheetPiece piece{std::move(region), fn, fi};
    (na.sign() > 0 ? fp.upper : fp.lower).push_back(std::move(piece));
  }
  return fp;
}

}  // namespace shadowpack
