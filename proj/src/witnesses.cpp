#include "shadowpack/witnesses.hpp"

#include <algorithm>
#include <stdexcept>

#include "shadowpack/bodies.hpp"

namespace shadowpack {

namespace {

ConvexPolytope tet(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return ConvexPolytope::hull({a, b, c, d});
}

Halfspace hs(long nx, long ny, long nz, const Rat& d) {
  return Halfspace{Vec3{Rat(nx), Rat(ny), Rat(nz)}, d};
}

struct Params {
  Rat x1, y1, z1;
  std::optional<Vec3> x2;
};

Params unpack(const WitnessParams& p) {
  Params q;
  q.x1 = p.x1.x;
  q.y1 = p.x1.y;
  q.z1 = p.x1.z;
  if (q.x1 + q.y1 + q.z1 != Rat(4))
    throw std::invalid_argument("touching parameter must satisfy x+y+z = 4");
  q.x2 = p.x2;
  return q;
}

Vec3 require_x2(const Params& q) {
  if (!q.x2) throw std::invalid_argument("case needs the second translate x2");
  return *q.x2;
}

// the four hexagon-case corner tetrahedra
Witness w_t1(const Params& q) {
  const Rat &x1 = q.x1;
  return {"T1",
          tet({x1 - 1, Rat(1), Rat(1)}, {Rat(0), Rat(1), Rat(1)},
              {x1 - 1, Rat(2) - x1, Rat(1)}, {x1 - 1, Rat(1), Rat(2) - x1}),
          (x1 - 1).abs()};
}
Witness w_t2(const Params& q) {
  const Rat &y1 = q.y1;
  return {"T2",
          tet({Rat(1), y1 - 1, Rat(1)}, {Rat(2) - y1, y1 - 1, Rat(1)},
              {Rat(1), Rat(0), Rat(1)}, {Rat(1), y1 - 1, Rat(2) - y1}),
          (y1 - 1).abs()};
}
Witness w_t3(const Params& q) {
  const Rat &z1 = q.z1;
  return {"T3",
          tet({Rat(1), Rat(1), z1 - 1}, {Rat(2) - z1, Rat(1), z1 - 1},
              {Rat(1), Rat(2) - z1, z1 - 1}, {Rat(1), Rat(1), Rat(0)}),
          (z1 - 1).abs()};
}
Witness w_t4(const Params& q) {
  const Rat &x1 = q.x1, &y1 = q.y1, &z1 = q.z1;
  return {"T4",
          tet({Rat(1), y1 - 1, z1 - 1}, {x1, y1 - 1, z1 - 1}, {Rat(1), Rat(2) - z1, z1 - 1},
              {Rat(1), y1 - 1, Rat(2) - y1}),
          (x1 - 1).abs()};
}
Witness w_t5(const Params& q) {
  const Rat &z1 = q.z1;
  return {"T5",
          tet({Rat(1), Rat(0), z1 - 1}, {Rat(3) - z1, Rat(0), z1 - 1},
              {Rat(1), Rat(2) - z1, z1 - 1}, {Rat(1), Rat(0), Rat(1)}),
          (Rat(2) - z1).abs()};
}
Witness w_t6(const Params& q) {
  const Rat &x1 = q.x1, &y1 = q.y1, &z1 = q.z1;
  return {"T6",
          tet({x1 - 1, Rat(1), z1 - 1}, {x1 - y1, Rat(1), z1 - 1}, {x1 - 1, y1, z1 - 1},
              {x1 - 1, Rat(1), z1 - y1}),
          (Rat(1) - y1).abs()};
}
Witness w_t7(const Params& q) {
  const Rat &x1 = q.x1, &y1 = q.y1, &z1 = q.z1;
  return {"T7",
          tet({x1 - 1, Rat(1), Rat(1)}, {Rat(2) - Rat(2) * y1, Rat(1), Rat(1)},
              {x1 - 1, Rat(2) + y1 - z1, Rat(1)}, {x1 - 1, Rat(1), z1 - y1}),
          (z1 - y1 - 1).abs()};
}
Witness w_prismoid(const Params& q) {
  const Rat &x1 = q.x1, &y1 = q.y1, &z1 = q.z1;
  std::vector<Halfspace> planes = {
      hs(-1, 0, 0, Rat(1) - x1), hs(0, 1, 0, Rat(1)), hs(0, 0, -1, Rat(1) - z1),
      hs(0, 0, 1, Rat(1)), hs(1, -1, 1, x1 - y1 + z1 - 2)};
  return {"P", ConvexPolytope::from_halfspaces(planes), std::nullopt};
}
Witness w_t8(const Params& q) {
  const Rat &x1 = q.x1, &y1 = q.y1, &z1 = q.z1;
  return {"T8",
          tet({Rat(1), Rat(1), z1 - 1}, {Rat(2) + x1 - y1, Rat(1), z1 - 1},
              {Rat(1), y1 - x1, z1 - 1}, {Rat(1), Rat(1), Rat(2) - Rat(2) * x1}),
          (Rat(1) + x1 - y1).abs()};
}
Witness w_t9(const Params& q) {
  const Rat &x1 = q.x1, &y1 = q.y1, &z1 = q.z1;
  return {"T9",
          tet({Rat(1), y1 - 1, Rat(1)}, {Rat(2) + x1 - z1, y1 - 1, Rat(1)},
              {Rat(1), Rat(2) - Rat(2) * x1, Rat(1)}, {Rat(1), y1 - 1, z1 - x1}),
          (Rat(1) + x1 - z1).abs()};
}
Witness w_tstar(const Params& q) {
  const Rat &x1 = q.x1;
  return {"Tstar",
          tet({Rat(1), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(0)}, {Rat(1), Rat(0), Rat(1)},
              {Rat(1) + x1, Rat(1, 2), Rat(1, 2)}),
          std::nullopt};
}

ConvexPolytope clip_all(ConvexPolytope p, const std::vector<Halfspace>& planes) {
  for (const auto& h : planes) {
    p = p.clip(h);
    if (p.is_empty()) break;
  }
  return p;
}

Witness corner_piece(const std::string& name, const ConvexPolytope& t0var,
                     const std::vector<Halfspace>& extra) {
  ConvexPolytope piece = intersect(region_p1(), t0var);
  piece = clip_all(piece, extra);
  return {name, piece, std::nullopt};
}

}  // namespace

ConvexPolytope region_p1() {
  static const ConvexPolytope p1 = ConvexPolytope::from_halfspaces(
      {hs(-1, 0, 0, Rat(0)), hs(1, 0, 0, Rat(2)), hs(0, -1, 0, Rat(0)), hs(0, 1, 0, Rat(1)),
       hs(0, 0, -1, Rat(0)), hs(0, 0, 1, Rat(1)), hs(1, -1, 1, Rat(2)), hs(1, -1, -1, Rat(1)),
       hs(1, 1, -1, Rat(2))});
  return p1;
}

ConvexPolytope barrier_box(const Vec3& x1) {
  const Rat &xx = x1.x, &zz = x1.z;
  if (x1.x + x1.y + x1.z != Rat(4))
    throw std::invalid_argument("touching parameter must satisfy x+y+z = 4");
  if (zz <= Rat(1)) return ConvexPolytope::empty();
  ConvexPolytope s = ConvexPolytope::from_halfspaces(
      {hs(-1, 0, 0, Rat(-1)), hs(0, -1, 0, Rat(0)), hs(0, 0, -1, Rat(0)), hs(1, 0, 0, Rat(2)),
       hs(0, 1, 0, Rat(1)), hs(0, 0, 1, zz - 1), hs(1, 1, -1, Rat(2)),
       hs(1, -1, -1, Rat(2) * xx - 2)});
  if (s.dim() < 3) return ConvexPolytope::empty();
  return s;
}

Rat barrier_volume_in(const ConvexPolytope& box, const Vec3& x1, const Rat& t) {
  if (box.is_empty()) return Rat(0);
  const Rat& zz = x1.z;
  static const ConvexPolytope c = make_cuboctahedron();
  Rat vol = box.volume();
  // the two barrier translates touch each other at a square facet, so
  // their own overlap never carries volume
  for (const Rat& ty : {t, t - 2}) {
    if (ty + 1 <= Rat(0) || ty - 1 >= Rat(1)) continue;  // misses the box in y
    ConvexPolytope cut = intersect(box, c.translated(Vec3{Rat(2), ty, zz - 2}));
    vol -= cut.volume();
  }
  return vol;
}

Rat barrier_volume(const Vec3& x1, const Rat& t) {
  return barrier_volume_in(barrier_box(x1), x1, t);
}

std::vector<Witness> witness_polytopes(const std::string& case_id, const WitnessParams& wp) {
  Params q = unpack(wp);
  const Rat &x1 = q.x1, &y1 = q.y1, &z1 = q.z1;

  if (case_id == "thm31" || case_id == "lem45")
    return {w_t1(q), w_t2(q), w_t3(q), w_t4(q)};
  if (case_id == "lem41.x_hi") return {w_t1(q)};
  if (case_id == "lem41.x_lo") return {w_t2(q), w_t3(q)};
  if (case_id == "lem42")
    return {w_t1(q), w_t3(q), w_t5(q), w_prismoid(q), w_t6(q), w_t7(q)};
  if (case_id == "lem43") return {w_t1(q), w_t3(q), w_t5(q), w_t6(q)};
  if (case_id == "lem44") return {w_t2(q), w_t3(q)};
  if (case_id == "lem44.case1") return {w_t2(q), w_t3(q), w_tstar(q)};
  if (case_id == "lem44.s2_1" || case_id == "lem44.s3_1")
    return {w_t2(q), w_t3(q), w_t8(q), w_t9(q)};
  if (case_id == "lem44.s2_2" || case_id == "lem44.s3_2") {
    Vec3 x2 = require_x2(q);
    const Rat& y2 = x2.y;
    ConvexPolytope t0p = tet({Rat(1), y2 + 1, z1 - 1}, {Rat(2), y2 + 1, z1 - 1},
                             {Rat(1), y2 + 2, z1 - 1}, {Rat(1), y2 + 1, z1 - 2});
    std::vector<Halfspace> extra = {hs(1, 0, 0, x1 + 1), hs(0, 0, -1, Rat(1) - x2.z)};
    return {w_t2(q), w_t3(q), corner_piece("P3", t0p, extra)};
  }
  if (case_id == "lem44.s3_3") {
    Vec3 x2 = require_x2(q);
    const Rat &y2 = x2.y, &z2 = x2.z;
    ConvexPolytope t0s = tet({Rat(1), y2 + 1, z2 - 1}, {Rat(2), y2 + 1, z2 - 1},
                             {Rat(1), y2, z2 - 1}, {Rat(1), y2 + 1, z2});
    return {w_t2(q), w_t3(q), corner_piece("P4", t0s, {hs(1, 0, 0, x1 + 1)})};
  }
  if (case_id == "lem44.s3_6") {
    Vec3 x2 = require_x2(q);
    const Rat &y2 = x2.y, &z2 = x2.z;
    ConvexPolytope t0c = tet({Rat(1), y2 + 1, z2 + 1}, {Rat(2), y2 + 1, z2 + 1},
                             {Rat(1), y2, z2 + 1}, {Rat(1), y2 + 1, z2});
    return {w_t2(q), w_t3(q), corner_piece("P5", t0c, {hs(1, 0, 0, x1 + 1)})};
  }
  if (case_id == "lem44.s3_7") {
    Vec3 x2 = require_x2(q);
    const Rat &y2 = x2.y, &z2 = x2.z;
    ConvexPolytope t0b = tet({Rat(1), y2 - 1, z2 + 1}, {Rat(2), y2 - 1, z2 + 1},
                             {Rat(1), y2, z2 + 1}, {Rat(1), y2 - 1, z2});
    return {w_t2(q), w_t3(q), corner_piece("P6", t0b, {hs(1, 0, 0, x1 + 1)})};
  }
  if (case_id == "lem44.s3_8") {
    Vec3 x2 = require_x2(q);
    const Rat& z2 = x2.z;
    ConvexPolytope t0k = tet({Rat(1), y1 - 1, z2 + 1}, {Rat(2), y1 - 1, z2 + 1},
                             {Rat(1), y1 - 2, z2 + 1}, {Rat(1), y1 - 1, z2 + 2});
    return {w_t2(q), w_t3(q), corner_piece("P9", t0k, {hs(1, 0, 0, x1 + 1)})};
  }
  if (case_id == "lem45.c1_1") {
    std::vector<Witness> ws = {w_t1(q), w_t2(q), w_t3(q), w_t4(q)};
    ConvexPolytope p10 = region_p1().clip(hs(1, -1, -1, Rat(2) * x1 - 2));
    ws.push_back({"P10", p10, std::nullopt});
    ws.push_back({"T10",
                  tet({Rat(1), Rat(2) - x1, Rat(0)}, {x1, Rat(2) - x1, Rat(0)},
                      {Rat(1), Rat(3) - Rat(2) * x1, Rat(0)}, {Rat(1), Rat(2) - x1, Rat(1) - x1}),
                  (x1 - 1).abs()});
    ws.push_back({"T11",
                  tet({Rat(1), Rat(0), Rat(2) - x1}, {x1, Rat(0), Rat(2) - x1},
                      {Rat(1), Rat(1) - x1, Rat(2) - x1}, {Rat(1), Rat(0), Rat(3) - Rat(2) * x1}),
                  (x1 - 1).abs()});
    return ws;
  }
  throw std::invalid_argument("no witness construction registered for case: " + case_id);
}

bool is_corner_homothet(const ConvexPolytope& poly, const Rat& ratio) {
  Rat r = ratio.abs();
  if (r.is_zero()) return poly.dim() < 3;
  if (poly.dim() != 3) return false;
  if (poly.volume() != r.cube() / Rat(6)) return false;
  std::vector<Rat> sq;
  for (const auto& [i, j] : poly.edges()) {
    Vec3 d = poly.vertices()[i] - poly.vertices()[j];
    sq.push_back(dot(d, d));
  }
  if (sq.size() != 6) return false;
  std::sort(sq.begin(), sq.end());
  Rat r2 = r * r;
  return sq[0] == r2 && sq[1] == r2 && sq[2] == r2 && sq[3] == Rat(2) * r2 &&
         sq[4] == Rat(2) * r2 && sq[5] == Rat(2) * r2;
}

}  // namespace shadowpack
