#include "shadowpack/shadow.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "shadowpack/bodies.hpp"

namespace shadowpack {

namespace {

const Vec3 kZero{Rat(0), Rat(0), Rat(0)};

// ---- canonical frame ------------------------------------------------------

Vec3 apply_rows(const std::array<Vec3, 3>& rows, const Vec3& p) {
  return {dot(rows[0], p), dot(rows[1], p), dot(rows[2], p)};
}

std::array<Vec3, 3> inverse_rows(const std::array<Vec3, 3>& m) {
  const Vec3 &a = m[0], &b = m[1], &c = m[2];
  Rat det = det3(a, b, c);
  if (det.is_zero()) throw std::logic_error("singular frame matrix");
  // columns of the inverse are cross products of the rows
  Vec3 c0 = cross(b, c), c1 = cross(c, a), c2 = cross(a, b);
  std::array<Vec3, 3> inv = {Vec3{c0.x / det, c1.x / det, c2.x / det},
                             Vec3{c0.y / det, c1.y / det, c2.y / det},
                             Vec3{c0.z / det, c1.z / det, c2.z / det}};
  return inv;
}

struct Frame {
  bool identity = true;
  std::array<Vec3, 3> fwd;   // rows of U
  std::array<Vec3, 3> inv;   // rows of U^-1

  Vec3 map(const Vec3& p) const { return identity ? p : apply_rows(fwd, p); }
  // transforms the normal of a halfspace: n' = (U^-1)^T n
  Vec3 map_normal(const Vec3& n) const {
    if (identity) return n;
    return {inv[0].x * n.x + inv[1].x * n.y + inv[2].x * n.z,
            inv[0].y * n.x + inv[1].y * n.y + inv[2].y * n.z,
            inv[0].z * n.x + inv[1].z * n.y + inv[2].z * n.z};
  }
};

Vec3 primitive_integer(const Vec3& v) {
  if (v == kZero) throw std::invalid_argument("zero direction");
  return Halfspace::make(v, Rat(0)).n;
}

Frame frame_for_direction(const Vec3& dir) {
  Vec3 w = primitive_integer(dir);
  Frame f;
  if (w == Vec3{Rat(1), Rat(0), Rat(0)}) return f;
  f.identity = false;
  f.fwd = unimodular_to_e1(w);
  f.inv = inverse_rows(f.fwd);
  return f;
}

ConvexPolytope map_polytope(const Frame& f, const ConvexPolytope& p) {
  if (f.identity) return p;
  std::vector<Vec3> vs;
  vs.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) vs.push_back(f.map(v));
  return ConvexPolytope::hull(vs);
}

// ---- footprints and sheets ------------------------------------------------

Footprint translate_footprint(const Footprint& fp, const Vec3& t) {
  Vec2 tc = footprint_coords(t, 0);
  Rat tx = t.x;
  Footprint out;
  auto shift_piece = [&](const SheetPiece& p) {
    SheetPiece q;
    q.facet = p.facet;
    q.region.verts.reserve(p.region.verts.size());
    for (const auto& v : p.region.verts) q.region.verts.push_back(v + tc);
    q.height = Affine2{p.height.c0 + tx - p.height.cx * tc.x - p.height.cy * tc.y,
                       p.height.cx, p.height.cy};
    return q;
  };
  out.outline.verts.reserve(fp.outline.verts.size());
  for (const auto& v : fp.outline.verts) out.outline.verts.push_back(v + tc);
  for (const auto& p : fp.lower) out.lower.push_back(shift_piece(p));
  for (const auto& p : fp.upper) out.upper.push_back(shift_piece(p));
  return out;
}

const SheetPiece* find_piece(const std::vector<SheetPiece>& pieces, const Vec2& p) {
  for (const auto& piece : pieces)
    if (piece.region.contains(p)) return &piece;
  return nullptr;
}

// ---- line bookkeeping ------------------------------------------------------

struct Line2 {
  Rat a, b, c;  // a*u + b*v = c, primitive, leading coefficient positive
  bool operator<(const Line2& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }
  bool operator==(const Line2& o) const { return a == o.a && b == o.b && c == o.c; }
};

std::optional<Line2> normalize_line(const Rat& a, const Rat& b, const Rat& c) {
  if (a.is_zero() && b.is_zero()) return std::nullopt;
  // scale (a, b, c) to a primitive integer triple; the scale is positive,
  // so the line a*u + b*v = c is unchanged
  Vec3 scaled = Halfspace::make(Vec3{a, b, c}, Rat(0)).n;
  int lead = !scaled.x.is_zero() ? scaled.x.sign() : scaled.y.sign();
  if (lead < 0) scaled = -scaled;
  return Line2{scaled.x, scaled.y, scaled.z};
}

void add_edge_lines(const Polygon2& poly, std::vector<Line2>& lines) {
  const size_t n = poly.verts.size();
  if (n < 2) return;
  for (size_t i = 0; i < n; ++i) {
    const Vec2& p = poly.verts[i];
    const Vec2& q = poly.verts[(i + 1) % n];
    if (p == q) continue;
    Vec2 d = q - p;
    auto ln = normalize_line(d.y, -d.x, d.y * p.x - d.x * p.y);
    if (ln) lines.push_back(*ln);
  }
}

// splits every cell crossed by the line; cells stay convex and ccw
void split_cells(std::vector<Polygon2>& cells, const Rat& a, const Rat& b, const Rat& c) {
  std::vector<Polygon2> out;
  out.reserve(cells.size() + 4);
  for (auto& cell : cells) {
    int pos = 0, neg = 0;
    for (const auto& v : cell.verts) {
      int s = (a * v.x + b * v.y - c).sign();
      if (s > 0) ++pos;
      if (s < 0) ++neg;
    }
    if (pos == 0 || neg == 0) {
      out.push_back(std::move(cell));
      continue;
    }
    Polygon2 lo = cell.clip(a, b, c);
    Polygon2 hi = cell.clip(-a, -b, -c);
    if (lo.verts.size() >= 3 && !lo.area2().is_zero()) out.push_back(std::move(lo));
    if (hi.verts.size() >= 3 && !hi.area2().is_zero()) out.push_back(std::move(hi));
  }
  cells = std::move(out);
}

// ---- per-cell candidate resolution -----------------------------------------

struct Candidate {
  Affine2 f;
  int blocker;
};

}  // namespace

std::array<Vec3, 3> unimodular_to_e1(const Vec3& w_in) {
  Vec3 w = w_in;
  if (w == kZero) throw std::invalid_argument("zero direction");
  for (int c = 0; c < 3; ++c)
    if (w[c].den() != 1) throw std::invalid_argument("direction must be integer");
  std::array<Vec3, 3> rows = {Vec3{Rat(1), Rat(0), Rat(0)}, Vec3{Rat(0), Rat(1), Rat(0)},
                              Vec3{Rat(0), Rat(0), Rat(1)}};
  auto zero_pair = [&](int i, int j) {
    mpz_class ti = w[i].num(), tj = w[j].num();
    if (tj == 0) return;
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), ti.get_mpz_t(), tj.get_mpz_t());
    Vec3 ri = rows[i] * Rat(s) + rows[j] * Rat(t);
    Vec3 rj = rows[i] * Rat(mpz_class(-tj / g)) + rows[j] * Rat(mpz_class(ti / g));
    rows[i] = ri;
    rows[j] = rj;
    w[i] = Rat(g);
    w[j] = Rat(0);
  };
  zero_pair(1, 2);
  zero_pair(0, 1);
  if (w[0].sign() < 0) {
    rows[0] = -rows[0];
    rows[1] = -rows[1];
    w[0] = -w[0];
  }
  Rat det = det3(rows[0], rows[1], rows[2]);
  if (det.abs() != Rat(1)) throw std::logic_error("frame is not unimodular");
  return rows;
}

Vec3 parse_direction(const std::string& s) {
  if (s == "e1") return {Rat(1), Rat(0), Rat(0)};
  if (s == "e2") return {Rat(0), Rat(1), Rat(0)};
  if (s == "e3") return {Rat(0), Rat(0), Rat(1)};
  std::vector<Rat> parts;
  size_t start = 0;
  while (true) {
    size_t comma = s.find(',', start);
    parts.push_back(Rat::parse(s.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) throw std::invalid_argument("direction must be e1|e2|e3 or x,y,z");
  return {parts[0], parts[1], parts[2]};
}

ShadowResult shadow_volume(const Configuration& cfg, int anchor, const Vec3& direction,
                           const ShadowOptions& opts, const ConvexPolytope* localizer) {
  if (anchor < 0 || anchor >= (int)cfg.anchors.size())
    throw std::invalid_argument("anchor index out of range");
  if (cfg.body.dim() != 3) throw std::invalid_argument("body must be a solid");

  Frame frame = frame_for_direction(direction);
  ConvexPolytope body = map_polytope(frame, cfg.body);
  std::vector<Vec3> anchors;
  anchors.reserve(cfg.anchors.size());
  for (const auto& a : cfg.anchors) anchors.push_back(frame.map(a));
  const Vec3& aj = anchors[anchor];

  ConvexPolytope loc;
  if (localizer) {
    loc = map_polytope(frame, *localizer);
  } else {
    loc = map_polytope(frame, make_cube(Rat(2)).translated(cfg.anchors[anchor]));
  }
  ConvexPolytope atrans = body.translated(aj);
  for (const auto& f : loc.facets())
    if (atrans.support(f.plane.n) > f.plane.d)
      throw std::invalid_argument("anchor translate must lie inside the localizer");

  Footprint fp_body = project(body, 0);
  Footprint fp_anchor = translate_footprint(fp_body, aj);
  Footprint fp_loc = project(loc, 0);

  // blockers that can reach the localizer
  Vec3 blo, bhi, llo, lhi;
  body.bounding_box(blo, bhi);
  loc.bounding_box(llo, lhi);
  std::vector<int> blockers;
  std::vector<Footprint> blocker_fp;
  for (int i = 0; i < (int)anchors.size(); ++i) {
    if (i == anchor) continue;
    bool overlap = true;
    for (int c = 0; c < 3 && overlap; ++c)
      if (blo[c] + anchors[i][c] > lhi[c] || bhi[c] + anchors[i][c] < llo[c]) overlap = false;
    if (!overlap) continue;
    blockers.push_back(i);
    blocker_fp.push_back(translate_footprint(fp_body, anchors[i]));
  }

  const Polygon2& base = fp_anchor.outline;
  Rat ulo = base.verts[0].x, uhi = ulo, vlo = base.verts[0].y, vhi = vlo;
  for (const auto& v : base.verts) {
    ulo = min(ulo, v.x); uhi = max(uhi, v.x);
    vlo = min(vlo, v.y); vhi = max(vhi, v.y);
  }

  std::vector<Line2> lines;
  for (const auto& piece : fp_anchor.upper) add_edge_lines(piece.region, lines);
  for (const auto& piece : fp_loc.upper) add_edge_lines(piece.region, lines);
  for (const auto& fp : blocker_fp)
    for (const auto& piece : fp.lower) add_edge_lines(piece.region, lines);
  Vec2 center = footprint_coords(aj, 0);
  if (opts.quadrants) {
    lines.push_back(Line2{Rat(1), Rat(0), center.x});
    lines.push_back(Line2{Rat(0), Rat(1), center.y});
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

  std::vector<Polygon2> cells = {base};
  for (const auto& ln : lines) {
    // skip lines that clearly miss the footprint box
    Rat corners[4] = {ln.a * ulo + ln.b * vlo, ln.a * uhi + ln.b * vlo,
                      ln.a * ulo + ln.b * vhi, ln.a * uhi + ln.b * vhi};
    int pos = 0, neg = 0;
    for (const auto& s : corners) {
      int sg = (s - ln.c).sign();
      if (sg > 0) ++pos;
      if (sg < 0) ++neg;
    }
    if (pos == 0 || neg == 0) continue;
    split_cells(cells, ln.a, ln.b, ln.c);
  }

  ShadowResult result;
  if (opts.quadrants) result.has_quadrants = true;

  std::vector<Candidate> cands;
  std::vector<Polygon2> sub;
  for (const auto& cell : cells) {
    if (cell.verts.size() < 3) continue;
    Rat a2 = cell.area2();
    if (a2.sign() <= 0) continue;
    Vec2 pc = cell.centroid();

    const SheetPiece* gpiece = find_piece(fp_anchor.upper, pc);
    if (!gpiece) throw std::logic_error("cell centroid escapes the anchor exit sheet");
    const Affine2& g = gpiece->height;
    const SheetPiece* tpiece = find_piece(fp_loc.upper, pc);
    if (!tpiece) throw std::logic_error("footprint cell escapes the localizer");
    const Affine2 top = tpiece->height;

    cands.clear();
    for (size_t b = 0; b < blockers.size(); ++b) {
      if (!blocker_fp[b].outline.contains(pc)) continue;
      const SheetPiece* piece = find_piece(blocker_fp[b].lower, pc);
      if (!piece) continue;
      cands.push_back(Candidate{piece->height, blockers[b]});
    }

    // evaluate sheets at the cell vertices once
    const size_t nv = cell.verts.size();
    std::vector<Rat> gv(nv), tv(nv);
    for (size_t v = 0; v < nv; ++v) {
      gv[v] = g.eval(cell.verts[v]);
      tv[v] = top.eval(cell.verts[v]);
    }
    std::vector<std::vector<Rat>> fv(cands.size(), std::vector<Rat>(nv));
    for (size_t i = 0; i < cands.size(); ++i)
      for (size_t v = 0; v < nv; ++v) fv[i][v] = cands[i].f.eval(cell.verts[v]);

    std::vector<bool> alive(cands.size(), true);
    std::vector<bool> fully_valid(cands.size(), false);
    for (size_t i = 0; i < cands.size(); ++i) {
      bool all_le = true, all_ge = true, above_top = true;
      for (size_t v = 0; v < nv; ++v) {
        if (fv[i][v] > gv[v]) all_le = false;
        if (fv[i][v] < gv[v]) all_ge = false;
        if (fv[i][v] < tv[v]) above_top = false;
      }
      fully_valid[i] = all_ge;
      if (all_le && !all_ge) alive[i] = false;  // strictly behind somewhere, never ahead
      if (all_le && all_ge) alive[i] = true;    // touching sheet: keeps height at zero
      if (above_top) alive[i] = false;          // the localizer top caps first
    }
    for (size_t i = 0; i < cands.size(); ++i) {
      if (!alive[i]) continue;
      for (size_t k = 0; k < cands.size(); ++k) {
        if (k == i || !alive[k] || !fully_valid[k]) continue;
        bool le = true, strict = false;
        for (size_t v = 0; v < nv; ++v) {
          if (fv[k][v] > fv[i][v]) { le = false; break; }
          if (fv[k][v] < fv[i][v]) strict = true;
        }
        if (le && (strict || k < i)) { alive[i] = false; break; }
      }
    }

    // sub-split by validity boundaries f_i = g of surviving mixed candidates
    sub.clear();
    sub.push_back(cell);
    for (size_t i = 0; i < cands.size(); ++i) {
      if (!alive[i] || fully_valid[i]) continue;
      Affine2 dif = cands[i].f - g;
      split_cells(sub, dif.cx, dif.cy, -dif.c0);
    }

    for (const auto& piece : sub) {
      if (piece.verts.size() < 3 || piece.area2().sign() <= 0) continue;
      // assemble the ceiling candidates valid on this sub-cell
      std::vector<Candidate> m;
      m.push_back(Candidate{top, -1});
      for (size_t i = 0; i < cands.size(); ++i) {
        if (!alive[i]) continue;
        bool ok = true;
        for (const auto& v : piece.verts)
          if (cands[i].f.eval(v) < g.eval(v)) { ok = false; break; }
        if (!ok) continue;
        bool dup = false;
        for (const auto& prev : m)
          if (prev.f == cands[i].f) { dup = true; break; }
        if (!dup) m.push_back(cands[i]);
      }
      for (size_t mi = 0; mi < m.size(); ++mi) {
        Polygon2 region = piece;
        for (size_t mk = 0; mk < m.size() && !region.empty(); ++mk) {
          if (mk == mi) continue;
          Affine2 dif = m[mi].f - m[mk].f;
          if (dif.cx.is_zero() && dif.cy.is_zero()) {
            if (dif.c0.sign() > 0) region.verts.clear();  // m[mi] strictly above everywhere
            continue;
          }
          region = region.clip(dif.cx, dif.cy, -dif.c0);
        }
        if (region.verts.size() < 3) continue;
        Rat ra2 = region.area2();
        if (ra2.sign() <= 0) continue;
        Affine2 height = m[mi].f - g;
        Rat piece_vol = region.integrate(height);
        result.volume += piece_vol;
        if (opts.quadrants) {
          Vec2 rc = region.centroid();
          int qi;
          bool up = rc.x >= center.x, vp = rc.y >= center.y;
          if (up && vp) qi = 0;
          else if (up) qi = 1;
          else if (!vp) qi = 2;
          else qi = 3;
          result.quadrants[qi] += piece_vol;
        }
        ++result.cell_count;
        if (opts.keep_cells)
          result.cells.push_back(ColumnCell{std::move(region), g, m[mi].f, m[mi].blocker});
      }
    }
  }
  return result;
}

Rat mu_of_config(const Configuration& cfg, const Vec3& direction) {
  if (cfg.anchors.empty()) throw std::invalid_argument("empty configuration");
  std::optional<Rat> best;
  for (int j = 0; j < (int)cfg.anchors.size(); ++j) {
    Rat v = shadow_volume(cfg, j, direction).volume;
    if (!best || v < *best) best = v;
  }
  return *best;
}

Rat mu_bar_at_anchor(const Configuration& cfg, int anchor, const std::vector<Vec3>& directions) {
  if (directions.empty()) throw std::invalid_argument("empty direction set");
  Rat sum(0);
  for (const auto& d : directions) sum += shadow_volume(cfg, anchor, d).volume;
  return sum / Rat((long)directions.size());
}

Rat mu_bar_of_config(const Configuration& cfg, const std::vector<Vec3>& directions) {
  if (cfg.anchors.empty()) throw std::invalid_argument("empty configuration");
  std::optional<Rat> best;
  for (int j = 0; j < (int)cfg.anchors.size(); ++j) {
    Rat v = mu_bar_at_anchor(cfg, j, directions);
    if (!best || v < *best) best = v;
  }
  return *best;
}

// ---- intersection volume of two decompositions -----------------------------

namespace {

void split_by_affine(std::vector<Polygon2>& pieces, const Affine2& dif) {
  if (dif.cx.is_zero() && dif.cy.is_zero()) return;
  split_cells(pieces, dif.cx, dif.cy, -dif.c0);
}

}  // namespace

Rat cells_intersection_volume(const std::vector<ColumnCell>& a,
                              const std::vector<ColumnCell>& b) {
  Rat total(0);
  for (const auto& ca : a)
    for (const auto& cb : b) {
      Polygon2 overlap = intersect(ca.region, cb.region);
      if (overlap.verts.size() < 3 || overlap.area2().sign() <= 0) continue;
      std::vector<Polygon2> pieces = {overlap};
      split_by_affine(pieces, ca.ceiling - cb.ceiling);
      split_by_affine(pieces, ca.floor - cb.floor);
      for (auto& piece : pieces) {
        if (piece.verts.size() < 3 || piece.area2().sign() <= 0) continue;
        Vec2 pc = piece.centroid();
        const Affine2& ceil = ca.ceiling.eval(pc) <= cb.ceiling.eval(pc) ? ca.ceiling : cb.ceiling;
        const Affine2& floor = ca.floor.eval(pc) >= cb.floor.eval(pc) ? ca.floor : cb.floor;
        Affine2 h = ceil - floor;
        std::vector<Polygon2> parts = {piece};
        split_by_affine(parts, h);
        for (auto& part : parts) {
          if (part.verts.size() < 3 || part.area2().sign() <= 0) continue;
          if (h.eval(part.centroid()).sign() > 0) total += part.integrate(h);
        }
      }
    }
  return total;
}

// ---- Monte Carlo -----------------------------------------------------------

namespace {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// counter-based stream: draw(i) depends only on (seed, i)
inline std::uint64_t draw(std::uint64_t seed, std::uint64_t i) {
  return mix64(seed + (i + 1) * 0x9E3779B97F4A7C15ull);
}

struct TranslateClip {
  // walls: a*u + b*v <= c;  caps: x <= (or >=) c - a*u - b*v
  struct Wall { Rat a, b, c; };
  struct Cap { int sign; Rat a, b, c; };  // sign=+1: x <= expr; sign=-1: x >= expr
  std::vector<Wall> walls;
  std::vector<Cap> caps;

  void collect_denominators(mpz_class& l) const {
    auto take = [&](const Rat& r) { mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.den().get_mpz_t()); };
    for (const auto& w : walls) { take(w.a); take(w.b); take(w.c); }
    for (const auto& c : caps) { take(c.a); take(c.b); take(c.c); }
  }

  static TranslateClip make(const ConvexPolytope& body, const Vec3& t) {
    TranslateClip tc;
    for (const auto& f : body.facets()) {
      Rat d = f.plane.d + dot(f.plane.n, t);
      const Vec3& n = f.plane.n;
      // footprint coords for axis 0 are (y, z)
      if (n.x.is_zero()) {
        tc.walls.push_back({n.y, n.z, d});
      } else {
        // n.x * x <= d - n.y*u - n.z*v
        tc.caps.push_back({n.x.sign(), n.y / n.x, n.z / n.x, d / n.x});
      }
    }
    return tc;
  }

  // exact column [lo, hi] at footprint point (u, v); false if empty
  bool column(const Vec2& p, Rat& lo, Rat& hi) const {
    for (const auto& w : walls)
      if (w.a * p.x + w.b * p.y > w.c) return false;
    bool has_lo = false, has_hi = false;
    for (const auto& c : caps) {
      Rat bound = c.c - c.a * p.x - c.b * p.y;
      if (c.sign > 0) {
        if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
      } else {
        if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
      }
    }
    if (!has_lo || !has_hi) return false;
    return lo <= hi;
  }
};

// Exact integer fast path for the sampler.  All plane data and sample
// coordinates are put on a single grid 1/(s0 * 2^32); bound magnitudes are
// checked at construction, so each column is evaluated in int64 with no
// rounding anywhere.
struct FastClip {
  struct Wall { std::int64_t a, b, c; };            // a*u + b*v <= c (scaled)
  struct Cap { int sign; std::int64_t a, b, c; };   // bound = c - a*u - b*v
  std::vector<Wall> walls;
  std::vector<Cap> caps;
};

struct FastSampler {
  std::int64_t s0 = 1;                      // denominator-clearing factor
  // coordinates are stored as integers over s0 * 2^32
  std::int64_t u0, du, v0, dv;              // u = u0 + du*k1, k1 in [0, 2^32)
  FastClip anchor, loc;
  std::vector<FastClip> blockers;
  double inv_scale = 0;                     // 1 / (s0 * 2^32)

  bool column(const FastClip& t, std::int64_t u, std::int64_t v, std::int64_t& lo,
              std::int64_t& hi) const {
    for (const auto& w : t.walls)
      if (w.a * u + w.b * v > w.c) return false;
    bool has_lo = false, has_hi = false;
    for (const auto& c : t.caps) {
      std::int64_t bound = c.c - c.a * u - c.b * v;
      if (c.sign > 0) {
        if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
      } else {
        if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
      }
    }
    return has_lo && has_hi && lo <= hi;
  }
};

// Returns false when the data does not fit the int64 budget.
bool build_fast_sampler(const TranslateClip& anchor, const TranslateClip& loc,
                        const std::vector<TranslateClip>& blockers, const Rat& u0,
                        const Rat& du, const Rat& v0, const Rat& dv, FastSampler& out) {
  mpz_class l(1);
  anchor.collect_denominators(l);
  loc.collect_denominators(l);
  for (const auto& b : blockers) b.collect_denominators(l);
  for (const Rat& r : {u0, du, v0, dv})
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.den().get_mpz_t());
  if (l > 4096) return false;
  const std::int64_t s0 = l.get_si();
  const Rat rs0{mpz_class(l)};
  const Rat coord_scale = rs0 * Rat(mpz_class(mpz_class(1) << 32));
  const Rat plane_scale = rs0 * coord_scale;  // for wall offsets and cap bounds

  bool ok = true;
  double max_coeff = 1, max_bound = 1;
  auto to_i64 = [&](const Rat& r, const Rat& scale, double& track) -> std::int64_t {
    Rat scaled = r * scale;
    if (scaled.den() != 1) { ok = false; return 0; }
    mpz_class n = scaled.num();
    if (!n.fits_slong_p()) { ok = false; return 0; }
    std::int64_t v = n.get_si();
    track = std::max(track, std::abs((double)v));
    return v;
  };
  auto convert = [&](const TranslateClip& t) {
    FastClip f;
    for (const auto& w : t.walls)
      f.walls.push_back({to_i64(w.a, rs0, max_coeff), to_i64(w.b, rs0, max_coeff),
                         to_i64(w.c, plane_scale, max_bound)});
    for (const auto& c : t.caps)
      f.caps.push_back({c.sign, to_i64(c.a, rs0, max_coeff), to_i64(c.b, rs0, max_coeff),
                        to_i64(c.c, plane_scale, max_bound)});
    return f;
  };
  out.s0 = s0;
  out.anchor = convert(anchor);
  out.loc = convert(loc);
  out.blockers.clear();
  for (const auto& b : blockers) out.blockers.push_back(convert(b));
  double coord_track = 1;
  out.u0 = to_i64(u0, coord_scale, coord_track);
  out.v0 = to_i64(v0, coord_scale, coord_track);
  double step_track = 1;
  out.du = to_i64(du, rs0, step_track);
  out.dv = to_i64(dv, rs0, step_track);
  if (!ok) return false;
  // worst-case |a*u + b*v| + |c| must stay far from int64 overflow
  double coord_max = coord_track + step_track * 4294967296.0;
  double worst = 2.0 * max_coeff * coord_max + max_bound;
  if (worst > 2.0e18) return false;
  out.inv_scale = 1.0 / ((double)s0 * (double)s0 * 4294967296.0);
  return true;
}

}  // namespace

MonteCarloResult shadow_volume_mc(const Configuration& cfg, int anchor, const Vec3& direction,
                                  std::uint64_t samples, std::uint64_t seed,
                                  const ConvexPolytope* localizer) {
  if (samples == 0) throw std::invalid_argument("sample count must be positive");
  if (anchor < 0 || anchor >= (int)cfg.anchors.size())
    throw std::invalid_argument("anchor index out of range");

  Frame frame = frame_for_direction(direction);
  ConvexPolytope body = map_polytope(frame, cfg.body);
  std::vector<Vec3> anchors;
  for (const auto& a : cfg.anchors) anchors.push_back(frame.map(a));
  const Vec3& aj = anchors[anchor];

  ConvexPolytope loc = localizer
                           ? map_polytope(frame, *localizer)
                           : map_polytope(frame, make_cube(Rat(2)).translated(cfg.anchors[anchor]));
  ConvexPolytope atrans = body.translated(aj);
  for (const auto& f : loc.facets())
    if (atrans.support(f.plane.n) > f.plane.d)
      throw std::invalid_argument("anchor translate must lie inside the localizer");

  TranslateClip anchor_clip = TranslateClip::make(body, aj);
  TranslateClip loc_clip = TranslateClip::make(loc, kZero);

  Vec3 blo, bhi, llo, lhi;
  body.bounding_box(blo, bhi);
  loc.bounding_box(llo, lhi);
  std::vector<TranslateClip> blocker_clips;
  for (int i = 0; i < (int)anchors.size(); ++i) {
    if (i == anchor) continue;
    bool overlap = true;
    for (int c = 0; c < 3 && overlap; ++c)
      if (blo[c] + anchors[i][c] > lhi[c] || bhi[c] + anchors[i][c] < llo[c]) overlap = false;
    if (overlap) blocker_clips.push_back(TranslateClip::make(body, anchors[i]));
  }

  // sampling rectangle: anchor footprint bounding box
  Vec3 alov, ahiv;
  atrans.bounding_box(alov, ahiv);
  Rat u0 = alov.y, u1 = ahiv.y, v0 = alov.z, v1 = ahiv.z;
  Rat du = u1 - u0, dv = v1 - v0;
  double box_area = (du * dv).to_double();

  long double sum = 0, sum_sq = 0;
  FastSampler fast;
  if (build_fast_sampler(anchor_clip, loc_clip, blocker_clips, u0, du, v0, dv, fast)) {
    for (std::uint64_t i = 0; i < samples; ++i) {
      std::uint64_t r = draw(seed, i);
      std::int64_t u = fast.u0 + fast.du * (std::int64_t)(std::uint32_t)(r >> 32);
      std::int64_t v = fast.v0 + fast.dv * (std::int64_t)(std::uint32_t)r;
      double contrib = 0;
      std::int64_t alo, ahi;
      if (fast.column(fast.anchor, u, v, alo, ahi)) {
        std::int64_t llo2, lhi2;
        if (fast.column(fast.loc, u, v, llo2, lhi2)) {
          std::int64_t ceiling = lhi2;
          const std::int64_t g = ahi;
          for (const auto& bc : fast.blockers) {
            std::int64_t en, ex;
            if (!fast.column(bc, u, v, en, ex)) continue;
            if (en >= g && en < ceiling) ceiling = en;
          }
          if (ceiling > g) contrib = (double)(ceiling - g) * fast.inv_scale;
        }
      }
      sum += contrib;
      sum_sq += contrib * contrib;
    }
  } else {
    const Rat scale(1L << 16);  // dyadic grid 2^-32 via two 16-bit halves
    for (std::uint64_t i = 0; i < samples; ++i) {
      std::uint64_t r = draw(seed, i);
      std::uint32_t k1 = (std::uint32_t)(r >> 32);
      std::uint32_t k2 = (std::uint32_t)r;
      Rat fu = (Rat((long)(k1 >> 16)) + Rat((long)(k1 & 0xffff)) / scale) / scale;
      Rat fv = (Rat((long)(k2 >> 16)) + Rat((long)(k2 & 0xffff)) / scale) / scale;
      Vec2 p{u0 + du * fu, v0 + dv * fv};

      double contrib = 0;
      Rat alo, ahi;
      if (anchor_clip.column(p, alo, ahi)) {
        Rat llo2, lhi2;
        if (loc_clip.column(p, llo2, lhi2)) {
          Rat ceiling = lhi2;
          const Rat& g = ahi;
          for (const auto& bc : blocker_clips) {
            Rat en, ex;
            if (!bc.column(p, en, ex)) continue;
            if (en >= g && en < ceiling) ceiling = en;
          }
          if (ceiling > g) contrib = (ceiling - g).to_double();
        }
      }
      sum += contrib;
      sum_sq += contrib * contrib;
    }
  }

  MonteCarloResult out;
  out.samples = samples;
  out.seed = seed;
  double n = (double)samples;
  double mean = (double)(sum / n);
  double var = samples > 1 ? (double)((sum_sq - sum * sum / n) / (n - 1)) : 0.0;
  out.estimate = mean * box_area;
  out.stderr_est = std::sqrt(std::max(0.0, var) / n) * box_area;
  return out;
}

}  // namespace shadowpack
