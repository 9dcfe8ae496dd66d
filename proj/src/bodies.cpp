#include "shadowpack/bodies.hpp"

#include <stdexcept>

#include "shadowpack/constants.hpp"

namespace shadowpack {

namespace {

std::vector<Halfspace> cube_planes(const Rat& r) {
  std::vector<Halfspace> hs;
  for (int c = 0; c < 3; ++c)
    for (int s : {1, -1}) {
      Vec3 n{Rat(0), Rat(0), Rat(0)};
      n[c] = Rat(s);
      hs.push_back(Halfspace{n, r});
    }
  return hs;
}

std::vector<Halfspace> octa_planes(const Rat& r) {
  std::vector<Halfspace> hs;
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1})
        hs.push_back(Halfspace{Vec3{Rat(sx), Rat(sy), Rat(sz)}, r});
  return hs;
}

}  // namespace

ConvexPolytope make_cube(const Rat& half_width) {
  if (half_width.sign() <= 0) throw std::invalid_argument("cube with nonpositive half width");
  return ConvexPolytope::from_halfspaces(cube_planes(half_width));
}

ConvexPolytope make_cuboctahedron() {
  auto hs = cube_planes(Rat(1));
  auto tri = octa_planes(Rat(2));
  hs.insert(hs.end(), tri.begin(), tri.end());
  return ConvexPolytope::from_halfspaces(hs);
}

ConvexPolytope make_regular_tetrahedron() {
  return ConvexPolytope::hull({Vec3{Rat(1), Rat(1), Rat(1)}, Vec3{Rat(1), Rat(-1), Rat(-1)},
                               Vec3{Rat(-1), Rat(1), Rat(-1)}, Vec3{Rat(-1), Rat(-1), Rat(1)}});
}

ConvexPolytope make_octahedron() {
  return ConvexPolytope::from_halfspaces(octa_planes(Rat(1)));
}

ConvexPolytope make_body(const std::string& tag) {
  if (tag == "cubocta") return make_cuboctahedron();
  if (tag == "tetra") return make_regular_tetrahedron();
  if (tag == "octa") return make_octahedron();
  if (tag.rfind("cube:", 0) == 0) return make_cube(Rat::parse(tag.substr(5)));
  if (tag == "cube") return make_cube(Rat(1));
  throw std::invalid_argument("unknown body tag: " + tag);
}

NamedFacet cuboctahedron_facet(int tag) {
  ConvexPolytope c = make_cuboctahedron();
  Halfspace plane;
  switch (tag) {
    case 0: plane = Halfspace{Vec3{Rat(1), Rat(0), Rat(0)}, Rat(1)}; break;
    case 1: plane = Halfspace{Vec3{Rat(1), Rat(1), Rat(1)}, Rat(2)}; break;
    case 2: plane = Halfspace{Vec3{Rat(1), Rat(-1), Rat(1)}, Rat(2)}; break;
    case 3: plane = Halfspace{Vec3{Rat(1), Rat(-1), Rat(-1)}, Rat(2)}; break;
    case 4: plane = Halfspace{Vec3{Rat(1), Rat(1), Rat(-1)}, Rat(2)}; break;
    case 5: plane = Halfspace{Vec3{Rat(0), Rat(0), Rat(-1)}, Rat(1)}; break;
    default: throw std::invalid_argument("facet tag must be 0..5");
  }
  NamedFacet f;
  f.plane = plane;
  f.poly = c.clip(Halfspace::make(-plane.n, -plane.d));
  if (f.poly.dim() != 2) throw std::logic_error("named facet is not 2-dimensional");
  return f;
}

ContactRegion contact_region(const Vec3& x1) {
  ConvexPolytope c = make_cuboctahedron();
  ConvexPolytope moved = c.translated(x1);
  ConvexPolytope touch = intersect(c, moved);
  if (touch.dim() == 3 && !touch.volume().is_zero())
    throw std::domain_error("translates overlap");
  if (touch.is_empty()) throw std::domain_error("translates do not touch");
  ContactRegion r;
  r.kind = ContactKind::Other;
  if (touch.dim() == 0) r.kind = ContactKind::Point;
  else if (touch.dim() == 1) r.kind = ContactKind::Segment;
  else if (touch.dim() == 2 && touch.vertices().size() == 4) r.kind = ContactKind::Quad;
  else if (touch.dim() == 2 && touch.vertices().size() == 6) r.kind = ContactKind::Hexagon;
  r.region = std::move(touch);
  return r;
}

namespace {

Membership all_of(std::initializer_list<bool> conds) {
  for (bool c : conds)
    if (!c) return Membership::Out;
  return Membership::In;
}

}  // namespace

Membership in_triangle_delta(const Rat& x, const Rat& z) {
  return all_of({x <= Rat(2), z <= Rat(2), x + z >= Rat(2)});
}

Membership in_triangle_delta_star(const Rat& x, const Rat& z) {
  return all_of({x >= Rat(1), z >= Rat(1), x + z <= Rat(3)});
}

Membership in_triangle_delta_i(int i, const Rat& x, const Rat& z) {
  switch (i) {
    case 1: return all_of({x <= Rat(2), z <= Rat(2), x + Rat(2) * z >= Rat(5)});
    case 2: return all_of({x <= Rat(2), x + Rat(2) * z <= Rat(5), x + z >= Rat(3)});
    case 3: return all_of({x + z <= Rat(3), x >= Rat(1), x + Rat(2) * z >= Rat(4)});
    case 4: return all_of({x <= Rat(1), z <= Rat(2), x + Rat(2) * z >= Rat(4)});
    default: throw std::invalid_argument("triangle index must be 1..4");
  }
}

Membership in_region_h(const Rat& x, const Rat& z) {
  const Constants& k = Constants::get();
  Rat y = Rat(4) - x - z;
  Membership result = Membership::In;
  for (const Rat& v : {x, z, y}) {
    Cmp3 lo = k.alpha.compare(v);  // alpha vs v
    Cmp3 hi = k.beta.compare(v);
    if (lo == Cmp3::Greater || hi == Cmp3::Less) return Membership::Out;
    if (lo == Cmp3::Undecided || hi == Cmp3::Undecided) result = Membership::Undecided;
  }
  return result;
}

Membership in_triangle_delta_prime(const Rat& x, const Rat& z) {
  return all_of({x <= Rat(1), z <= Rat(1), x + z >= Rat(1)});
}

}  // namespace shadowpack
