#include "shadowpack/packing.hpp"

#include <algorithm>
#include <stdexcept>

namespace shadowpack {

Rat Lattice::determinant() const { return det3(basis[0], basis[1], basis[2]); }

std::vector<Vec3> Lattice::points_in(const ConvexPolytope& box) const {
  Rat det = determinant();
  if (det.is_zero()) throw std::domain_error("singular lattice basis");
  Vec3 lo, hi;
  box.bounding_box(lo, hi);

  // coefficient vector of x is solved from B^T z = x by Cramer (columns
  // of the coefficient matrix are the basis vectors)
  auto coeffs = [&](const Vec3& x) {
    const Vec3 &a = basis[0], &b = basis[1], &c = basis[2];
    // solve z0*a + z1*b + z2*c = x
    Rat z0 = det3(x, b, c) / det;
    Rat z1 = det3(a, x, c) / det;
    Rat z2 = det3(a, b, x) / det;
    return Vec3{z0, z1, z2};
  };

  Vec3 zlo, zhi;
  bool first = true;
  for (int mask = 0; mask < 8; ++mask) {
    Vec3 corner{mask & 1 ? hi.x : lo.x, mask & 2 ? hi.y : lo.y, mask & 4 ? hi.z : lo.z};
    Vec3 z = coeffs(corner);
    if (first) {
      zlo = zhi = z;
      first = false;
    } else {
      for (int c = 0; c < 3; ++c) {
        if (z[c] < zlo[c]) zlo[c] = z[c];
        if (z[c] > zhi[c]) zhi[c] = z[c];
      }
    }
  }

  std::vector<Vec3> out;
  mpz_class i0 = rat_floor(zlo.x), i1 = rat_ceil(zhi.x);
  mpz_class j0 = rat_floor(zlo.y), j1 = rat_ceil(zhi.y);
  mpz_class k0 = rat_floor(zlo.z), k1 = rat_ceil(zhi.z);
  for (mpz_class i = i0; i <= i1; ++i)
    for (mpz_class j = j0; j <= j1; ++j)
      for (mpz_class k = k0; k <= k1; ++k) {
        Vec3 p = basis[0] * Rat(i) + basis[1] * Rat(j) + basis[2] * Rat(k);
        if (box.contains(p)) out.push_back(p);
      }
  std::sort(out.begin(), out.end(), [](const Vec3& a, const Vec3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  });
  return out;
}

int Configuration::anchor_index(const Vec3& a) const {
  for (size_t i = 0; i < anchors.size(); ++i)
    if (anchors[i] == a) return (int)i;
  return -1;
}

bool is_packing(const Configuration& cfg) {
  ConvexPolytope diff = difference_body(cfg.body);
  for (size_t i = 0; i < cfg.anchors.size(); ++i)
    for (size_t j = i + 1; j < cfg.anchors.size(); ++j) {
      Vec3 d = cfg.anchors[j] - cfg.anchors[i];
      if (d == Vec3{Rat(0), Rat(0), Rat(0)}) return false;  // duplicate anchor
      if (diff.contains_interior(d)) return false;
    }
  return true;
}

Rat lattice_density(const ConvexPolytope& body, const Lattice& lattice) {
  Rat det = lattice.determinant();
  if (det.is_zero()) throw std::domain_error("singular lattice basis");
  ConvexPolytope diff = difference_body(body);
  Vec3 lo, hi;
  diff.bounding_box(lo, hi);
  ConvexPolytope bbox = ConvexPolytope::hull({lo,
                                              {hi.x, lo.y, lo.z},
                                              {lo.x, hi.y, lo.z},
                                              {lo.x, lo.y, hi.z},
                                              {hi.x, hi.y, lo.z},
                                              {hi.x, lo.y, hi.z},
                                              {lo.x, hi.y, hi.z},
                                              hi});
  for (const Vec3& p : lattice.points_in(bbox)) {
    if (p == Vec3{Rat(0), Rat(0), Rat(0)}) continue;
    if (diff.contains_interior(p))
      throw std::domain_error("body + lattice is not a packing");
  }
  return body.volume() / det.abs();
}

Configuration neighbors(const Configuration& cfg, int anchor, const ConvexPolytope& window) {
  const Vec3 center = cfg.anchors.at(anchor);
  ConvexPolytope reach = minkowski_sum(window, cfg.body.reflected());
  Configuration out;
  out.body = cfg.body;
  out.anchors.push_back(Vec3{Rat(0), Rat(0), Rat(0)});
  for (const auto& a : cfg.anchors) {
    Vec3 rel = a - center;
    if (rel == Vec3{Rat(0), Rat(0), Rat(0)}) continue;
    if (reach.contains(rel)) out.anchors.push_back(rel);
  }
  return out;
}

Configuration lattice_neighborhood(const ConvexPolytope& body, const Lattice& lattice,
                                   const ConvexPolytope& window) {
  ConvexPolytope reach = minkowski_sum(window, body.reflected());
  Configuration out;
  out.body = body;
  for (const auto& p : lattice.points_in(reach))
    if (reach.contains(p)) out.anchors.push_back(p);
  // origin first
  std::stable_sort(out.anchors.begin(), out.anchors.end(), [](const Vec3& a, const Vec3& b) {
    auto zero = [](const Vec3& v) {
      return v.x.is_zero() && v.y.is_zero() && v.z.is_zero();
    };
    return zero(a) && !zero(b);
  });
  return out;
}

}  // namespace shadowpack
