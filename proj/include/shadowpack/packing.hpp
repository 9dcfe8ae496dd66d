#pragma once

#include <array>
#include <vector>

#include "shadowpack/polytope.hpp"

namespace shadowpack {

struct Lattice {
  std::array<Vec3, 3> basis;

  Rat determinant() const;  // signed
  /// All lattice points inside the (bounded) box, in lexicographic order.
  std::vector<Vec3> points_in(const ConvexPolytope& box) const;
};

/// A convex body together with a finite anchor set of translates.
/// Anchors are deduplicated; by convention the first anchor of a
/// recentered configuration is the origin.
struct Configuration {
  ConvexPolytope body;
  std::vector<Vec3> anchors;

  int anchor_index(const Vec3& a) const;
};

/// True iff no two translates overlap: x_j - x_i outside the open
/// difference body for every pair.
bool is_packing(const Configuration& cfg);

/// vol(body) / |det|, after verifying that body + lattice is a packing
/// (every nonzero lattice point in the bounding box of the difference
/// body must lie outside its interior).  Throws when not a packing.
Rat lattice_density(const ConvexPolytope& body, const Lattice& lattice);

/// Recentred sub-configuration around the given anchor: keeps exactly the
/// anchors whose translates can meet the window.
Configuration neighbors(const Configuration& cfg, int anchor, const ConvexPolytope& window);

/// Lattice translates recentred at the origin whose bodies can meet the
/// window (default use: window = 3W).
Configuration lattice_neighborhood(const ConvexPolytope& body, const Lattice& lattice,
                                   const ConvexPolytope& window);

}  // namespace shadowpack
