#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shadowpack/polytope.hpp"

namespace shadowpack {

/// Parameters of a witness construction: the touching translate x1 with
/// x1 + y1 + z1 = 4, optionally a second translate and a sweep value t.
struct WitnessParams {
  Vec3 x1;
  std::optional<Vec3> x2;
  std::optional<Rat> t;
};

struct Witness {
  std::string name;
  ConvexPolytope poly;
  /// |homothety ratio| to the orthogonal unit corner tetrahedron, for the
  /// witnesses the construction states one for.
  std::optional<Rat> ratio;
};

/// The witness solids of a registered case, built exactly at the given
/// parameters.  Degenerate parameters give lower-dimensional witnesses.
std::vector<Witness> witness_polytopes(const std::string& case_id, const WitnessParams& p);

/// True iff the polytope is (a translate of) s * T0 up to point reflection,
/// with |s| = ratio: checks the volume and the squared edge lengths.
bool is_corner_homothet(const ConvexPolytope& poly, const Rat& ratio);

/// The corner region the fine case estimates carve their pieces from:
/// { 0<=x<=2, 0<=y<=1, 0<=z<=1, x-y+z<=2, x-y-z<=1, x+y-z<=2 }.
ConvexPolytope region_p1();

/// The sweep body volume of the two-translate barrier in the t-direction:
/// vol(S \ (C+(2,t,z1-2)) u (C+(2,t-2,z1-2))) for the box S built at x1.
Rat barrier_volume(const Vec3& x1, const Rat& t);
/// The box S itself (empty when degenerate), and the same volume against a
/// precomputed box, for sweeps over t.
ConvexPolytope barrier_box(const Vec3& x1);
Rat barrier_volume_in(const ConvexPolytope& box, const Vec3& x1, const Rat& t);

}  // namespace shadowpack
