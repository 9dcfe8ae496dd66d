#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shadowpack/packing.hpp"
#include "shadowpack/polytope.hpp"

namespace shadowpack {

/// One prism of a shadow-region decomposition: over `region`, the shadow
/// column runs from floor (anchor exit sheet) to ceiling (first-blocker
/// entry sheet or localizer top).  Coordinates are in the canonical frame
/// in which the query direction is +e1.
struct ColumnCell {
  Polygon2 region;
  Affine2 floor;
  Affine2 ceiling;
  int blocker;  // anchor index of the first blocker, -1 for the localizer
};

struct ShadowResult {
  Rat volume{0};
  size_t cell_count = 0;
  std::vector<ColumnCell> cells;
  bool has_quadrants = false;
  std::array<Rat, 4> quadrants{};  // by footprint signs: (+,+),(+,-),(-,-),(-,+)
};

struct ShadowOptions {
  bool quadrants = false;
  bool keep_cells = false;
};

/// Exact shadow-region volume of the anchor's translate in the given
/// rational direction, clipped to the localizer (default: the cube of
/// half-width 2 centered at the anchor).  The anchor translate must lie
/// inside the localizer.
ShadowResult shadow_volume(const Configuration& cfg, int anchor, const Vec3& direction,
                           const ShadowOptions& opts = {},
                           const ConvexPolytope* localizer = nullptr);

struct MonteCarloResult {
  double estimate = 0;
  double stderr_est = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Unbiased ray-casting estimate of the same volume: footprint points are
/// sampled on a dyadic grid, each column height is computed exactly, and
/// only the averaging is floating point.
MonteCarloResult shadow_volume_mc(const Configuration& cfg, int anchor, const Vec3& direction,
                                  std::uint64_t samples, std::uint64_t seed,
                                  const ConvexPolytope* localizer = nullptr);

/// min over anchors of the shadow volume.
Rat mu_of_config(const Configuration& cfg, const Vec3& direction);
/// min over anchors of the average over directions of the shadow volume.
Rat mu_bar_of_config(const Configuration& cfg, const std::vector<Vec3>& directions);
/// The same average for one fixed anchor.
Rat mu_bar_at_anchor(const Configuration& cfg, int anchor, const std::vector<Vec3>& directions);

/// Exact volume of the intersection of two cell decompositions (both must
/// come from queries with the same direction).
Rat cells_intersection_volume(const std::vector<ColumnCell>& a, const std::vector<ColumnCell>& b);

/// "e1" | "e2" | "e3" | "x,y,z" with rational components.
Vec3 parse_direction(const std::string& s);

/// Unimodular integer matrix U (|det| = 1) with U*w a positive multiple
/// of e1; rows returned as vectors.  w must be a nonzero integer vector.
std::array<Vec3, 3> unimodular_to_e1(const Vec3& w);

}  // namespace shadowpack
