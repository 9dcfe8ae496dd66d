#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shadowpack/interval.hpp"
#include "shadowpack/packing.hpp"
#include "shadowpack/witnesses.hpp"

namespace shadowpack {

/// Outcome of one registered inequality verification.
struct Verdict {
  std::string case_id;
  bool pass = false;
  Rat grid_step;                     // requested step
  std::vector<Rat> effective_steps;  // per axis, after the point budget
  std::uint64_t points_admissible = 0;
  std::uint64_t points_skipped_undecided = 0;
  std::uint64_t violations = 0;
  std::optional<Interval> minimum;   // enclosure of the smallest value found
  std::optional<Interval> margin;    // minimum - claimed constant
  std::vector<Rat> argmin;
  std::string note;
};

/// Per-point CSV sink: parameters, value, margin (doubles are advisory;
/// certification happens independently).
using GridRowSink = std::function<void(const std::vector<Rat>&, double, double)>;

/// Sweeps the registered scalar inequality on a grid of step h and
/// certifies nonnegative margins; near-minimal points are re-evaluated in
/// interval arithmetic.  Throws on unknown ids.
Verdict verify_scalar_bound(const std::string& case_id, const Rat& h,
                            const GridRowSink& sink = nullptr);

/// All registered case ids, in registry order.
std::vector<std::string> registered_case_ids();
/// Expands an id or a group prefix ("lem44" etc., or "all").
std::vector<std::string> resolve_case_ids(const std::string& query);

struct GeometryReport {
  bool pass = false;
  std::vector<std::string> failures;
  Rat witness_union_volume;
  std::optional<Rat> shadow_quadrant_volume;
  std::vector<std::string> notes;
};

/// Checks the witness solids of a case at given parameters against a
/// concrete packing configuration:
///   (a) overlap structure (pairwise disjoint where the case claims it),
///   (b) every witness interior-disjoint from every translate,
///   (c) witnesses inside the localizer cube of the origin anchor,
///   (d) total witness volume at most the exact first-quadrant shadow
///       volume of the origin anchor (direction e1),
///   (e) no triangular facet of any translate is touched by two other
///       translates at its relative interior,
/// plus the stated homothety ratios and, where the construction has a
/// closed form, agreement of the union volume with that formula.
GeometryReport verify_witness_geometry(const std::string& case_id, const WitnessParams& params,
                                       const Configuration& cfg);

}  // namespace shadowpack
