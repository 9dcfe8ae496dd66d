#pragma once

#include <cstdint>
#include <vector>

#include "shadowpack/packing.hpp"
#include "shadowpack/shadow.hpp"

namespace shadowpack {

struct SearchOptions {
  std::vector<Rat> step_schedule = {Rat(1, 8), Rat(1, 16), Rat(1, 32)};
  std::uint64_t seed = 0;
  size_t max_anchors = 64;
  int max_rounds_per_step = 50;
};

struct SearchReport {
  Rat initial_value;
  Rat best_value;
  Configuration best_config;
  std::vector<Rat> trace;  // objective after each accepted move, non-increasing
  std::uint64_t evaluations = 0;
  std::uint64_t accepted = 0;
  bool undercut_conjecture = false;  // best value below 16/27?
};

/// Derivative-free pattern search over the anchor positions (the origin
/// anchor stays fixed), restricted to the 3W window.  The objective is the
/// origin-anchor direction average of exact shadow volumes; moves that
/// violate the difference-body packing test are rejected, strictly
/// decreasing moves are accepted (best improvement, lexicographic
/// tie-break), and the search stops when the step schedule is exhausted.
SearchReport search_min_shadow(const Configuration& init, const std::vector<Vec3>& directions,
                               const SearchOptions& opts = {});

/// A seeded perturbation of the first-lattice window: one non-origin anchor
/// nudged by a dyadic step, keeping the packing valid.  Seed 0 returns the
/// unperturbed window.
Configuration perturbed_lambda1_config(std::uint64_t seed);

}  // namespace shadowpack
