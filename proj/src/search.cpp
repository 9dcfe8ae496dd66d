#include "shadowpack/search.hpp"

#include <stdexcept>

#include "shadowpack/bodies.hpp"
#include "shadowpack/fixtures.hpp"

namespace shadowpack {

namespace {

const Vec3 kOrigin{Rat(0), Rat(0), Rat(0)};

Rat objective(const Configuration& cfg, const std::vector<Vec3>& dirs) {
  return mu_bar_at_anchor(cfg, 0, dirs);
}

bool inside_3w(const Vec3& p) {
  return p.x.abs() <= Rat(3) && p.y.abs() <= Rat(3) && p.z.abs() <= Rat(3);
}

// packing test against a precomputed difference body
bool packing_ok(const ConvexPolytope& diff, const std::vector<Vec3>& anchors) {
  for (size_t i = 0; i < anchors.size(); ++i)
    for (size_t j = i + 1; j < anchors.size(); ++j) {
      Vec3 d = anchors[j] - anchors[i];
      if (d == kOrigin) return false;
      if (diff.contains_interior(d)) return false;
    }
  return true;
}

// only the pairs involving the moved anchor need rechecking
bool packing_ok_moved(const ConvexPolytope& diff, const std::vector<Vec3>& anchors,
                      size_t moved) {
  for (size_t i = 0; i < anchors.size(); ++i) {
    if (i == moved) continue;
    Vec3 d = anchors[moved] - anchors[i];
    if (d == kOrigin) return false;
    if (diff.contains_interior(d)) return false;
  }
  return true;
}

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

SearchReport search_min_shadow(const Configuration& init, const std::vector<Vec3>& directions,
                               const SearchOptions& opts) {
  if (init.anchors.empty() || !(init.anchors[0] == kOrigin))
    throw std::invalid_argument("search needs the origin as anchor 0");
  if (init.anchors.size() > opts.max_anchors)
    throw std::invalid_argument("configuration exceeds the anchor cap");
  if (!is_packing(init)) throw std::invalid_argument("initial configuration is not a packing");
  // anchors beyond the 3W window may ride along, but all proposed
  // positions stay inside it

  ConvexPolytope diff = difference_body(init.body);
  SearchReport rep;
  Configuration cur = init;
  rep.initial_value = objective(cur, directions);
  rep.trace.push_back(rep.initial_value);
  Rat cur_val = rep.initial_value;

  for (const Rat& step : opts.step_schedule) {
    for (int round = 0; round < opts.max_rounds_per_step; ++round) {
      // full sweep; keep the best strictly improving move
      bool found = false;
      Rat best_val = cur_val;
      size_t best_anchor = 0;
      Vec3 best_pos;
      for (size_t m = 1; m < cur.anchors.size(); ++m) {
        for (int c = 0; c < 3; ++c) {
          for (int s : {1, -1}) {
            Vec3 moved = cur.anchors[m];
            moved[c] += Rat(s) * step;
            if (!inside_3w(moved)) continue;
            std::vector<Vec3> trial = cur.anchors;
            trial[m] = moved;
            if (!packing_ok_moved(diff, trial, m)) continue;
            Configuration cand{cur.body, trial};
            ++rep.evaluations;
            Rat val = objective(cand, directions);
            if (val < best_val) {  // strict improvement; first win on ties
              best_val = val;
              best_anchor = m;
              best_pos = moved;
              found = true;
            }
          }
        }
      }
      if (!found) break;
      cur.anchors[best_anchor] = best_pos;
      cur_val = best_val;
      rep.trace.push_back(cur_val);
      ++rep.accepted;
    }
  }

  rep.best_value = cur_val;
  rep.best_config = cur;
  rep.undercut_conjecture = cur_val < Rat(16, 27);
  return rep;
}

Configuration perturbed_lambda1_config(std::uint64_t seed) {
  Configuration cfg = make_named_config("lambda1");
  if (seed == 0) return cfg;
  ConvexPolytope diff = difference_body(cfg.body);
  // try seeded dyadic nudges until one keeps the packing valid
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::uint64_t r = mix64(seed * 0x9E3779B97F4A7C15ull + attempt + 1);
    size_t m = 1 + (size_t)(r % (cfg.anchors.size() - 1));
    int coord = (int)((r >> 8) % 3);
    int sign = (r >> 16) & 1 ? 1 : -1;
    Rat mag = (r >> 24) & 1 ? Rat(1, 16) : Rat(1, 32);
    std::vector<Vec3> trial = cfg.anchors;
    trial[m][coord] += Rat(sign) * mag;
    if (!inside_3w(trial[m])) continue;
    if (!packing_ok_moved(diff, trial, m)) continue;
    cfg.anchors = trial;
    return cfg;
  }
  return cfg;  // no valid nudge found: fall back to the window itself
}

}  // namespace shadowpack
