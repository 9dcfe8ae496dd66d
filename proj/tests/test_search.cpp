#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shadowpack/fixtures.hpp"
#include "shadowpack/search.hpp"

using namespace shadowpack;

namespace {
const std::vector<Vec3> kAxes = {{Rat(1), Rat(0), Rat(0)},
                                 {Rat(0), Rat(1), Rat(0)},
                                 {Rat(0), Rat(0), Rat(1)}};
}

TEST_CASE("single anchor has nothing to improve") {
  SearchOptions opts;
  opts.step_schedule = {Rat(1, 4)};
  SearchReport rep = search_min_shadow(make_named_config("single"), kAxes, opts);
  CHECK(rep.initial_value == Rat(14, 3));
  CHECK(rep.best_value == Rat(14, 3));
  CHECK(rep.accepted == 0);
  CHECK_FALSE(rep.undercut_conjecture);
}

TEST_CASE("search from the second lattice window is monotone") {
  SearchOptions opts;
  opts.step_schedule = {Rat(1, 4), Rat(1, 8)};
  opts.max_rounds_per_step = 4;
  SearchReport rep = search_min_shadow(make_named_config("lambda2"), kAxes, opts);
  CHECK(rep.initial_value == Rat(29, 18));
  CHECK(rep.best_value <= Rat(29, 18));
  for (size_t i = 1; i < rep.trace.size(); ++i) CHECK(rep.trace[i] < rep.trace[i - 1]);
  CHECK(is_packing(rep.best_config));
  // the conjectured floor holds along the way
  CHECK(rep.best_value >= Rat(16, 27));
}

TEST_CASE("unperturbed first lattice window is already minimal") {
  SearchOptions opts;
  opts.step_schedule = {Rat(1, 16), Rat(1, 32)};
  opts.max_rounds_per_step = 3;
  SearchReport rep = search_min_shadow(make_named_config("lambda1"), kAxes, opts);
  CHECK(rep.initial_value == Rat(16, 27));
  CHECK(rep.best_value == Rat(16, 27));
  CHECK(rep.accepted == 0);
  CHECK_FALSE(rep.undercut_conjecture);
}

TEST_CASE("a perturbed window recovers the lattice value") {
  Configuration cfg = perturbed_lambda1_config(3);
  CHECK(is_packing(cfg));
  SearchOptions opts;
  opts.seed = 3;
  opts.step_schedule = {Rat(1, 16), Rat(1, 32)};
  opts.max_rounds_per_step = 6;
  SearchReport rep = search_min_shadow(cfg, kAxes, opts);
  CHECK(rep.best_value <= rep.initial_value);
  CHECK(rep.best_value >= Rat(16, 27) - Rat(1, 1000000));
  CHECK(is_packing(rep.best_config));
}
