#include "shadowpack/fixtures.hpp"

#include <algorithm>
#include <stdexcept>

#include "shadowpack/bodies.hpp"

namespace shadowpack {

Lattice lattice_lambda1() {
  return Lattice{{Vec3{Rat(2), Rat(-1, 3), Rat(-1, 3)}, Vec3{Rat(-1, 3), Rat(2), Rat(-1, 3)},
                  Vec3{Rat(-1, 3), Rat(-1, 3), Rat(2)}}};
}

Lattice lattice_lambda2() {
  return Lattice{{Vec3{Rat(2), Rat(0), Rat(0)}, Vec3{Rat(1), Rat(3, 2), Rat(3, 2)},
                  Vec3{Rat(1), Rat(-3, 2), Rat(3, 2)}}};
}

namespace {

// anchor set restricted to the 3W box itself; exactly the translates that
// can shade the origin anchor
Configuration window_config(const ConvexPolytope& body, const Lattice& lattice) {
  Configuration cfg;
  cfg.body = body;
  ConvexPolytope window = make_cube(Rat(3));
  for (const auto& p : lattice.points_in(window)) cfg.anchors.push_back(p);
  std::stable_sort(cfg.anchors.begin(), cfg.anchors.end(), [](const Vec3& a, const Vec3& b) {
    auto zero = [](const Vec3& v) { return v.x.is_zero() && v.y.is_zero() && v.z.is_zero(); };
    return zero(a) && !zero(b);
  });
  return cfg;
}

}  // namespace

Configuration make_named_config(const std::string& name) {
  ConvexPolytope c = make_cuboctahedron();
  if (name == "lambda1") return window_config(c, lattice_lambda1());
  if (name == "lambda2") return window_config(c, lattice_lambda2());
  if (name == "single") return Configuration{c, {Vec3{Rat(0), Rat(0), Rat(0)}}};
  if (name == "thm31")
    return Configuration{c, {Vec3{Rat(0), Rat(0), Rat(0)}, Vec3{Rat(4, 3), Rat(4, 3), Rat(4, 3)}}};
  if (name == "lem42")
    return Configuration{c, {Vec3{Rat(0), Rat(0), Rat(0)}, Vec3{Rat(3, 2), Rat(3, 4), Rat(7, 4)}}};
  if (name == "lem44")
    return Configuration{c,
                         {Vec3{Rat(0), Rat(0), Rat(0)}, Vec3{Rat(9, 10), Rat(3, 2), Rat(8, 5)},
                          Vec3{Rat(2), Rat(-1, 2), Rat(-1, 4)}}};
  throw std::invalid_argument("unknown configuration name: " + name);
}

std::vector<std::string> named_config_list() {
  return {"lambda1", "lambda2", "single", "thm31", "lem42", "lem44"};
}

}  // namespace shadowpack
