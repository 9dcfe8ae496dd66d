#include "shadowpack/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "shadowpack/bodies.hpp"
#include "shadowpack/constants.hpp"
#include "shadowpack/shadow.hpp"

namespace shadowpack {

namespace {

// ---- uniform double / interval evaluation ---------------------------------

struct DCtx {
  double alpha, beta;
  double r(long n, long d) const { return (double)n / (double)d; }
};
struct ICtx {
  Interval alpha, beta;
  Interval r(long n, long d) const { return Interval(Rat(n, d)); }
};

inline double cube(double x) { return x * x * x; }
inline double sq(double x) { return x * x; }
inline Interval cube(const Interval& x) { return x.cube(); }
inline Interval sq(const Interval& x) { return x.square(); }

using DFn = std::function<double(const double*, const DCtx&)>;
using IFn = std::function<Interval(const Interval*, const ICtx&)>;

struct Constraint {
  DFn d;
  IFn i;
  bool strict = false;
};

struct VarSpec {
  const char* name;
  Rat lo, hi;
  bool primary = true;
};

struct CaseDef {
  std::string id;
  std::vector<VarSpec> vars;
  std::vector<Constraint> cons;
  DFn f_d;
  IFn f_i;
  Interval claim;
  bool expect_empty = false;
  bool geometric = false;
};

template <class F>
Constraint con(F f, bool strict = false) {
  return Constraint{[f](const double* v, const DCtx& k) { return f(v, k); },
                    [f](const Interval* v, const ICtx& k) { return f(v, k); }, strict};
}

template <class F>
void set_expr(CaseDef& c, F f) {
  c.f_d = [f](const double* v, const DCtx& k) { return f(v, k); };
  c.f_i = [f](const Interval* v, const ICtx& k) { return f(v, k); };
}

// ---- shared domains (v[0] = x1, v[1] = z1 unless stated otherwise) ---------

void dom_delta(CaseDef& c) {
  c.cons.push_back(con([](const auto* v, const auto& k) { return k.r(2, 1) - v[0]; }));
  c.cons.push_back(con([](const auto* v, const auto& k) { return k.r(2, 1) - v[1]; }));
  c.cons.push_back(con([](const auto* v, const auto& k) { return v[0] + v[1] - k.r(2, 1); }));
}

void dom_h(CaseDef& c) {
  c.cons.push_back(con([](const auto* v, const auto& k) { return v[0] - k.alpha; }));
  c.cons.push_back(con([](const auto* v, const auto& k) { return k.beta - v[0]; }));
  c.cons.push_back(con([](const auto* v, const auto& k) { return v[1] - k.alpha; }));
  c.cons.push_back(con([](const auto* v, const auto& k) { return k.beta - v[1]; }));
  c.cons.push_back(
      con([](const auto* v, const auto& k) { return (k.r(4, 1) - v[0] - v[1]) - k.alpha; }));
  c.cons.push_back(
      con([](const auto* v, const auto& k) { return k.beta - (k.r(4, 1) - v[0] - v[1]); }));
}

void dom_delta_1(CaseDef& c) {
  c.cons.push_back(con([](const auto* v, const auto& k) { return k.r(2, 1) - v[0]; }));
  c.cons.push_back(con([](const auto* v, const auto& k) { return k.r(2, 1) - v[1]; }));
  c.cons.push_back(
      con([](const auto* v, const auto& k) { return v[0] + k.r(2, 1) * v[1] - k.r(5, 1); }));
}

void dom_delta_2(CaseDef& c) {
  c.cons.push_back(con([](const auto* v, const auto& k) { return k.r(2, 1) - v[0]; }));
  c.cons.push_back(
      con([](const auto* v, const auto& k) { return k.r(5, 1) - v[0] - k.r(2, 1) * v[1]; }));
  c.cons.push_back(con([](const auto* v, const auto& k) { return v[0] + v[1] - k.r(3, 1); }));
}

void dom_delta_3(CaseDef& c) {
  c.cons.push_back(con([](const auto* v, const auto& k) { return k.r(3, 1) - v[0] - v[1]; }));
  c.cons.push_back(con([](const auto* v, const auto& k) { return v[0] - k.r(1, 1); }));
  c.cons.push_back(
      con([](const auto* v, const auto& k) { return v[0] + k.r(2, 1) * v[1] - k.r(4, 1); }));
}

void dom_delta_4(CaseDef& c) {
  c.cons.push_back(con([](const auto* v, const auto& k) { return k.r(1, 1) - v[0]; }));
  c.cons.push_back(con([](const auto* v, const auto& k) { return k.r(2, 1) - v[1]; }));
  c.cons.push_back(
      con([](const auto* v, const auto& k) { return v[0] + k.r(2, 1) * v[1] - k.r(4, 1); }));
}

void dom_d44(CaseDef& c) {
  dom_delta_4(c);
  dom_h(c);
}

void dom_d45(CaseDef& c) {
  dom_delta_3(c);
  dom_h(c);
  c.cons.push_back(con([](const auto* v, const auto& k) { return k.r(317, 200) - v[0]; }));
}

// x2 = (2, y2, z2) constraints: membership in the forward slab and contact
// with the square facet (|y2| + |z2| <= 2)
template <int IY, int IZ>
void dom_x2(CaseDef& c) {
  c.cons.push_back(con([](const auto* v, const auto& k) { return v[IY] + k.r(1, 1); }));
  c.cons.push_back(con([](const auto* v, const auto& k) { return k.r(2, 1) - v[IY]; }));
  c.cons.push_back(con([](const auto* v, const auto& k) { return v[IZ] + k.r(1, 1); }));
  c.cons.push_back(con([](const auto* v, const auto& k) { return k.r(2, 1) - v[IZ]; }));
  c.cons.push_back(
      con([](const auto* v, const auto& k) { return k.r(2, 1) - v[IZ] + v[IY]; }));
  c.cons.push_back(
      con([](const auto* v, const auto& k) { return k.r(2, 1) - v[IY] + v[IZ]; }));
  c.cons.push_back(
      con([](const auto* v, const auto& k) { return v[IY] + v[IZ] + k.r(1, 1); }));
  c.cons.push_back(
      con([](const auto* v, const auto& k) { return k.r(2, 1) - v[IY] - v[IZ]; }));
}

// ---- the registry -----------------------------------------------------------

std::vector<CaseDef> build_registry() {
  std::vector<CaseDef> reg;
  const Constants& kc = Constants::get();
  const Interval c_star = kc.c_star;
  const unsigned bits = 160;
  const Interval claim_43b =
      Interval(Rat(6)) / (Interval(Rat(5)) + Interval(Rat(2)) * sqrt_enclosure(Rat(6), bits));
  const Interval claim_43c =
      (Interval(Rat(11)) + Interval(Rat(2)) * kc.sqrt2) /
      (Interval(Rat(12)) + Interval(Rat(8)) * kc.sqrt2);
  if (claim_43b.compare(kc.lemma43_const) == Cmp3::Less ||
      claim_43c.compare(kc.lemma43_const) == Cmp3::Less)
    throw std::logic_error("chain constants out of order");

  auto add = [&](CaseDef c) { reg.push_back(std::move(c)); };
  const Rat a_lo(7, 10), b_hi(9, 5);  // outer rational bounds for alpha, beta

  {  // 1D reduced hexagon-case bound
    CaseDef c;
    c.id = "thm31";
    c.vars = {{"x1", Rat(1), Rat(2)}};
    set_expr(c, [](const auto* v, const auto& k) {
      return k.r(2, 1) * cube(v[0] - k.r(1, 1)) +
             k.r(2, 1) * cube(k.r(1, 1) - v[0] * k.r(1, 2));
    });
    c.claim = kc.thm31_const;
    add(c);
  }
  {  // parallelogram-side witness pair over the fourth triangle
    CaseDef c;
    c.id = "thm31.para";
    c.vars = {{"x1", Rat(0), Rat(1)}, {"z1", Rat(3, 2), Rat(2)}};
    dom_delta_4(c);
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return cube(y1 - k.r(1, 1)) + cube(v[1] - k.r(1, 1)) - cube(k.r(1, 1) - v[0]);
    });
    c.claim = Interval(Rat(1, 4));
    add(c);
  }

  // out-of-window cases: one coordinate beyond the bracket
  auto add_lem41 = [&](const char* id, auto expr, int mode) {
    CaseDef c;
    c.id = id;
    c.vars = {{"x1", Rat(0), Rat(2)}, {"z1", Rat(0), Rat(2)}};
    dom_delta(c);
    switch (mode) {  // 0: x>=beta, 1: x<=alpha, 2: y>=beta, 3: y<=alpha, 4: z>=beta, 5: z<=alpha
      case 0:
        c.cons.push_back(con([](const auto* v, const auto& k) { return v[0] - k.beta; }));
        break;
      case 1:
        c.cons.push_back(con([](const auto* v, const auto& k) { return k.alpha - v[0]; }));
        break;
      case 2:
        c.cons.push_back(con(
            [](const auto* v, const auto& k) { return (k.r(4, 1) - v[0] - v[1]) - k.beta; }));
        break;
      case 3:
        c.cons.push_back(con(
            [](const auto* v, const auto& k) { return k.alpha - (k.r(4, 1) - v[0] - v[1]); }));
        break;
      case 4:
        c.cons.push_back(con([](const auto* v, const auto& k) { return v[1] - k.beta; }));
        break;
      case 5:
        c.cons.push_back(con([](const auto* v, const auto& k) { return k.alpha - v[1]; }));
        break;
    }
    set_expr(c, expr);
    c.claim = Interval(Rat(1, 2));
    add(c);
  };
  add_lem41("lem41.x_hi",
            [](const auto* v, const auto& k) { return cube(v[0] - k.r(1, 1)); }, 0);
  add_lem41("lem41.x_lo",
            [](const auto* v, const auto& k) {
              auto y1 = k.r(4, 1) - v[0] - v[1];
              return cube(y1 - k.r(1, 1)) + cube(v[1] - k.r(1, 1)) - cube(k.r(1, 1) - v[0]);
            },
            1);
  add_lem41("lem41.y_hi",
            [](const auto* v, const auto& k) {
              return cube(k.r(4, 1) - v[0] - v[1] - k.r(1, 1));
            },
            2);
  add_lem41("lem41.y_lo",
            [](const auto* v, const auto& k) {
              auto y1 = k.r(4, 1) - v[0] - v[1];
              return cube(v[0] - k.r(1, 1)) + cube(v[1] - k.r(1, 1)) - cube(k.r(1, 1) - y1);
            },
            3);
  add_lem41("lem41.z_hi",
            [](const auto* v, const auto& k) { return cube(v[1] - k.r(1, 1)); }, 4);
  add_lem41("lem41.z_lo",
            [](const auto* v, const auto& k) {
              auto y1 = k.r(4, 1) - v[0] - v[1];
              return cube(v[0] - k.r(1, 1)) + cube(y1 - k.r(1, 1)) - cube(k.r(1, 1) - v[1]);
            },
            5);

  {  // first parallelogram triangle: four-solid union formula
    CaseDef c;
    c.id = "lem42";
    c.vars = {{"x1", Rat(1), Rat(2)}, {"z1", Rat(3, 2), Rat(2)}};
    dom_delta_1(c);
    set_expr(c, [](const auto* v, const auto& k) {
      return cube(v[0] - k.r(1, 1)) + cube(v[1] - k.r(1, 1)) + cube(k.r(2, 1) - v[1]) -
             cube(k.r(2, 1) * v[1] + v[0] - k.r(5, 1));
    });
    c.claim = Interval(Rat(9, 16));
    add(c);
  }

  // second parallelogram triangle: base solids plus the barrier term
  auto add_lem43 = [&](const char* id, auto extra, Interval claim) {
    CaseDef c;
    c.id = id;
    c.vars = {{"x1", Rat(1), Rat(2)}, {"z1", Rat(1), Rat(2)}};
    dom_delta_2(c);
    set_expr(c, [extra](const auto* v, const auto& k) {
      return cube(v[0] - k.r(1, 1)) + cube(v[1] - k.r(1, 1)) + cube(k.r(2, 1) - v[1]) +
             extra(v, k);
    });
    c.claim = claim;
    add(c);
  };
  add_lem43("lem43.s1",
            [](const auto* v, const auto& k) {
              return k.r(2, 1) *
                     cube((k.r(2, 1) * v[0] + v[1] - k.r(3, 1)) * k.r(1, 3));
            },
            kc.lemma43_const);
  add_lem43("lem43.s2",
            [](const auto* v, const auto& k) { return k.r(2, 1) * cube(v[1] - k.r(1, 1)); },
            claim_43b);
  add_lem43("lem43.s3",
            [](const auto* v, const auto& k) {
              (void)v;
              return k.r(1, 4);
            },
            claim_43c);
  {  // geometric barrier sweep, handled by a dedicated runner
    CaseDef c;
    c.id = "lem43.pt";
    c.vars = {{"x1", Rat(1), Rat(2)}, {"z1", Rat(1), Rat(2)}};
    dom_delta_2(c);
    set_expr(c, [](const auto* v, const auto& k) { (void)v; return k.r(0, 1); });
    c.claim = Interval(Rat(0));
    c.geometric = true;
    add(c);
  }

  // fourth triangle inside the bracket box
  {
    CaseDef c;
    c.id = "lem44.case1";
    c.vars = {{"x1", a_lo, Rat(1)}, {"z1", Rat(3, 2), b_hi}};
    dom_d44(c);
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return cube(y1 - k.r(1, 1)) + cube(v[1] - k.r(1, 1)) - cube(k.r(1, 1) - v[0]) + v[0];
    });
    c.claim = Interval(Rat(1));
    add(c);
  }
  auto add_s21 = [&](const char* id) {
    CaseDef c;
    c.id = id;
    c.vars = {{"x1", a_lo, Rat(1)}, {"z1", Rat(3, 2), b_hi}};
    dom_d44(c);
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return cube(y1 - k.r(1, 1)) + cube(v[1] - k.r(1, 1)) - cube(k.r(1, 1) - v[0]) +
             cube(k.r(1, 1) + v[0] - y1) + cube(k.r(1, 1) + v[0] - v[1]);
    });
    c.claim = c_star;
    add(c);
  };
  add_s21("lem44.s2_1");
  add_s21("lem44.s3_1");
  {
    CaseDef c;
    c.id = "lem44.s2_2";
    c.vars = {{"x1", a_lo, Rat(1)}, {"z1", Rat(3, 2), b_hi}, {"y2", Rat(-1), Rat(0), false}};
    dom_d44(c);
    c.cons.push_back(con([](const auto* v, const auto& k) {
      return v[2] - (k.r(4, 1) - v[0] - v[1] - k.r(2, 1));
    }));
    c.cons.push_back(con([](const auto* v, const auto& k) { return v[1] - k.r(2, 1) - v[2]; }));
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return k.r(1, 1) + cube(v[1] - k.r(1, 1)) - k.r(2, 1) * cube(k.r(1, 1) - v[0]) -
             cube(v[2] + k.r(1, 1)) -
             k.r(3, 2) * sq(k.r(2, 1) * v[1] - k.r(3, 1)) * v[0] -
             k.r(1, 4) * cube(v[1] - y1);
    });
    c.claim = c_star;
    add(c);
  }
  {
    CaseDef c;
    c.id = "lem44.s3_2";
    c.vars = {{"x1", a_lo, Rat(1)}, {"z1", Rat(3, 2), b_hi}};
    dom_d44(c);
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return k.r(1, 1) + cube(y1 - k.r(1, 1)) - k.r(3, 1) * cube(k.r(1, 1) - v[0]) -
             cube(k.r(2, 1) - v[1]) - k.r(3, 2) * sq(k.r(2, 1) * v[1] - k.r(3, 1)) * v[0] -
             k.r(1, 4) * cube(v[1] - y1);
    });
    c.claim = c_star;
    add(c);
  }
  {
    CaseDef c;
    c.id = "lem44.s3_3";
    c.vars = {{"x1", a_lo, Rat(1)},
              {"z1", Rat(3, 2), b_hi},
              {"y2", Rat(-1), Rat(0), false},
              {"z2", Rat(5, 4), Rat(2), false}};
    dom_d44(c);
    dom_x2<2, 3>(c);
    c.cons.push_back(con([](const auto* v, const auto& k) {
      return (k.r(4, 1) - v[0] - v[1] - k.r(2, 1)) - v[2];
    }));
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return k.r(1, 1) + cube(y1 - k.r(1, 1)) + cube(v[1] - k.r(1, 1)) -
             k.r(2, 1) * cube(k.r(1, 1) - v[0]) - cube(v[3] - k.r(1, 1)) -
             k.r(1, 4) * cube(k.r(2, 1) + v[2] - v[3]) + cube(v[2]) -
             k.r(3, 2) * sq(v[2] + v[3] - k.r(1, 1)) * v[0];
    });
    c.claim = c_star;
    add(c);
  }
  {
    CaseDef c;
    c.id = "lem44.s3_4a";
    c.vars = {{"y2", Rat(-4, 5), Rat(-1, 3)}};
    c.cons.push_back(
        con([](const auto* v, const auto& k) { return k.r(0, 1) - v[0] - k.alpha * k.r(1, 2); }));
    set_expr(c, [](const auto* v, const auto& k) {
      return k.r(5, 4) - k.r(1, 64) -
             k.r(1, 4) * cube(k.r(1, 1) - k.alpha * k.r(1, 2)) + cube(v[0]) -
             k.r(3, 2) * sq(v[0]) * (v[0] + k.r(1, 1)) - cube(k.r(1, 1) - k.alpha);
    });
    c.claim = c_star;
    add(c);
  }
  {
    CaseDef c;
    c.id = "lem44.s3_4b";
    c.vars = {{"z1", Rat(3, 2), b_hi}, {"z2", Rat(1), Rat(5, 4), false}};
    c.cons.push_back(con([](const auto* v, const auto& k) { return k.beta - v[0]; }));
    set_expr(c, [](const auto* v, const auto& k) {
      return k.r(5, 4) - k.r(1, 125) - k.r(1, 4) * cube(k.beta - k.r(1, 1)) -
             cube(k.r(1, 1) - v[0] + v[1]) - k.r(3, 8) * (v[0] - v[1]);
    });
    c.claim = Interval(Rat(1, 2));
    add(c);
  }
  {
    CaseDef c;
    c.id = "lem44.s3_5";
    c.vars = {{"x1", a_lo, Rat(1)}, {"z1", Rat(3, 2), b_hi}, {"y2", Rat(-1), Rat(0), false}};
    dom_d44(c);
    c.cons.push_back(con([](const auto* v, const auto& k) {
      return (k.r(4, 1) - v[0] - v[1] - k.r(2, 1)) - v[2];
    }));
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return k.r(1, 1) + cube(y1 - k.r(1, 1)) + cube(v[1] - k.r(1, 1)) -
             k.r(2, 1) * cube(k.r(1, 1) - v[0]) - cube(k.r(1, 1) + v[2]) -
             k.r(1, 4) * cube(v[1] - v[2] - k.r(2, 1)) - cube(k.r(2, 1) - v[1]) -
             k.r(3, 4) * sq(k.r(1, 1) - v[2] - v[1]) * (k.r(4, 1) + v[2] - v[1]);
    });
    c.claim = Interval(Rat(1, 2));
    add(c);
  }
  {
    CaseDef c;
    c.id = "lem44.s3_6";
    c.vars = {{"x1", a_lo, Rat(1)},
              {"z1", Rat(3, 2), b_hi},
              {"y2", Rat(-1), Rat(-1, 5), false},
              {"z2", Rat(-1), Rat(-1, 5), false}};
    dom_d44(c);
    dom_x2<2, 3>(c);
    c.cons.push_back(con([](const auto* v, const auto& k) {
      return (k.r(4, 1) - v[0] - v[1] - k.r(2, 1)) - v[2];
    }));
    c.cons.push_back(con([](const auto* v, const auto& k) {
      return (k.r(4, 1) - v[0] - v[1] - k.r(2, 1)) - v[3];
    }));
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return k.r(1, 1) + cube(y1 - k.r(1, 1)) + cube(v[1] - k.r(1, 1)) -
             k.r(2, 1) * cube(k.r(1, 1) - v[0]) + cube(v[2]) + cube(v[3]) -
             k.r(3, 2) * sq(v[2] - v[3]) * v[0];
    });
    c.claim = Interval(Rat(4, 5));
    add(c);
  }
  auto add_s37 = [&](const char* id, const Rat& z2lo, const Rat& z2hi, auto weight,
                     Interval claim) {
    CaseDef c;
    c.id = id;
    c.vars = {{"x1", a_lo, Rat(1)},
              {"z1", Rat(3, 2), b_hi},
              {"y2", Rat(6, 5), Rat(2), false},
              {"z2", z2lo, z2hi, false}};
    dom_d44(c);
    dom_x2<2, 3>(c);
    c.cons.push_back(con([](const auto* v, const auto& k) {
      return (v[1] - k.r(2, 1)) - v[3];
    }));
    set_expr(c, [weight](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return k.r(1, 1) + cube(y1 - k.r(1, 1)) + cube(v[1] - k.r(1, 1)) -
             k.r(2, 1) * cube(k.r(1, 1) - v[0]) - cube(v[3] + k.r(1, 1)) + cube(v[3]) -
             k.r(3, 2) * weight(v, k) * (v[3] + k.r(1, 1));
    });
    c.claim = claim;
    add(c);
  };
  add_s37("lem44.s3_7a", Rat(-4, 5), Rat(-2, 5),
          [](const auto* v, const auto& k) { return sq(v[3] + k.r(1, 5)); },
          Interval(Rat(3, 5)));
  add_s37("lem44.s3_7b", Rat(-2, 5), Rat(0),
          [](const auto* v, const auto& k) { return sq(k.r(2, 1) * v[3] + k.r(1, 1)); },
          Interval(Rat(1, 2)));
  {
    CaseDef c;
    c.id = "lem44.s3_8a";
    c.vars = {{"x1", a_lo, Rat(1)}, {"z1", Rat(3, 2), b_hi}};
    dom_d44(c);
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return cube(y1 - k.r(1, 1)) + cube(v[1] - k.r(1, 1)) - cube(k.r(1, 1) - v[0]) +
             k.r(2, 1) * cube(k.r(1, 1) - v[1] * k.r(1, 3));
    });
    c.claim = c_star;
    add(c);
  }
  {
    CaseDef c;
    c.id = "lem44.s3_8b";
    c.vars = {{"x1", a_lo, Rat(1)},
              {"z1", Rat(3, 2), b_hi},
              {"y2", Rat(1), Rat(6, 5), false},
              {"z2", Rat(-1), Rat(-4, 5), false}};
    dom_d44(c);
    dom_x2<2, 3>(c);
    c.cons.push_back(con([](const auto* v, const auto& k) {
      return (k.r(4, 1) - v[0] - v[1] - k.r(2, 1)) - v[3];
    }));
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return cube(y1 - k.r(1, 1)) + cube(v[1] - k.r(1, 1)) - cube(k.r(1, 1) - v[0]) +
             k.r(2, 1) * (k.r(2, 1) - v[2]) * (v[1] - v[3] - k.r(2, 1)) *
                 (k.r(3, 2) + v[3]);
    });
    c.claim = c_star;
    add(c);
  }
  {
    CaseDef c;
    c.id = "lem44.s3_8c";
    c.vars = {{"x1", a_lo, Rat(1)}, {"z1", Rat(3, 2), b_hi}, {"z2", Rat(-4, 5), Rat(0), false}};
    dom_d44(c);
    c.cons.push_back(con([](const auto* v, const auto& k) {
      return (k.r(4, 1) - v[0] - v[1] - k.r(2, 1)) - v[2];
    }));
    set_expr(c, [](const auto* v, const auto& k) {
      return k.r(5, 4) - cube(v[2] + k.r(1, 1)) + cube(v[2]) -
             k.r(3, 2) * sq(v[2]) * (v[2] + k.r(1, 1)) - cube(k.r(1, 1) - v[0]);
    });
    c.claim = Interval(Rat(1, 2));
    add(c);
  }
  {
    CaseDef c;
    c.id = "lem44.s3_8d";
    c.vars = {{"x1", a_lo, Rat(1)}, {"z1", Rat(3, 2), b_hi}};
    dom_d44(c);
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return k.r(1, 1) + cube(v[1] - k.r(1, 1)) - k.r(2, 1) * cube(k.r(1, 1) - v[0]) -
             cube(k.r(2, 1) - y1) - k.r(3, 2) * sq(k.r(2, 1) - y1) * (y1 - k.r(1, 1));
    });
    c.claim = Interval(Rat(7, 10));
    add(c);
  }
  {
    CaseDef c;
    c.id = "lem44.s3_9a";
    c.vars = {{"x1", a_lo, Rat(1)}, {"z1", Rat(3, 2), b_hi}, {"z2", Rat(-1), Rat(-4, 5), false}};
    dom_d44(c);
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return k.r(5, 4) - cube(k.r(2, 1) - y1) - k.r(1, 125) -
             k.r(1, 4) * cube(k.r(1, 1) - k.alpha * k.r(1, 2)) -
             k.r(3, 2) * sq(k.r(1, 1) - y1 - v[2]) * (y1 - k.r(1, 1)) -
             cube(k.r(1, 1) - k.alpha);
    });
    c.claim = c_star;
    add(c);
  }
  {
    CaseDef c;
    c.id = "lem44.s3_9b";
    c.vars = {{"x1", a_lo, Rat(1)},
              {"z1", Rat(3, 2), b_hi},
              {"y2", Rat(-1, 2), Rat(0), false},
              {"z2", Rat(-4, 5), Rat(0), false}};
    dom_d44(c);
    dom_x2<2, 3>(c);
    c.cons.push_back(con([](const auto* v, const auto& k) {  // z1-2 <= y2 <= 0
      return v[2] - (v[1] - k.r(2, 1));
    }));
    c.cons.push_back(con([](const auto* v, const auto& k) { return k.r(0, 1) - v[2]; }));
    c.cons.push_back(con([](const auto* v, const auto& k) {  // z2 <= z1-2
      return (v[1] - k.r(2, 1)) - v[3];
    }));
    set_expr(c, [](const auto* v, const auto& k) {
      return k.r(5, 4) + cube(v[2]) + cube(v[3]) -
             k.r(3, 2) * sq(v[2] - v[3]) * (v[3] + k.r(1, 1)) - cube(k.r(1, 1) - v[0]);
    });
    c.claim = c_star;
    add(c);
  }

  // third triangle (hexagon side) inside the bracket box
  {
    CaseDef c;
    c.id = "lem45.c0";
    c.vars = {{"x1", Rat(1), Rat(2)}, {"z1", Rat(1), Rat(2)}};
    dom_delta_3(c);
    dom_h(c);
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return k.r(2, 1) * cube(v[0] - k.r(1, 1)) + cube(y1 - k.r(1, 1)) +
             cube(v[1] - k.r(1, 1));
    });
    c.claim = kc.thm31_const;
    add(c);
  }
  auto add_reflected = [&](const char* id) {
    CaseDef c;
    c.id = id;
    c.vars = {{"x1", Rat(1), Rat(3, 2)}};
    set_expr(c, [](const auto* v, const auto& k) {
      return k.r(2, 1) * cube(v[0] * k.r(1, 2)) - cube(v[0] - k.r(1, 1)) +
             k.r(2, 1) * cube(k.r(2, 1) - k.r(3, 2) * v[0]);
    });
    c.claim = c_star;
    add(c);
  };
  add_reflected("lem45.c1_1");
  add_reflected("lem45.c2_1");
  auto add_c22 = [&](const char* id, bool cap_half) {
    CaseDef c;
    c.id = id;
    c.vars = {{"x1", Rat(1), Rat(317, 200)}, {"z1", Rat(6, 5), b_hi}};
    dom_d45(c);
    if (cap_half)
      c.cons.push_back(con([](const auto* v, const auto& k) { return k.r(3, 2) - v[0]; }));
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return k.r(1, 1) + k.r(2, 1) * cube(v[0] - k.r(1, 1)) + cube(y1 - k.r(1, 1)) -
             cube(k.r(2, 1) - v[1]) - k.r(27, 50) * (v[1] - k.r(1, 1)) -
             k.r(1, 4) * cube(v[1] - y1);
    });
    c.claim = c_star;
    add(c);
  };
  add_c22("lem45.c1_2", true);
  add_c22("lem45.c2_2", false);
  auto add_p4_case = [&](const char* id, const Rat& y2lo, const Rat& z2lo, const Rat& z2hi) {
    CaseDef c;
    c.id = id;
    c.vars = {{"x1", Rat(1), Rat(317, 200)},
              {"z1", Rat(6, 5), b_hi},
              {"y2", y2lo, Rat(0), false},
              {"z2", z2lo, z2hi, false}};
    dom_d45(c);
    dom_x2<2, 3>(c);
    c.cons.push_back(con([](const auto* v, const auto& k) {  // y2 <= y1 - 2
      return (k.r(4, 1) - v[0] - v[1] - k.r(2, 1)) - v[2];
    }));
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return k.r(2, 1) * cube(v[0] - k.r(1, 1)) + cube(y1 - k.r(1, 1)) +
             cube(v[1] - k.r(1, 1)) + k.r(1, 1) - cube(v[3] - k.r(1, 1)) -
             k.r(1, 4) * cube(k.r(2, 1) + v[2] - v[3]) + cube(v[2]) -
             k.r(3, 2) * sq(v[2] + v[3] - k.r(1, 1)) * (v[2] + k.r(1, 1));
    });
    c.claim = c_star;
    add(c);
  };
  add_p4_case("lem45.c2_3", Rat(-1), Rat(29, 25), Rat(2));
  add_p4_case("lem45.c2_4", Rat(-4, 5), Rat(1), Rat(29, 25));
  {
    CaseDef c;
    c.id = "lem45.c2_5a";
    c.vars = {{"x1", Rat(1), Rat(317, 200)},
              {"z1", Rat(27, 20), b_hi},
              {"y2", Rat(-1), Rat(-4, 5), false},
              {"z2", Rat(1), Rat(29, 25), false}};
    dom_d45(c);
    dom_x2<2, 3>(c);
    c.cons.push_back(con([](const auto* v, const auto& k) {
      return (k.r(4, 1) - v[0] - v[1] - k.r(2, 1)) - v[2];
    }));
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return k.r(2, 1) * cube(v[0] - k.r(1, 1)) + cube(y1 - k.r(1, 1)) +
             cube(v[1] - k.r(1, 1)) + k.r(1, 1) - cube(v[2] + k.r(1, 1)) -
             k.r(1, 4) * cube(v[1] - v[2] - k.r(2, 1)) - cube(k.r(1, 1) - v[1] + v[3]) -
             k.r(3, 2) * sq(k.r(1, 1) - v[2] - v[1]) * (v[1] - v[3]);
    });
    c.claim = c_star;
    add(c);
  }
  {
    CaseDef c;
    c.id = "lem45.c2_5b";
    c.vars = {{"x1", Rat(1), Rat(317, 200)},
              {"z1", Rat(6, 5), Rat(27, 20)},
              {"y2", Rat(-1), Rat(-4, 5), false},
              {"z2", Rat(1), Rat(29, 25), false}};
    dom_d45(c);
    dom_x2<2, 3>(c);
    c.cons.push_back(con([](const auto* v, const auto& k) {
      return (k.r(4, 1) - v[0] - v[1] - k.r(2, 1)) - v[2];
    }));
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return k.r(2, 1) * cube(v[0] - k.r(1, 1)) + cube(y1 - k.r(1, 1)) +
             cube(v[1] - k.r(1, 1)) +
             (k.r(3, 2) - k.r(5, 2) * sq(v[1] - k.r(1, 1))) * (v[1] - v[3]) +
             k.r(7, 5) * (v[2] + k.r(1, 1));
    });
    c.claim = c_star;
    add(c);
  }
  {
    CaseDef c;
    c.id = "lem45.c2_6";
    c.vars = {{"x1", Rat(1), Rat(317, 200)},
              {"z1", Rat(6, 5), b_hi},
              {"y2", Rat(-1), Rat(0), false}};
    dom_d45(c);
    c.cons.push_back(con([](const auto* v, const auto& k) {
      return (k.r(4, 1) - v[0] - v[1] - k.r(2, 1)) - v[2];
    }));
    c.cons.push_back(con([](const auto* v, const auto& k) { return v[2] + k.r(1, 1); }));
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return k.r(1, 1) + k.r(2, 1) * cube(v[0] - k.r(1, 1)) + cube(y1 - k.r(1, 1)) +
             cube(v[1] - k.r(1, 1)) - cube(k.r(1, 1) + v[2]) -
             k.r(1, 4) * cube(v[1] - v[2] - k.r(2, 1)) - cube(k.r(2, 1) - v[1]) -
             k.r(3, 2) * sq(k.r(1, 1) - v[2] - v[1]) * (v[1] - k.r(1, 1));
    });
    c.claim = c_star;
    add(c);
  }
  {
    CaseDef c;
    c.id = "lem45.c2_7";
    c.vars = {{"x1", Rat(1), Rat(317, 200)},
              {"z1", Rat(6, 5), b_hi},
              {"y2", Rat(-1), Rat(0), false},
              {"z2", Rat(-1), Rat(0), false}};
    dom_d45(c);
    c.cons.push_back(con([](const auto* v, const auto& k) {
      return (k.r(4, 1) - v[0] - v[1] - k.r(2, 1)) - v[2];
    }));
    c.cons.push_back(con([](const auto* v, const auto& k) {  // z2 < y1 - 2, strictly
      return (k.r(4, 1) - v[0] - v[1] - k.r(2, 1)) - v[3];
    }, true));
    c.cons.push_back(con([](const auto* v, const auto& k) {  // from the slab: y2+z2 > -1
      return v[2] + v[3] + k.r(1, 1);
    }, true));
    set_expr(c, [](const auto* v, const auto& k) { (void)v; return k.r(0, 1); });
    c.claim = Interval(Rat(0));
    c.expect_empty = true;
    add(c);
  }
  {
    CaseDef c;
    c.id = "lem45.c2_8";
    c.vars = {{"x1", Rat(1), Rat(317, 200)},
              {"z1", Rat(6, 5), b_hi},
              {"y2", Rat(6, 5), Rat(2), false},
              {"z2", Rat(-1), Rat(0), false}};
    dom_d45(c);
    dom_x2<2, 3>(c);
    c.cons.push_back(con([](const auto* v, const auto& k) {
      return (v[1] - k.r(2, 1)) - v[3];
    }));
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return k.r(1, 1) + k.r(2, 1) * cube(v[0] - k.r(1, 1)) + cube(y1 - k.r(1, 1)) +
             cube(v[1] - k.r(1, 1)) - cube(v[2] - k.r(1, 1)) -
             k.r(1, 4) * cube(k.r(2, 1) - v[2] + v[3]) + cube(v[3]) -
             k.r(3, 2) * sq(v[2] + v[3] - k.r(1, 1)) * (v[3] + k.r(1, 1));
    });
    c.claim = Interval(Rat(1, 2));
    add(c);
  }
  {
    CaseDef c;
    c.id = "lem45.c2_9";
    c.vars = {{"x1", Rat(1), Rat(317, 200)},
              {"z1", Rat(6, 5), b_hi},
              {"z2", Rat(-1), Rat(0), false}};
    dom_d45(c);
    c.cons.push_back(con([](const auto* v, const auto& k) {
      return (v[1] - k.r(2, 1)) - v[2];
    }));
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return k.r(1, 1) + k.r(2, 1) * cube(v[0] - k.r(1, 1)) + cube(y1 - k.r(1, 1)) +
             cube(v[1] - k.r(1, 1)) + k.r(38, 25) * (v[1] - v[2] - k.r(2, 1)) -
             cube(v[2] + k.r(1, 1)) + cube(v[2]) - k.r(3, 2) * sq(v[2]) * (v[2] + k.r(1, 1));
    });
    c.claim = c_star;
    add(c);
  }
  {
    CaseDef c;
    c.id = "lem45.c2_10a";
    c.vars = {{"x1", Rat(1), Rat(317, 200)}, {"z1", Rat(6, 5), Rat(3, 2)}};
    dom_d45(c);
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return k.r(2, 1) * cube(v[0] - k.r(1, 1)) + cube(y1 - k.r(1, 1)) +
             k.r(3, 4) * (y1 - k.r(1, 1)) + k.r(3, 4) * (v[1] - k.r(1, 1));
    });
    c.claim = Interval(Rat(1, 2));
    add(c);
  }
  {
    CaseDef c;
    c.id = "lem45.c2_10b";
    c.vars = {{"x1", Rat(1), Rat(317, 200)}, {"z1", Rat(3, 2), b_hi}};
    dom_d45(c);
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return k.r(2, 1) * cube(v[0] - k.r(1, 1)) + cube(y1 - k.r(1, 1)) +
             cube(v[1] - k.r(1, 1)) + k.r(2, 1) * cube(k.r(1, 1) - v[1] * k.r(1, 3)) +
             k.r(3, 1) * sq(k.r(2, 1) - v[1]) * (y1 - k.r(1, 1)) +
             k.r(3, 1) * sq(y1 - k.r(1, 1)) * (k.r(2, 1) - v[1]);
    });
    c.claim = c_star;
    add(c);
  }
  {
    CaseDef c;
    c.id = "lem45.c2_10c";
    c.vars = {{"x1", Rat(1), Rat(317, 200)},
              {"z1", Rat(6, 5), b_hi},
              {"z2", Rat(-1), Rat(0), false}};
    dom_d45(c);
    c.cons.push_back(con([](const auto* v, const auto& k) {
      return (v[1] - k.r(2, 1)) - v[2];
    }));
    c.cons.push_back(con([](const auto* v, const auto& k) {
      return (k.r(4, 1) - v[0] - v[1] - k.r(2, 1)) - v[2];
    }));
    set_expr(c, [](const auto* v, const auto& k) {
      auto y1 = k.r(4, 1) - v[0] - v[1];
      return k.r(1, 1) + k.r(2, 1) * cube(v[0] - k.r(1, 1)) + cube(v[1] - k.r(1, 1)) -
             cube(k.r(2, 1) - y1) - k.r(3, 2) * sq(k.r(2, 1) - y1) * (y1 - k.r(1, 1)) +
             k.r(3, 4) * (v[2] + k.r(1, 1)) - cube(v[2] + k.r(1, 1)) +
             k.r(3, 4) * (k.r(4, 1) * v[2] + k.r(5, 1)) * (v[1] - v[2] - k.r(2, 1));
    });
    c.claim = c_star;
    add(c);
  }

  return reg;
}

const std::vector<CaseDef>& registry() {
  static const std::vector<CaseDef> reg = build_registry();
  return reg;
}

// ---- sweep engine -----------------------------------------------------------

struct Axis {
  Rat lo, step;
  std::vector<double> vals;
  size_t count = 0;
};

constexpr double kConBand = 1e-9;
constexpr double kMarginBand = 1e-6;
constexpr std::uint64_t kPointBudget = 120000000;

Verdict run_scalar_case(const CaseDef& c, const Rat& h, const GridRowSink& sink) {
  Verdict out;
  out.case_id = c.id;
  out.grid_step = h;

  const Constants& kc = Constants::get();
  DCtx dctx{kc.alpha.mid().to_double(), kc.beta.mid().to_double()};
  ICtx ictx{kc.alpha, kc.beta};
  const double claim_mid = c.claim.mid().to_double();

  // build axes under the point budget (secondary axes coarsen first)
  const size_t n = c.vars.size();
  std::vector<Axis> axes(n);
  std::vector<Rat> steps(n, h);
  auto count_for = [&](size_t i) {
    Rat span = c.vars[i].hi - c.vars[i].lo;
    mpz_class k = rat_floor(span / steps[i]);
    return (std::uint64_t)k.get_ui() + 2;  // grid points plus the far endpoint
  };
  auto total_points = [&]() {
    std::uint64_t t = 1;
    for (size_t i = 0; i < n; ++i) {
      std::uint64_t cnt = count_for(i);
      if (t > kPointBudget / cnt + 1) return std::uint64_t(-1);
      t *= cnt;
    }
    return t;
  };
  bool progress = true;
  while (total_points() > kPointBudget && progress) {
    progress = false;
    for (size_t i = 0; i < n; ++i)
      if (!c.vars[i].primary && total_points() > kPointBudget) {
        steps[i] = steps[i] * Rat(2);
        progress = true;
      }
    if (!progress)
      for (size_t i = 0; i < n; ++i)
        if (total_points() > kPointBudget) {
          steps[i] = steps[i] * Rat(2);
          progress = true;
        }
  }
  for (size_t i = 0; i < n; ++i) {
    Axis& ax = axes[i];
    ax.lo = c.vars[i].lo;
    ax.step = steps[i];
    Rat v = ax.lo;
    while (v < c.vars[i].hi) {
      ax.vals.push_back(v.to_double());
      v += ax.step;
    }
    ax.vals.push_back(c.vars[i].hi.to_double());
    ax.count = ax.vals.size();
    out.effective_steps.push_back(ax.step);
  }

  // bind every constraint to the outermost axis where its inputs are all
  // fixed, detected by NaN probing, so subtrees prune early
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::vector<const Constraint*>> by_level(n);
  for (const auto& cn : c.cons) {
    size_t level = n - 1;
    std::vector<double> probe(n, nan);
    for (size_t l = 0; l < n; ++l) {
      for (size_t i = 0; i < n; ++i) probe[i] = i <= l ? 1.0 : nan;
      if (!std::isnan(cn.d(probe.data(), dctx))) { level = l; break; }
    }
    by_level[level].push_back(&cn);
  }

  std::vector<size_t> idx(n, 0);
  std::vector<double> pt(n, 0);
  auto rat_coord = [&](size_t i) {
    if (idx[i] + 1 == axes[i].count) return c.vars[i].hi;
    return axes[i].lo + axes[i].step * Rat((long)idx[i]);
  };
  auto rat_point = [&]() {
    std::vector<Rat> rp(n);
    for (size_t i = 0; i < n; ++i) rp[i] = rat_coord(i);
    return rp;
  };
  auto interval_point = [&](const std::vector<Rat>& rp) {
    std::vector<Interval> ip;
    ip.reserve(n);
    for (const auto& r : rp) ip.emplace_back(r);
    return ip;
  };
  auto subtree_points = [&](size_t level) {
    std::uint64_t t = 1;
    for (size_t i = level + 1; i < n; ++i) t *= axes[i].count;
    return t;
  };

  double best_margin = std::numeric_limits<double>::infinity();
  std::vector<size_t> best_idx;
  std::string first_violation;

  // decides the constraints bound at `level`; 1 in, 0 out, 2 undecided
  auto level_state = [&](size_t level) -> int {
    for (const Constraint* cn : by_level[level]) {
      double val = cn->d(pt.data(), dctx);
      if (std::isnan(val)) return 0;
      if (val > kConBand) continue;
      if (val < -kConBand) return 0;
      // near the boundary: decide exactly at the rational point
      auto rp = rat_point();
      auto ip = interval_point(rp);
      Interval iv = cn->i(ip.data(), ictx);
      if (cn->strict ? iv.lo().sign() > 0 : iv.lo().sign() >= 0) continue;
      if (cn->strict ? iv.hi().sign() <= 0 : iv.hi().sign() < 0) return 0;
      return 2;
    }
    return 1;
  };

  std::function<void(size_t)> scan = [&](size_t level) {
    for (idx[level] = 0; idx[level] < axes[level].count; ++idx[level]) {
      pt[level] = axes[level].vals[idx[level]];
      int st = level_state(level);
      if (st == 0) continue;
      if (st == 2) {
        out.points_skipped_undecided += subtree_points(level);
        continue;
      }
      if (level + 1 < n) {
        scan(level + 1);
        continue;
      }
      ++out.points_admissible;
      if (c.expect_empty) {
        if (sink) sink(rat_point(), 0.0, 0.0);
        continue;
      }
      double fd = c.f_d(pt.data(), dctx);
      double margin_d = fd - claim_mid;
      if (sink) sink(rat_point(), fd, margin_d);
      if (margin_d < best_margin) {
        best_margin = margin_d;
        best_idx = idx;
      }
      if (margin_d < kMarginBand) {
        auto rp = rat_point();
        auto ip = interval_point(rp);
        Interval fiv = c.f_i(ip.data(), ictx);
        Interval miv = fiv - c.claim;
        if (miv.lo().sign() < 0) {
          ++out.violations;
          if (first_violation.empty()) {
            first_violation = "margin not certified at (";
            for (size_t i = 0; i < n; ++i)
              first_violation += rp[i].pretty() + (i + 1 < n ? "," : ")");
          }
        }
      }
    }
  };
  if (n > 0) scan(0);

  if (c.expect_empty) {
    out.pass = out.points_admissible == 0;
    out.note = out.pass ? "domain certified empty on the grid"
                        : "expected an empty domain but found admissible points";
    return out;
  }
  if (out.points_admissible == 0) {
    out.pass = false;
    out.note = "no admissible grid points";
    return out;
  }
  if (!best_idx.empty()) {
    idx = best_idx;
    auto rp = rat_point();
    out.argmin = rp;
    auto ip = interval_point(rp);
    Interval fiv = c.f_i(ip.data(), ictx);
    out.minimum = fiv;
    out.margin = fiv - c.claim;
  }
  out.pass = out.violations == 0;
  if (!out.pass) out.note = first_violation;
  return out;
}

Verdict run_barrier_case(const CaseDef& c, const Rat& h, const GridRowSink& sink) {
  Verdict out;
  out.case_id = c.id;
  out.grid_step = h;
  Rat sub = max(h, Rat(1, 24));
  Rat tstep(1, 10);
  out.effective_steps = {sub, sub, tstep};

  std::optional<Rat> min_margin;
  std::vector<Rat> argmin;
  for (Rat x1 = Rat(1); x1 <= Rat(2); x1 += sub)
    for (Rat z1 = Rat(1); z1 <= Rat(2); z1 += sub) {
      // the second parallelogram triangle
      if (!(x1 <= Rat(2) && x1 + Rat(2) * z1 <= Rat(5) && x1 + z1 >= Rat(3))) continue;
      ++out.points_admissible;
      Rat y1 = Rat(4) - x1 - z1;
      Rat w1 = (Rat(1) + x1 - y1) / Rat(3);
      Rat rhs = min(min(Rat(2) * w1.cube(), Rat(2) * (z1 - Rat(1)).cube()), Rat(1, 4));
      Vec3 p1{x1, y1, z1};
      ConvexPolytope box = barrier_box(p1);
      std::optional<Rat> tmin;
      for (Rat t = Rat(-1, 2); t <= Rat(7, 2); t += tstep) {
        Rat v = barrier_volume_in(box, p1, t);
        if (!tmin || v < *tmin) tmin = v;
      }
      Rat margin = Rat(6) * *tmin - rhs;
      if (sink) sink({x1, z1}, (Rat(6) * *tmin).to_double(), margin.to_double());
      if (margin.sign() < 0) ++out.violations;
      if (!min_margin || margin < *min_margin) {
        min_margin = margin;
        argmin = {x1, z1};
        out.minimum = Interval(Rat(6) * *tmin);
      }
    }
  if (min_margin) {
    out.margin = Interval(*min_margin);
    out.argmin = argmin;
  }
  out.pass = out.points_admissible > 0 && out.violations == 0;
  if (out.points_admissible == 0) out.note = "no admissible grid points";
  return out;
}

}  // namespace

std::vector<std::string> registered_case_ids() {
  std::vector<std::string> ids;
  for (const auto& c : registry()) ids.push_back(c.id);
  return ids;
}

std::vector<std::string> resolve_case_ids(const std::string& query) {
  std::vector<std::string> out;
  for (const auto& c : registry()) {
    if (query == "all" || c.id == query ||
        (c.id.size() > query.size() && c.id.compare(0, query.size(), query) == 0 &&
         (c.id[query.size()] == '.' )))
      out.push_back(c.id);
  }
  if (out.empty()) throw std::invalid_argument("no registered case matches: " + query);
  return out;
}

Verdict verify_scalar_bound(const std::string& case_id, const Rat& h, const GridRowSink& sink) {
  if (h.sign() <= 0) throw std::invalid_argument("grid step must be positive");
  for (const auto& c : registry()) {
    if (c.id != case_id) continue;
    return c.geometric ? run_barrier_case(c, h, sink) : run_scalar_case(c, h, sink);
  }
  throw std::invalid_argument("unknown case id: " + case_id);
}

// ---- witness geometry -------------------------------------------------------

namespace {

Rat union_volume_rec(const std::vector<const ConvexPolytope*>& polys, size_t start,
                     const ConvexPolytope& current, int depth) {
  Rat acc(0);
  for (size_t i = start; i < polys.size(); ++i) {
    ConvexPolytope inter = depth == 0 ? *polys[i] : intersect(current, *polys[i]);
    if (inter.is_empty() || inter.dim() < 3) continue;
    Rat v = inter.volume();
    if (v.is_zero()) continue;
    acc += (depth % 2 == 0 ? v : -v);
    acc += union_volume_rec(polys, i + 1, inter, depth + 1);
  }
  return acc;
}

Rat union_volume(const std::vector<const ConvexPolytope*>& polys) {
  return union_volume_rec(polys, 0, ConvexPolytope(), 0);
}

}  // namespace

GeometryReport verify_witness_geometry(const std::string& case_id, const WitnessParams& params,
                                       const Configuration& cfg) {
  GeometryReport rep;
  const Vec3 origin{Rat(0), Rat(0), Rat(0)};
  if (cfg.anchors.empty() || !(cfg.anchors[0] == origin))
    throw std::invalid_argument("configuration must have the origin as anchor 0");

  std::vector<Witness> ws = witness_polytopes(case_id, params);

  // stated homothety ratios
  for (const auto& w : ws)
    if (w.ratio && !is_corner_homothet(w.poly, *w.ratio))
      rep.failures.push_back(w.name + ": homothety ratio check failed");

  // (a) overlap structure
  bool disjoint_expected = case_id == "thm31" || case_id == "lem45";
  for (size_t i = 0; i < ws.size(); ++i)
    for (size_t j = i + 1; j < ws.size(); ++j) {
      ConvexPolytope inter = intersect(ws[i].poly, ws[j].poly);
      Rat v = inter.is_empty() ? Rat(0) : inter.volume();
      if (!v.is_zero()) {
        if (disjoint_expected)
          rep.failures.push_back(ws[i].name + " overlaps " + ws[j].name);
        else
          rep.notes.push_back(ws[i].name + " overlaps " + ws[j].name + " (volume " +
                              v.str() + ")");
      }
    }

  // union volume over the case's stated union (excluding the cut pieces)
  std::vector<const ConvexPolytope*> union_set;
  for (const auto& w : ws)
    if (w.name != "T6" || case_id == "lem43")
      if (w.name != "T7") union_set.push_back(&w.poly);
  rep.witness_union_volume = union_volume(union_set);

  // closed-form agreement where the construction states one
  {
    const Rat x1 = params.x1.x, y1 = params.x1.y, z1 = params.x1.z;
    std::optional<Rat> formula;
    if (case_id == "thm31" || case_id == "lem45")
      formula = Rat(2) * (x1 - 1).cube() + (y1 - 1).cube() + (z1 - 1).cube();
    else if (case_id == "lem42")
      formula = (x1 - 1).cube() + (z1 - 1).cube() + (Rat(2) - z1).cube() -
                (Rat(2) * z1 + x1 - 5).cube();
    else if (case_id == "lem43")
      formula = (x1 - 1).cube() + (z1 - 1).cube() + (Rat(2) - z1).cube();
    else if (case_id == "lem44")
      formula = (y1 - 1).cube() + (z1 - 1).cube() - (Rat(1) - x1).cube();
    else if (case_id == "lem44.s2_1" || case_id == "lem44.s3_1")
      formula = (y1 - 1).cube() + (z1 - 1).cube() - (Rat(1) - x1).cube() +
                (Rat(1) + x1 - y1).cube() + (Rat(1) + x1 - z1).cube();
    if (formula && Rat(6) * rep.witness_union_volume != *formula)
      rep.failures.push_back("union volume disagrees with the closed form");
  }

  // (b) witnesses vs translates, (c) localizer containment
  ConvexPolytope localizer = make_cube(Rat(2));
  for (const auto& w : ws) {
    if (w.poly.is_empty()) continue;
    for (const auto& v : w.poly.vertices())
      if (!localizer.contains(v)) {
        rep.failures.push_back(w.name + ": escapes the localizer");
        break;
      }
    for (const auto& a : cfg.anchors) {
      ConvexPolytope tr = cfg.body.translated(a);
      ConvexPolytope inter = intersect(w.poly, tr);
      if (!inter.is_empty() && inter.dim() == 3 && !inter.volume().is_zero()) {
        rep.failures.push_back(w.name + ": overlaps a translate");
        break;
      }
    }
  }

  // (d) witnesses fit inside the exact first-quadrant shadow volume
  ShadowOptions opts;
  opts.quadrants = true;
  ShadowResult sr = shadow_volume(cfg, 0, Vec3{Rat(1), Rat(0), Rat(0)}, opts);
  rep.shadow_quadrant_volume = sr.quadrants[0];
  if (rep.witness_union_volume > sr.quadrants[0])
    rep.failures.push_back("witness volume exceeds the first-quadrant shadow volume");

  // (e) no triangular facet touched twice at its relative interior
  {
    std::vector<ConvexPolytope> translates;
    for (const auto& a : cfg.anchors) translates.push_back(cfg.body.translated(a));
    for (size_t i = 0; i < translates.size(); ++i) {
      for (const auto& f : translates[i].facets()) {
        // triangular facets of the cuboctahedron have all-ones normals
        if (f.plane.n.x.abs() != Rat(1) || f.plane.n.y.abs() != Rat(1) ||
            f.plane.n.z.abs() != Rat(1))
          continue;
        int touching = 0;
        for (size_t k = 0; k < translates.size(); ++k) {
          if (k == i) continue;
          ConvexPolytope contact = intersect(translates[i], translates[k]);
          if (contact.is_empty() || (contact.dim() == 3 && !contact.volume().is_zero()))
            continue;
          // contact must lie in the facet plane and reach its relative interior
          bool in_plane = true;
          for (const auto& v : contact.vertices())
            if (f.plane.eval(v) != Rat(0)) { in_plane = false; break; }
          if (!in_plane) continue;
          Vec3 c = contact.vertex_centroid();
          bool relint = true;
          for (const auto& g : translates[i].facets()) {
            if (g.plane == f.plane) continue;
            if (g.plane.eval(c).sign() <= 0) { relint = false; break; }
          }
          if (relint) ++touching;
        }
        if (touching >= 2)
          rep.failures.push_back("a triangular facet is touched twice at its interior");
      }
    }
  }

  rep.pass = rep.failures.empty();
  return rep;
}

}  // namespace shadowpack
