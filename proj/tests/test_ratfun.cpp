#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "relchar/models.hpp"
#include "relchar/ratfun.hpp"
#include "relchar/weylsum.hpp"

using namespace relchar;
using namespace relchar::ratfun;

namespace {
LaurentPoly mono(int nvars, Exps e, const Rat& c) {
  LaurentPoly p(nvars);
  p.add_term(e, c);
  return p;
}
}

TEST_CASE("eval_weight in half coordinates") {
  const auto& m = models::model("GL4xGL2");
  weylsum::SatakePoint pt;
  pt.tau = {make_rat(3, 2), Rat(1), Rat(1), Rat(1), Rat(2), Rat(3)};
  pt.u = make_rat(1, 2);
  // gamma = e1: theta_1 = tau_1^2 = 9/4
  CHECK(weylsum::eval_weight(m, lattice::Weight({2, 0, 0, 0, 0, 0}), pt) == make_rat(9, 4));
  // gamma = (e1' - e2')/2: tau'_1 / tau'_2 = 2/3
  CHECK(weylsum::eval_weight(m, lattice::Weight({0, 0, 0, 0, 1, -1}), pt) == make_rat(2, 3));
  CHECK(weylsum::eval_weight(m, lattice::Weight({0, 0, 0, 0, 0, 0}), pt) == Rat(1));
  weylsum::SatakePoint bad = pt;
  bad.tau[0] = 0;
  CHECK_THROWS(weylsum::eval_weight(m, lattice::Weight({2, 0, 0, 0, 0, 0}), bad));
}

TEST_CASE("field arithmetic on rational functions") {
  // (1 - u^2 theta)/(1 - theta): vars [theta-half tau], exps doubled
  LaurentPoly one = LaurentPoly::constant(1, Rat(1));
  LaurentPoly theta = mono(1, {2, 0}, Rat(1));
  LaurentPoly u2theta = mono(1, {2, 2}, Rat(1));
  RatFun f(one - u2theta, one - theta);
  CHECK(f + RatFun::constant(1, Rat(0)) == f);
  RatFun g(one - theta, one);
  CHECK(g * (RatFun::constant(1, Rat(1)) / g) == RatFun::constant(1, Rat(1)));
  // c_alpha(theta) builds without error and is its own cross-multiplied normal form
  RatFun c_alpha(one - u2theta, one - theta);
  CHECK(c_alpha == RatFun(one - u2theta, one - theta));
  CHECK_THROWS(f / RatFun::constant(1, Rat(0)));
}

TEST_CASE("normalization round-trips by cross multiplication") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4), expo(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    LaurentPoly a(2), b(2);
    for (int t = 0; t < 4; ++t) {
      a.add_term({expo(rng), expo(rng), expo(rng)}, Rat(coef(rng)));
      b.add_term({expo(rng), expo(rng), expo(rng)}, Rat(coef(rng)));
    }
    if (b.is_zero()) continue;
    RatFun f(a, b);
    CHECK(f.num() * b == a * f.den());
  }
}

TEST_CASE("geometric closed forms") {
  // x = u^2 (= q^{-1})
  RatFun f = geometric_closed_form(LaurentMono(Rat(1), {2}));
  CHECK(f == RatFun(LaurentPoly::constant(0, Rat(1)),
                    LaurentPoly::constant(0, Rat(1)) - mono(0, {2}, Rat(1))));
  CHECK(geometric_self_test(LaurentMono(Rat(1), {2})));
  // x = u tau_1^2 (= u theta_1)
  CHECK(geometric_self_test(LaurentMono(Rat(1), {2, 1})));
  // x = u^2 s, the quadratic-extension shell ratio
  CHECK(geometric_self_test(LaurentMono(Rat(1), {1, 2})));
  CHECK_THROWS_AS(geometric_closed_form(LaurentMono(Rat(1), {0, 0})), std::domain_error);
}

TEST_CASE("symbolic evaluation agrees with evaluate-then-combine") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coef(-3, 3), expo(-2, 2), val(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly a(2), b(2), c(2), d(2);
    for (int t = 0; t < 3; ++t) {
      a.add_term({expo(rng), expo(rng), expo(rng)}, Rat(coef(rng)));
      b.add_term({expo(rng), expo(rng), expo(rng)}, Rat(coef(rng)));
      c.add_term({expo(rng), expo(rng), expo(rng)}, Rat(coef(rng)));
      d.add_term({expo(rng), expo(rng), expo(rng)}, Rat(coef(rng)));
    }
    if (b.is_zero() || d.is_zero()) continue;
    RatFun f(a, b), g(c, d);
    std::vector<Rat> taus{make_rat(val(rng), val(rng)), make_rat(val(rng), val(rng))};
    Rat u = make_rat(1, val(rng) + 1);
    auto fv = f.eval(taus, u), gv = g.eval(taus, u);
    if (!fv || !gv) continue;
    auto sum = (f + g).eval(taus, u);
    auto prod = (f * g).eval(taus, u);
    REQUIRE(sum);
    REQUIRE(prod);
    CHECK(*sum == *fv + *gv);
    CHECK(*prod == *fv * *gv);
    if (*gv != 0) {
      auto quot = (f / g).eval(taus, u);
      REQUIRE(quot);
      CHECK(*quot == *fv / *gv);
    }
  }
}
