#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "relchar/weylsum.hpp"

using namespace relchar;
using namespace relchar::weylsum;
using lattice::Weight;

TEST_CASE("c_WS degeneration at theta = delta_B^{1/2} (trilinear)") {
  const auto& m = models::model("trilinear");
  auto pt = delta_half_point(m, Rat(2));  // q = 16
  Rat q(16);
  auto id = lattice::weyl_identity(m.datum);
  auto v0 = c_ws(m, id, pt);
  REQUIRE(v0);
  CHECK(*v0 == 0);
  auto w0 = lattice::weyl_from_word(m.datum, {0, 1, 2});  // the longest element
  auto v1 = c_ws(m, w0, pt);
  REQUIRE(v1);
  CHECK(*v1 == 1 - 1 / (q * q));
}

TEST_CASE("streaming fold agrees with the matrix-by-matrix oracle") {
  // independent oracle: enumerate W with matrices and sum c_ws directly
  for (const char* name : {"trilinear", "GL4xGL2", "GU4xGU2", "GU6"}) {
    CAPTURE(name);
    const auto& m = models::model(name);
    auto pts = sample_points(m, 2, 20240 + std::string(name).size());
    auto els = lattice::enumerate_weyl(m.datum);
    for (const auto& pt : pts) {
      Rat direct(0);
      bool pole = false;
      for (const auto& w : els) {
        auto v = c_ws(m, w, pt);
        if (!v) {
          pole = true;
          break;
        }
        direct += *v;
      }
      REQUIRE(!pole);
      auto folded = weyl_sum(m, pt);
      REQUIRE(folded);
      CHECK(*folded == direct);
    }
  }
}

TEST_CASE("ws_value against a hand-rolled trilinear expansion") {
  const auto& m = models::model("trilinear");
  auto pts = sample_points(m, 3, 5150);
  // t = e1, dominant on the first factor
  Weight t({2, 0, 0, 0, 0, 0});
  for (const auto& pt : pts) {
    // independent summation over the 8 sign flips
    Rat total(0);
    Rat u = pt.u;
    for (int mask = 0; mask < 8; ++mask) {
      auto ev = [&](const std::vector<int>& gamma2) {
        // e^{w^{-1} gamma}(theta): w flips the two coordinates of factor f
        Rat acc(1);
        for (int f = 0; f < 3; ++f) {
          int a = gamma2[size_t(2 * f)], b = gamma2[size_t(2 * f + 1)];
          if (mask >> f & 1) std::swap(a, b);
          acc *= pow_rat(pt.tau[size_t(2 * f)], a) * pow_rat(pt.tau[size_t(2 * f + 1)], b);
        }
        return acc;
      };
      Rat num(1);
      for (const auto& g : {std::vector<int>{2, 0, 2, 0, 2, 0}, {2, 0, 2, 0, 0, 2},
                            {2, 0, 0, 2, 2, 0}, {0, 2, 2, 0, 2, 0}})
        num *= 1 - u * ev(g);
      Rat den(1);
      for (const auto& a : {std::vector<int>{2, -2, 0, 0, 0, 0}, {0, 0, 2, -2, 0, 0},
                            {0, 0, 0, 0, 2, -2}})
        den *= 1 - ev(a);
      // (w theta)(t) = e^{w^{-1} t}(theta); delta^{1/2}(t^{-1}) = u^{2<rho,t>} = u
      total += num / den * ev(t.coords) * u;
    }
    auto v = ws_value(m, t, pt);
    REQUIRE(v);
    CHECK(*v == total);
  }
}

TEST_CASE("ws_value at t = 0 is the model constant") {
  for (const char* name : {"trilinear", "GL4xGL2", "GSp6xGL2", "GU6"}) {
    const auto& m = models::model(name);
    auto pts = sample_points(m, 1, 31);
    auto v = ws_value(m, Weight(std::vector<int>(size_t(m.datum.dim), 0)), pts[0]);
    REQUIRE(v);
    CHECK(*v == *m.expected_constant.eval({}, pts[0].u));
  }
}

TEST_CASE("ws_value requires a dominant coweight") {
  const auto& m = models::model("trilinear");
  auto pts = sample_points(m, 1, 77);
  CHECK_THROWS_AS(ws_value(m, Weight({-2, 0, 0, 0, 0, 0}), pts[0]), std::invalid_argument);
}

TEST_CASE("b-ratio closed forms at the spec's sampled roots") {
  auto pts3 = [&](const models::ModelSpec& m) { return sample_points(m, 5, 99); };
  {
    const auto& m = models::model("trilinear");
    CHECK(b_ratio_consistency(m, 0, pts3(m)).pass);
  }
  {
    const auto& m = models::model("GL6");
    CHECK(b_ratio_consistency(m, 1, pts3(m)).pass);  // alpha_2, Type (U,psi)
  }
  {
    const auto& m = models::model("GU6");
    CHECK(b_ratio_consistency(m, 2, pts3(m)).pass);  // alpha_3, the q+1 form
  }
}

TEST_CASE("symbolic Weyl sums match evaluation and the expected constants") {
  for (const char* name : {"trilinear", "GL4xGL2", "GSp6xGSp4", "GU4xGU2", "GU6"}) {
    CAPTURE(name);
    const auto& m = models::model(name);
    auto f = weyl_sum_symbolic(m);
    CHECK(f == m.expected_constant);
    auto pts = sample_points(m, 1, 4242);
    auto v = weyl_sum(m, pts[0]);
    REQUIRE(v);
    CHECK(*v == *f.eval({}, pts[0].u));
  }
  CHECK_THROWS_AS(weyl_sum_symbolic(models::model("GSO12")), std::invalid_argument);
}

TEST_CASE("coset reductions evaluate to one") {
  for (const char* name : {"GL6", "GSp10", "GSO12"}) {
    const auto& m = models::model(name);
    auto pts = sample_points(m, 2, 808);
    for (const auto& r : m.reductions)
      for (const auto& pt : pts) {
        auto v = coset_sum(m, r, pt);
        REQUIRE(v);
        CHECK(*v == 1);
      }
  }
}

TEST_CASE("relative character assembly and factor structure") {
  const auto& m = models::model("trilinear");
  auto pts = sample_points(m, 3, 606);
  for (const auto& pt : pts) {
    auto rv = weylsum::relchar(m, pt);
    REQUIRE(rv);
    // zeta(1)^3 zeta(2) at u
    Rat u = pt.u;
    Rat z1 = 1 / (1 - u * u);
    Rat z2 = 1 / (1 - pow_rat(u, 4));
    CHECK(rv->delta_part == z1 * z1 * z1 * z2);
    CHECK(rv->value == rv->delta_part * rv->lhalf_part / rv->lad_part);
  }
  SUBCASE("a constructed L(1/2) pole is reported, not fatal") {
    SatakePoint pt;
    // e^{e1+e1'+e1''}(theta) = u^{-1}: tau = (v,1,1,1,1,1) with v^2 = 1/u
    pt.u = make_rat(1, 4);
    pt.tau = {Rat(2), Rat(1), Rat(1), Rat(1), Rat(1), make_rat(1, 2)};
    // constraint prod tau^2 = 1 holds; e^{gamma} = 4 = u^{-1} for gamma = e1+e1'+e1''
    std::string why;
    auto rv = weylsum::relchar(m, pt, &why);
    CHECK(!rv);
    CHECK(why.find("L(1/2") != std::string::npos);
  }
}

TEST_CASE("point sampling is deterministic and constraint respecting") {
  for (const char* name : {"GL6", "GSp6xGL2", "E7"}) {
    const auto& m = models::model(name);
    auto a = sample_points(m, 3, 12345);
    auto b = sample_points(m, 3, 12345);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].u == b[i].u);
      CHECK(a[i].tau == b[i].tau);
      if (m.constraint) {
        Rat prod(1);
        for (int j = 0; j < m.tau_dim; ++j)
          prod *= pow_rat(a[i].tau[size_t(j)], m.constraint->coords[size_t(j)]);
        CHECK(prod == 1);
      }
    }
  }
}

TEST_CASE("Weyl invariance of the sum in theta") {
  const auto& m = models::model("GSp6xGL2");
  auto pts = sample_points(m, 1, 2718);
  auto base = weyl_sum(m, pts[0]);
  REQUIRE(base);
  for (const auto& word : std::vector<std::vector<int>>{{0}, {1, 2}, {3, 0, 1}, {2, 1, 0, 3}}) {
    auto w = lattice::weyl_from_word(m.datum, word);
    auto v = weyl_sum(m, transform_point(m, w, pts[0]));
    REQUIRE(v);
    CHECK(*v == *base);
  }
}

TEST_CASE("fold results are independent of the job count") {
  const auto& m = models::model("GSO12");
  auto pts = sample_points(m, 1, 1618);
  auto v1 = weyl_sum(m, pts[0], 1);
  auto v3 = weyl_sum(m, pts[0], 3);
  REQUIRE(v1);
  REQUIRE(v3);
  CHECK(*v1 == *v3);
}

TEST_CASE("ws_value is W-invariant in theta at nonzero t") {
  const auto& m = models::model("GL4xGL2");
  auto pts = sample_points(m, 1, 9090);
  Weight t({2, 2, 0, 0, 2, 0});  // e1 + e2 + e1', dominant
  auto base = ws_value(m, t, pts[0]);
  REQUIRE(base);
  for (const auto& word : std::vector<std::vector<int>>{{0}, {2, 1}, {3, 0, 2}}) {
    auto w = lattice::weyl_from_word(m.datum, word);
    auto v = ws_value(m, t, transform_point(m, w, pts[0]));
    REQUIRE(v);
    CHECK(*v == *base);
  }
}
