#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "relchar/lattice.hpp"
#include "relchar/models.hpp"

using namespace relchar;
using namespace relchar::lattice;

namespace {
Weight w(std::vector<int> doubled) { return Weight(std::move(doubled)); }
}

TEST_CASE("pairing in doubled coordinates") {
  CHECK(pair(w({2, -2}), w({2, -2})) == Rat(2));                 // |e1-e2|^2
  CHECK(pair(w({1, 1, 1}), w({0, 0, 4})) == Rat(1));             // <(e1+e2+e3)/2, 2e3>
  const auto& e7 = models::model("E7").datum;
  CHECK(pair(e7.simples[1].root, e7.simples[1].coroot) == Rat(2));  // alpha_2 = e1+e2
  CHECK_THROWS(pair(w({2, 0}), w({2, 0, 0})));
}

TEST_CASE("reflections") {
  CHECK(reflect(w({2, -2, 0}), w({2, -2, 0}), w({2, 0, 0})) == w({0, 2, 0}));  // s(e1) = e2
  CHECK(reflect(w({0, 0, 4}), w({0, 0, 2}), w({0, 0, 2})) == w({0, 0, -2}));   // type C flip
  SUBCASE("involution") {
    Weight v({1, -1, 1});
    Weight img = reflect(w({2, -2, 0}), w({2, -2, 0}), v);
    CHECK(reflect(w({2, -2, 0}), w({2, -2, 0}), img) == v);
  }
  SUBCASE("the E7 reflection used in the constant-lemma bookkeeping") {
    const auto& e7 = models::model("E7").datum;
    Weight v({0, 2, 4, 6, 8, 12, -12, 12});  // (0,1,2,3,4,6,-6,6)
    Weight img = reflect(e7.simples[0].root, e7.simples[0].coroot, v);
    CHECK(img == w({2, 0, 2, 4, 6, 10, -14, 14}));  // (1,0,1,2,3,5,-7,7)
  }
}

TEST_CASE("root data validate and complete") {
  for (const auto& m : models::catalog()) {
    CAPTURE(m.name);
    CHECK_NOTHROW(m.datum.validate());
    CHECK(m.datum.positive_roots.size() == m.datum.positive_coroots.size());
  }
  CHECK(models::model("E7").datum.positive_roots.size() == 63);
  CHECK(models::model("GSO12").datum.positive_roots.size() == 30);
  CHECK(models::model("GSp10").datum.positive_roots.size() == 25);
}

TEST_CASE("Weyl enumeration matches the degree products") {
  for (const auto& m : models::catalog()) {
    if (m.datum.weyl_order() > 30000) continue;
    CAPTURE(m.name);
    CHECK(long(count_weyl(m.datum)) == m.datum.weyl_order());
    if (m.datum.weyl_order() <= 720) {
      auto els = enumerate_weyl(m.datum);
      CHECK(long(els.size()) == m.datum.weyl_order());
    }
  }
  CHECK(models::model("trilinear").datum.weyl_order() == 8);
  CHECK(models::model("GSp6xGSp4").datum.weyl_order() == 384);
  CHECK(models::model("E7").datum.weyl_order() == 2903040);
}

TEST_CASE("enumeration cap guards against runaway closure") {
  CHECK_THROWS_AS(count_weyl(models::model("GSO12").datum, 1000), std::length_error);
}

TEST_CASE("sign is the determinant and multiplicative") {
  SUBCASE("exhaustively for |W| <= 384") {
    for (const char* name : {"trilinear", "GL4xGL2", "GSp6xGSp4", "GU4xGU2", "GU6"}) {
      const auto& datum = models::model(name).datum;
      auto els = enumerate_weyl(datum);
      for (const auto& e : els) CHECK(e.matrix.det() == Rat(e.sign));
      // spot check products on a few pairs
      for (size_t i = 0; i < els.size(); i += 37)
        for (size_t j = 0; j < els.size(); j += 53) {
          auto p = weyl_compose(els[i], els[j]);
          CHECK(p.matrix.det() == Rat(els[i].sign * els[j].sign));
        }
    }
  }
  SUBCASE("random pairs for the big groups") {
    for (const char* name : {"GSO12", "E7"}) {
      const auto& datum = models::model(name).datum;
      std::mt19937_64 rng(7);
      std::uniform_int_distribution<int> pick(0, int(datum.simples.size()) - 1);
      std::uniform_int_distribution<int> len(0, 10);
      for (int trial = 0; trial < 10000; ++trial) {
        std::vector<int> w1, w2;
        for (int l = len(rng); l > 0; --l) w1.push_back(pick(rng));
        for (int l = len(rng); l > 0; --l) w2.push_back(pick(rng));
        auto a = weyl_from_word(datum, w1), b = weyl_from_word(datum, w2);
        auto p = weyl_compose(a, b);
        REQUIRE(p.sign == a.sign * b.sign);
        if (trial % 100 == 0) REQUIRE(p.matrix.det() == Rat(p.sign));
      }
    }
  }
}

TEST_CASE("simple reflections permute the other positive coroots") {
  for (const auto& m : models::catalog()) {
    CAPTURE(m.name);
    const auto& d = m.datum;
    for (const auto& s : d.simples) {
      std::set<std::vector<int>> pos;
      for (const auto& c : d.positive_coroots) pos.insert(c.coords);
      for (const auto& c : d.positive_coroots) {
        if (c.coords == s.coroot.coords) continue;
        Weight img = reflect(s.coroot, s.root, c);
        CHECK(pos.count(img.coords));
      }
    }
  }
}

TEST_CASE("pairing is Weyl invariant") {
  const auto& d = models::model("GSp6xGSp4").datum;
  auto els = enumerate_weyl(d);
  Weight a({1, -1, 1, 1, -1}), b({1, 1, -1, 1, 1});
  for (size_t i = 0; i < els.size(); i += 17)
    CHECK(pair(els[i].apply(a), els[i].apply(b)) == pair(a, b));
}

TEST_CASE("delta_B^{1/2} exponents") {
  const auto& gsp6gsp4 = models::model("GSp6xGSp4").datum;
  // q^3 on (e1+e2+e3)/2 and q^{1/2} on (e1'-e2')/2, 1 on 0
  CHECK(gsp6gsp4.delta_half_exponent(w({1, 1, 1, 0, 0})) == Rat(3));
  CHECK(gsp6gsp4.delta_half_exponent(w({0, 0, 0, 1, -1})) == make_rat(1, 2));
  CHECK(gsp6gsp4.delta_half_exponent(w({0, 0, 0, 0, 0})) == Rat(0));
  // the full GSp6 value table
  std::vector<std::pair<std::vector<int>, Rat>> table6 = {
      {{1, 1, 1, 0, 0}, Rat(3)},   {{1, 1, -1, 0, 0}, Rat(2)},  {{1, -1, 1, 0, 0}, Rat(1)},
      {{-1, 1, 1, 0, 0}, Rat(0)},  {{1, -1, -1, 0, 0}, Rat(0)}, {{-1, 1, -1, 0, 0}, Rat(-1)},
      {{-1, -1, 1, 0, 0}, Rat(-2)}, {{-1, -1, -1, 0, 0}, Rat(-3)}};
  for (const auto& [lam, e] : table6) CHECK(gsp6gsp4.delta_half_exponent(w(lam)) == e);
}
