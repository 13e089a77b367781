#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "relchar/models.hpp"

using namespace relchar;
using namespace relchar::models;

TEST_CASE("theta_plus closure sizes and invariants") {
  std::map<std::string, size_t> sizes = {
      {"trilinear", 4}, {"GSp6xGSp4", 16}, {"GL4xGL2", 10}, {"GL6", 10}, {"GU6", 7},
      {"GU4xGU2", 7},   {"GSp10", 16},     {"GSp6xGL2", 8}, {"GSO12", 16},
      {"GSO8xGL2", 8},  {"E7", 28}};
  for (const auto& m : catalog()) {
    CAPTURE(m.name);
    auto tp = theta_plus(m);
    CHECK(tp.elements.size() == sizes.at(m.name));
    CHECK(2 * tp.weighted_size() == m.theta_dim_weighted());
    // Theta+ ⊔ -Theta+ = Theta as multisets
    std::multiset<std::vector<int>> all;
    for (const auto& t : m.theta) all.insert(m.canonical(t).coords);
    for (const auto& g : tp.elements) {
      auto it = all.find(g.coords);
      REQUIRE(it != all.end());
      all.erase(it);
      auto jt = all.find(m.negate(g).coords);
      REQUIRE(jt != all.end());
      all.erase(jt);
    }
    CHECK(all.empty());
  }
}

TEST_CASE("dim rho_X matches the table") {
  CHECK(model("GSp6xGSp4").theta_dim_weighted() == 32);
  CHECK(model("GSp10").theta_dim_weighted() == 32);
  CHECK(model("GL4xGL2").theta_dim_weighted() == 20);
  CHECK(model("GU6").theta_dim_weighted() == 20);
  CHECK(model("GU4xGU2").theta_dim_weighted() == 20);
  CHECK(model("E7").theta_dim_weighted() == 56);
  CHECK(model("GSO12").theta_dim_weighted() == 32);
}

TEST_CASE("brute force certifies uniqueness on the small models") {
  for (const char* name : {"trilinear", "GSp6xGSp4", "GU4xGU2", "GSp6xGL2", "GSO8xGL2"}) {
    CAPTURE(name);
    const auto& m = model(name);
    auto bf = brute_force_theta_plus(m);
    auto tp = theta_plus(m);
    CHECK(bf.elements == tp.elements);
  }
}

TEST_CASE("the substitution identity behind theta plus") {
  // (1 - u^deg e^{gamma})(theta^{-1}) = (1 - u^deg e^{neg gamma})(theta) holds
  // factorwise because -gamma and neg(gamma) differ by the constraint line.
  for (const auto& m : catalog()) {
    CAPTURE(m.name);
    auto tp = theta_plus(m);
    std::set<std::vector<int>> plus;
    for (const auto& g : tp.elements) plus.insert(g.coords);
    for (const auto& g : tp.elements) {
      lattice::Weight n = m.negate(g);
      const lattice::Weight* in_theta = m.find_theta(n);
      REQUIRE(in_theta != nullptr);
      CHECK(in_theta->degree == g.degree);
      CHECK(!plus.count(n.coords));
      // exponent difference is an integer multiple of the constraint
      std::vector<int> diff(g.dim());
      for (size_t i = 0; i < g.dim(); ++i) diff[i] = -g.coords[i] - n.coords[i];
      if (m.constraint) {
        const auto& z = m.constraint->coords;
        int k = 0;
        for (size_t i = 0; i < diff.size(); ++i)
          if (z[i] != 0) {
            k = diff[i] / z[i];
            break;
          }
        for (size_t i = 0; i < diff.size(); ++i) CHECK(diff[i] == k * z[i]);
      } else {
        for (int d : diff) CHECK(d == 0);
      }
    }
  }
}

TEST_CASE("delta ratio factor multisets") {
  CHECK(motive_str(delta_ratio(model("GSp6xGSp4"))) == "zeta(1)^2 zeta(4) zeta(6)");
  CHECK(motive_str(delta_ratio(model("GL6"))) == "zeta(1) zeta(3) zeta(4) zeta(5) zeta(6)");
  CHECK(motive_str(delta_ratio(model("GU6"))) ==
        "zeta(1) L(1,eta) L(3,eta) zeta(4) L(5,eta) zeta(6)");
  // a degree in the H0/Z list that G lacks is a data error
  ModelSpec broken = model("GL6");
  broken.motive_h0modz.push_back({7, false});
  CHECK_THROWS_AS(delta_ratio(broken), std::domain_error);
}

TEST_CASE("catalog JSON round trip") {
  std::string text = catalog_to_json(false);
  auto loaded = catalog_from_json(text);
  REQUIRE(loaded.size() == catalog().size());
  for (size_t i = 0; i < loaded.size(); ++i) {
    CAPTURE(loaded[i].name);
    CHECK(loaded[i].name == catalog()[i].name);
    CHECK(loaded[i].theta.size() == catalog()[i].theta.size());
    CHECK(theta_plus(loaded[i]).elements == theta_plus(catalog()[i]).elements);
    CHECK(loaded[i].expected_constant == catalog()[i].expected_constant);
  }
}

TEST_CASE("catalog import rejects inconsistent data") {
  std::string text = catalog_to_json(false);
  // corrupt a color
  auto pos = text.find("\"color\"");
  REQUIRE(pos != std::string::npos);
  std::string broken = text;
  auto cpos = broken.find("coords2", pos);
  REQUIRE(cpos != std::string::npos);
  broken.replace(cpos + 12, 1, "9");
  CHECK_THROWS(catalog_from_json(broken));
}

TEST_CASE("unknown model lookups fail with a suggestion list") {
  CHECK_THROWS_AS(model("GSp8"), std::out_of_range);
  try {
    model("GSp8");
  } catch (const std::out_of_range& e) {
    CHECK(std::string(e.what()).find("GSp6xGSp4") != std::string::npos);
  }
}
