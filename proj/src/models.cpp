#include "relchar/models.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace relchar::models {

using lattice::RootDatum;
using lattice::SimpleRoot;
using lattice::reflect;
using ratfun::LaurentPoly;
using ratfun::RatFun;

namespace {

Weight wt(std::vector<int> doubled, int deg = 1) { return Weight(std::move(doubled), deg); }

// (1 - u^k) or (1 + u^k) as a u-only polynomial (nvars = 0).
LaurentPoly u_binom(int k, int sign) {
  LaurentPoly p(0);
  p.add_term({0}, Rat(1));
  p.add_term({k}, Rat(sign));
  return p;
}

RatFun uconst(const std::vector<std::pair<int, int>>& factors) {
  LaurentPoly p = LaurentPoly::constant(0, Rat(1));
  for (auto [k, sign] : factors) p = p * u_binom(k, sign);
  return RatFun::from_poly(p);
}

std::vector<Weight> sign_vectors(int n, int fixed_tail, const std::vector<int>& tail,
                                 int parity_mod, int parity_val) {
  // all (+-1)^n vectors (doubled half-coordinates), extended by `tail`,
  // filtered on the number of -1's mod parity_mod (ignored when 0).
  std::vector<Weight> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    int minus = __builtin_popcount(unsigned(mask));
    if (parity_mod && minus % parity_mod != parity_val) continue;
    std::vector<int> c;
    c.reserve(size_t(n + fixed_tail));
    for (int i = 0; i < n; ++i) c.push_back((mask >> i) & 1 ? -1 : 1);
    for (int t : tail) c.push_back(t);
    out.push_back(wt(std::move(c)));
  }
  return out;
}

ModelSpec finish(ModelSpec m) {
  m.datum.complete();
  if (m.tau_dim == 0) m.tau_dim = m.datum.dim;
  return m;
}

ModelSpec build_trilinear() {
  ModelSpec m;
  m.name = "trilinear";
  m.rho_x = "std2 (x) std2 (x) std2 of GL2^3 (8-dimensional)";
  m.datum.dim = 6;
  auto add = [&](const std::string& nm, std::vector<int> rt, Weight beta, Weight beta2) {
    m.datum.simples.push_back({nm, wt(rt), wt(rt), 1});
    m.root_data.push_back({nm, RootType::T, 1, false, beta, beta2});
  };
  add("a1", {2, -2, 0, 0, 0, 0}, wt({2, 0, 0, 2, 2, 0}), wt({2, 0, 2, 0, 0, 2}));
  add("a2", {0, 0, 2, -2, 0, 0}, wt({0, 2, 2, 0, 2, 0}), wt({2, 0, 2, 0, 0, 2}));
  add("a3", {0, 0, 0, 0, 2, -2}, wt({0, 2, 2, 0, 2, 0}), wt({2, 0, 0, 2, 2, 0}));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        std::vector<int> c(6, 0);
        c[size_t(i)] = 2;
        c[size_t(2 + j)] = 2;
        c[size_t(4 + k)] = 2;
        m.theta.push_back(wt(std::move(c)));
      }
  m.constraint = wt({2, 2, 2, 2, 2, 2});
  m.motive_g = {{1, false}, {2, false}, {1, false}, {2, false}, {1, false}, {2, false}};
  m.motive_h0modz = {{2, false}, {2, false}};
  m.torus_ad_degrees = {1, 1, 1, 1, 1, 1};
  m.expected_constant = uconst({{4, -1}});
  m.datum.weyl_degrees = {2, 2, 2};
  return finish(std::move(m));
}

ModelSpec build_gl4_gl2() {
  ModelSpec m;
  m.name = "GL4xGL2";
  m.rho_x = "(wedge^2 (x) std2) (+) std4 (+) std4^dual (20-dimensional)";
  m.datum.dim = 6;
  auto add = [&](const std::string& nm, std::vector<int> rt, Weight beta, Weight beta2) {
    m.datum.simples.push_back({nm, wt(rt), wt(rt), 1});
    m.root_data.push_back({nm, RootType::T, 1, false, beta, beta2});
  };
  add("a1", {2, -2, 0, 0, 0, 0}, wt({2, 0, 2, 0, 0, 2}), wt({2, 0, 0, 2, 2, 0}));
  add("a2", {0, 2, -2, 0, 0, 0}, wt({0, 2, 0, 0, 0, 0}), wt({0, 0, -2, 0, 0, 0}));
  add("a3", {0, 0, 2, -2, 0, 0}, wt({0, 2, 2, 0, 2, 0}), wt({2, 0, 2, 0, 0, 2}));
  add("a'", {0, 0, 0, 0, 2, -2}, wt({0, 2, 2, 0, 2, 0}), wt({2, 0, 0, 2, 2, 0}));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = 0; k < 2; ++k) {
        std::vector<int> c(6, 0);
        c[size_t(i)] = 2;
        c[size_t(j)] = 2;
        c[size_t(4 + k)] = 2;
        m.theta.push_back(wt(std::move(c)));
      }
  for (int i = 0; i < 4; ++i)
    for (int s : {2, -2}) {
      std::vector<int> c(6, 0);
      c[size_t(i)] = s;
      m.theta.push_back(wt(std::move(c)));
    }
  m.constraint = wt({2, 2, 2, 2, 2, 2});
  m.motive_g = {{1, false}, {2, false}, {3, false}, {4, false}, {1, false}, {2, false}};
  m.motive_h0modz = {{1, false}, {2, false}, {2, false}};
  m.torus_ad_degrees = {1, 1, 1, 1, 1, 1};
  m.expected_constant = uconst({{2, -1}, {4, -1}, {4, -1}});
  m.datum.weyl_degrees = {2, 3, 4, 2};
  return finish(std::move(m));
}

ModelSpec build_gsp6_gsp4() {
  ModelSpec m;
  m.name = "GSp6xGSp4";
  m.rho_x = "Spin7 (x) Spin5 (32-dimensional)";
  m.datum.dim = 5;
  auto add = [&](const std::string& nm, std::vector<int> rt, std::vector<int> cort, Weight beta,
                 Weight beta2) {
    m.datum.simples.push_back({nm, wt(rt), wt(cort), 1});
    m.root_data.push_back({nm, RootType::T, 1, false, beta, beta2});
  };
  add("a1", {2, -2, 0, 0, 0}, {2, -2, 0, 0, 0}, wt({1, -1, 1, -1, 1}), wt({1, -1, -1, 1, -1}));
  add("a2", {0, 2, -2, 0, 0}, {0, 2, -2, 0, 0}, wt({-1, 1, -1, 1, 1}), wt({1, 1, -1, -1, -1}));
  add("a3", {0, 0, 4, 0, 0}, {0, 0, 2, 0, 0}, wt({1, -1, 1, -1, 1}), wt({-1, 1, 1, 1, -1}));
  add("a1'", {0, 0, 0, 2, -2}, {0, 0, 0, 2, -2}, wt({-1, 1, 1, 1, -1}), wt({1, -1, -1, 1, -1}));
  add("a2'", {0, 0, 0, 0, 4}, {0, 0, 0, 0, 2}, wt({1, -1, 1, -1, 1}), wt({-1, 1, -1, 1, 1}));
  m.theta = sign_vectors(5, 0, {}, 0, 0);
  m.motive_g = {{1, false}, {2, false}, {4, false}, {6, false}, {1, false}, {2, false}, {4, false}};
  m.motive_h0modz = {{2, false}, {2, false}, {4, false}};
  m.torus_ad_degrees = {1, 1, 1, 1, 1};
  m.expected_constant = uconst({{4, -1}, {4, -1}, {8, -1}});
  m.datum.weyl_degrees = {2, 4, 6, 2, 4};
  return finish(std::move(m));
}

ModelSpec build_gl6() {
  ModelSpec m;
  m.name = "GL6";
  m.rho_x = "wedge^3 of GL6 (20-dimensional)";
  m.datum.dim = 6;
  for (int i = 0; i < 5; ++i) {
    std::vector<int> c(6, 0);
    c[size_t(i)] = 2;
    c[size_t(i + 1)] = -2;
    std::string nm = "a" + std::to_string(i + 1);
    m.datum.simples.push_back({nm, wt(c), wt(c), 1});
    SimpleRootData rd;
    rd.name = nm;
    rd.degree = 1;
    rd.type = (i % 2 == 0) ? RootType::T : RootType::Upsi;
    m.root_data.push_back(rd);
  }
  m.root_data[0].color = wt({2, 0, 0, 2, 2, 0});   // e1+e4+e5
  m.root_data[0].color2 = wt({2, 0, 2, 0, 0, 2});  // e1+e3+e6
  m.root_data[2].color = wt({0, 2, 2, 0, 2, 0});   // e2+e3+e5
  m.root_data[2].color2 = wt({2, 0, 2, 0, 0, 2});
  m.root_data[4].color = wt({0, 2, 2, 0, 2, 0});
  m.root_data[4].color2 = wt({2, 0, 0, 2, 2, 0});
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) {
        std::vector<int> c(6, 0);
        c[size_t(i)] = c[size_t(j)] = c[size_t(k)] = 2;
        m.theta.push_back(wt(std::move(c)));
      }
  m.constraint = wt({2, 2, 2, 2, 2, 2});
  m.motive_g = {{1, false}, {2, false}, {3, false}, {4, false}, {5, false}, {6, false}};
  m.motive_h0modz = {{2, false}};
  m.torus_ad_degrees = {1, 1, 1, 1, 1, 1};
  m.expected_constant = uconst({{4, -1}});
  m.datum.weyl_degrees = {2, 3, 4, 5, 6};
  ReductionSpec r;
  r.name = "GL6-over-GL4xGL2";
  r.sub_simple_indices = {0, 1, 2, 4};
  r.wsub_order = 48;
  r.u_max = 4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) {
        std::vector<int> c(6, 0);
        c[size_t(i)] = c[size_t(j)] = c[size_t(k)] = 2;
        r.theta1_plus.push_back(wt(std::move(c)));
      }
  m.reductions.push_back(std::move(r));
  return finish(std::move(m));
}

ModelSpec build_gu6() {
  ModelSpec m;
  m.name = "GU6";
  m.rho_x = "wedge^3 of the GU(3,3) dual (20-dimensional with weight multiplicities)";
  m.datum.dim = 3;
  m.datum.simples.push_back({"a1", wt({2, -2, 0}), wt({2, -2, 0}), 2});
  m.root_data.push_back(
      {"a1", RootType::T, 2, false, wt({1, -1, -1}), wt({1, -1, 1})});
  m.datum.simples.push_back({"a2", wt({0, 2, -2}), wt({0, 2, -2}), 2});
  m.root_data.push_back({"a2", RootType::Upsi, 2, false, std::nullopt, std::nullopt});
  m.datum.simples.push_back({"a3", wt({0, 0, 4}), wt({0, 0, 2}), 1});
  m.root_data.push_back({"a3", RootType::T, 1, true, wt({0, 0, 2}), std::nullopt});
  for (int i = 0; i < 3; ++i)
    for (int s : {2, -2}) {
      std::vector<int> c(3, 0);
      c[size_t(i)] = s;
      m.theta.push_back(wt(std::move(c), 2));
    }
  for (auto& w : sign_vectors(3, 0, {}, 0, 0)) m.theta.push_back(w);
  m.motive_g = {{1, false}, {2, false}, {4, false}, {6, false}, {1, true}, {3, true}, {5, true}};
  m.motive_h0modz = {{2, false}};
  m.torus_ad_degrees = {1, 2, 2, 2};
  m.expected_constant = uconst({{4, -1}});
  m.datum.weyl_degrees = {2, 4, 6};
  return finish(std::move(m));
}

ModelSpec build_gu4_gu2() {
  ModelSpec m;
  m.name = "GU4xGU2";
  m.rho_x = "(wedge^2 (x) std2) (+) std4 (+) std4^dual, via the endoscopic "
            "restriction of wedge^3 (20-dimensional with weight multiplicities)";
  m.datum.dim = 3;
  m.datum.simples.push_back({"a1", wt({2, -2, 0}), wt({2, -2, 0}), 2});
  m.root_data.push_back(
      {"a1", RootType::T, 2, false, wt({1, -1, -1}), wt({1, -1, 1})});
  m.datum.simples.push_back({"a2", wt({0, 4, 0}), wt({0, 2, 0}), 1});
  m.root_data.push_back({"a2", RootType::T, 1, true, wt({0, 2, 0}), std::nullopt});
  m.datum.simples.push_back({"a'", wt({0, 0, 4}), wt({0, 0, 2}), 1});
  m.root_data.push_back({"a'", RootType::T, 1, true, wt({0, 0, 2}), std::nullopt});
  for (int i = 0; i < 3; ++i)
    for (int s : {2, -2}) {
      std::vector<int> c(3, 0);
      c[size_t(i)] = s;
      m.theta.push_back(wt(std::move(c), 2));
    }
  for (auto& w : sign_vectors(3, 0, {}, 0, 0)) m.theta.push_back(w);
  m.motive_g = {{1, false}, {2, false}, {4, false}, {1, true}, {3, true},
                {1, false}, {2, false}, {1, true}};
  m.motive_h0modz = {{2, false}, {2, false}, {1, true}};
  m.torus_ad_degrees = {1, 1, 2, 2, 2};
  m.expected_constant = uconst({{4, -1}, {4, -1}, {2, 1}});
  m.datum.weyl_degrees = {2, 4, 2};
  return finish(std::move(m));
}

ModelSpec build_gsp10() {
  ModelSpec m;
  m.name = "GSp10";
  m.rho_x = "Spin11 (32-dimensional)";
  m.datum.dim = 5;
  for (int i = 0; i < 4; ++i) {
    std::vector<int> c(5, 0);
    c[size_t(i)] = 2;
    c[size_t(i + 1)] = -2;
    std::string nm = "a" + std::to_string(i + 1);
    m.datum.simples.push_back({nm, wt(c), wt(c), 1});
    SimpleRootData rd;
    rd.name = nm;
    rd.type = (i % 2 == 0) ? RootType::T : RootType::Upsi;
    m.root_data.push_back(rd);
  }
  m.datum.simples.push_back({"a5", wt({0, 0, 0, 0, 4}), wt({0, 0, 0, 0, 2}), 1});
  m.root_data.push_back({"a5", RootType::T, 1, false, std::nullopt, std::nullopt});
  m.root_data[0].color = wt({1, -1, -1, 1, 1});
  m.root_data[0].color2 = wt({1, -1, 1, -1, -1});
  m.root_data[2].color = wt({-1, 1, 1, -1, 1});
  m.root_data[2].color2 = wt({1, -1, 1, -1, -1});
  m.root_data[4].color = wt({-1, 1, 1, -1, 1});
  m.root_data[4].color2 = wt({1, -1, -1, 1, 1});
  m.theta = sign_vectors(5, 0, {}, 0, 0);
  m.motive_g = {{1, false}, {2, false}, {4, false}, {6, false}, {8, false}, {10, false}};
  m.motive_h0modz = {{2, false}};
  m.torus_ad_degrees = {1, 1, 1, 1, 1};
  m.expected_constant = uconst({{4, -1}});
  m.datum.weyl_degrees = {2, 4, 6, 8, 10};
  ReductionSpec r;
  r.name = "GSp10-over-GL4xGL2";
  r.sub_simple_indices = {0, 1, 2, 4};
  r.wsub_order = 48;
  r.u_max = 10;
  r.theta1_plus.push_back(wt({1, 1, 1, 1, 1}));
  r.theta1_plus.push_back(wt({1, 1, 1, 1, -1}));
  r.theta1_plus.push_back(wt({1, 1, 1, -1, 1}));
  r.theta1_plus.push_back(wt({1, 1, 1, -1, -1}));
  for (int i = 0; i < 3; ++i)
    for (int s5 : {1, -1}) {
      std::vector<int> c(5, 1);
      c[size_t(i)] = -1;
      c[4] = s5;
      r.theta1_plus.push_back(wt(std::move(c)));
    }
  m.reductions.push_back(std::move(r));
  return finish(std::move(m));
}

ModelSpec build_gsp6_gl2() {
  ModelSpec m;
  m.name = "GSp6xGL2";
  m.rho_x = "Spin7 (x) std2 (16-dimensional)";
  m.datum.dim = 5;
  m.datum.simples.push_back({"a1", wt({2, -2, 0, 0, 0}), wt({2, -2, 0, 0, 0}), 1});
  m.root_data.push_back(
      {"a1", RootType::T, 1, false, wt({1, -1, -1, 2, 0}), wt({1, -1, 1, 0, 2})});
  m.datum.simples.push_back({"a2", wt({0, 2, -2, 0, 0}), wt({0, 2, -2, 0, 0}), 1});
  m.root_data.push_back({"a2", RootType::Upsi, 1, false, std::nullopt, std::nullopt});
  m.datum.simples.push_back({"a3", wt({0, 0, 4, 0, 0}), wt({0, 0, 2, 0, 0}), 1});
  m.root_data.push_back(
      {"a3", RootType::T, 1, false, wt({-1, 1, 1, 2, 0}), wt({1, -1, 1, 0, 2})});
  m.datum.simples.push_back({"a'", wt({0, 0, 0, 2, -2}), wt({0, 0, 0, 2, -2}), 1});
  m.root_data.push_back(
      {"a'", RootType::T, 1, false, wt({-1, 1, 1, 2, 0}), wt({1, -1, -1, 2, 0})});
  m.theta = sign_vectors(3, 2, {2, 0}, 0, 0);
  for (auto& w : sign_vectors(3, 2, {0, 2}, 0, 0)) m.theta.push_back(w);
  m.constraint = wt({0, 0, 0, 2, 2});
  m.motive_g = {{1, false}, {2, false}, {4, false}, {6, false}, {1, false}, {2, false}};
  m.motive_h0modz = {{1, false}, {2, false}};
  m.torus_ad_degrees = {1, 1, 1, 1, 1};
  m.expected_constant = uconst({{4, -1}});
  m.datum.weyl_degrees = {2, 4, 6, 2};
  ReductionSpec r;
  r.name = "GSp6GL2-over-trilinear";
  r.sub_simple_indices = {0, 2, 3};
  r.wsub_order = 8;
  r.u_max = 4;
  r.theta1_plus = {wt({1, 1, 1, 2, 0}), wt({1, 1, -1, 2, 0}), wt({1, 1, 1, 0, 2}),
                   wt({1, 1, -1, 0, 2})};
  m.reductions.push_back(std::move(r));
  return finish(std::move(m));
}

ModelSpec build_gso12() {
  ModelSpec m;
  m.name = "GSO12";
  m.rho_x = "half-spin HSpin12 (32-dimensional); the other half-spin model is "
            "its outer-automorphism image";
  m.datum.dim = 6;
  for (int i = 0; i < 5; ++i) {
    std::vector<int> c(6, 0);
    c[size_t(i)] = 2;
    c[size_t(i + 1)] = -2;
    std::string nm = "a" + std::to_string(i + 1);
    m.datum.simples.push_back({nm, wt(c), wt(c), 1});
    SimpleRootData rd;
    rd.name = nm;
    rd.type = (i % 2 == 0) ? RootType::T : RootType::Upsi;
    m.root_data.push_back(rd);
  }
  m.datum.simples.push_back({"a6", wt({0, 0, 0, 0, 2, 2}), wt({0, 0, 0, 0, 2, 2}), 1});
  m.root_data.push_back({"a6", RootType::Upsi, 1, false, std::nullopt, std::nullopt});
  m.root_data[0].color = wt({1, -1, -1, 1, 1, -1});
  m.root_data[0].color2 = wt({1, -1, 1, -1, -1, 1});
  m.root_data[2].color = wt({-1, 1, 1, -1, 1, -1});
  m.root_data[2].color2 = wt({1, -1, 1, -1, -1, 1});
  m.root_data[4].color = wt({-1, 1, 1, -1, 1, -1});
  m.root_data[4].color2 = wt({1, -1, -1, 1, 1, -1});
  m.theta = sign_vectors(6, 0, {}, 2, 1);
  m.motive_g = {{1, false}, {2, false}, {4, false}, {6, false}, {6, false}, {8, false}, {10, false}};
  m.motive_h0modz = {{2, false}};
  m.torus_ad_degrees = {1, 1, 1, 1, 1, 1};
  m.expected_constant = uconst({{4, -1}});
  m.datum.weyl_degrees = {2, 4, 6, 6, 8, 10};
  ReductionSpec r;
  r.name = "GSO12-over-GL6";
  r.sub_simple_indices = {0, 1, 2, 3, 4};
  r.wsub_order = 720;
  r.u_max = 6;
  for (int l = 0; l < 6; ++l) {
    std::vector<int> c(6, 1);
    c[size_t(l)] = -1;
    r.theta1_plus.push_back(wt(std::move(c)));
  }
  m.reductions.push_back(std::move(r));
  return finish(std::move(m));
}

ModelSpec build_gso8_gl2() {
  ModelSpec m;
  m.name = "GSO8xGL2";
  m.rho_x = "HSpin8 (x) std2 (16-dimensional); the other half-spin model is "
            "its outer-automorphism image";
  m.datum.dim = 6;
  auto addU = [&](const std::string& nm, std::vector<int> rt) {
    m.datum.simples.push_back({nm, wt(rt), wt(rt), 1});
    m.root_data.push_back({nm, RootType::Upsi, 1, false, std::nullopt, std::nullopt});
  };
  auto addT = [&](const std::string& nm, std::vector<int> rt, Weight beta, Weight beta2) {
    m.datum.simples.push_back({nm, wt(rt), wt(rt), 1});
    m.root_data.push_back({nm, RootType::T, 1, false, beta, beta2});
  };
  addT("a1", {2, -2, 0, 0, 0, 0}, wt({1, -1, -1, 1, 2, 0}), wt({1, -1, 1, -1, 0, 2}));
  addU("a2", {0, 2, -2, 0, 0, 0});
  addT("a3", {0, 0, 2, -2, 0, 0}, wt({-1, 1, 1, -1, 2, 0}), wt({1, -1, 1, -1, 0, 2}));
  addU("a4", {0, 0, 2, 2, 0, 0});
  addT("a'", {0, 0, 0, 0, 2, -2}, wt({-1, 1, 1, -1, 2, 0}), wt({1, -1, -1, 1, 2, 0}));
  m.theta = sign_vectors(4, 2, {2, 0}, 2, 0);
  for (auto& w : sign_vectors(4, 2, {0, 2}, 2, 0)) m.theta.push_back(w);
  m.constraint = wt({0, 0, 0, 0, 2, 2});
  m.motive_g = {{1, false}, {2, false}, {4, false}, {4, false}, {6, false}, {1, false}, {2, false}};
  m.motive_h0modz = {{2, false}};
  m.torus_ad_degrees = {1, 1, 1, 1, 1, 1};
  m.expected_constant = uconst({{4, -1}});
  m.datum.weyl_degrees = {2, 4, 6, 4, 2};
  ReductionSpec r;
  // The sub identity here is the GL4xGL2-shaped one; the trilinear
  // identity enters the chain through GSp6xGL2 instead.
  r.name = "GSO8-over-trilinear";
  r.sub_simple_indices = {0, 1, 2, 4};
  r.wsub_order = 48;
  r.u_max = 2;
  r.theta1_plus = {wt({1, 1, 1, 1, 2, 0}), wt({1, 1, 1, 1, 0, 2})};
  m.reductions.push_back(std::move(r));
  return finish(std::move(m));
}

ModelSpec build_e7() {
  ModelSpec m;
  m.name = "E7";
  m.rho_x = "omega7, the 56-dimensional representation of E7";
  m.datum.dim = 8;
  m.tau_dim = 7;
  auto add = [&](const std::string& nm, std::vector<int> rt, RootType ty) {
    m.datum.simples.push_back({nm, wt(rt), wt(rt), 1});
    m.root_data.push_back({nm, ty, 1, false, std::nullopt, std::nullopt});
  };
  add("a1", {1, -1, -1, -1, -1, -1, -1, 1}, RootType::Upsi);
  add("a2", {2, 2, 0, 0, 0, 0, 0, 0}, RootType::T);
  add("a3", {-2, 2, 0, 0, 0, 0, 0, 0}, RootType::Upsi);
  add("a4", {0, -2, 2, 0, 0, 0, 0, 0}, RootType::Upsi);
  add("a5", {0, 0, -2, 2, 0, 0, 0, 0}, RootType::T);
  add("a6", {0, 0, 0, -2, 2, 0, 0, 0}, RootType::Upsi);
  add("a7", {0, 0, 0, 0, -2, 2, 0, 0}, RootType::T);
  m.root_data[1].color = wt({1, 1, -1, 1, 1, -1, 0, 0});
  m.root_data[1].color2 = wt({1, 1, 1, -1, -1, 1, 0, 0});
  m.root_data[4].color = wt({1, 1, -1, 1, 1, -1, 0, 0});
  m.root_data[4].color2 = wt({-1, -1, -1, 1, -1, 1, 0, 0});
  m.root_data[6].color = wt({1, 1, 1, -1, -1, 1, 0, 0});
  m.root_data[6].color2 = wt({-1, -1, -1, 1, -1, 1, 0, 0});
  for (int i = 0; i < 6; ++i)
    for (int si : {2, -2})
      for (int sf : {1, -1}) {
        std::vector<int> c(8, 0);
        c[size_t(i)] = si;
        c[6] = -sf;
        c[7] = sf;
        m.theta.push_back(wt(std::move(c)));
      }
  // half-sum weights: even number of +1 entries
  for (int mask = 0; mask < 64; ++mask) {
    int plus = 6 - __builtin_popcount(unsigned(mask));
    if (plus % 2 != 0) continue;
    std::vector<int> c(8, 0);
    for (int i = 0; i < 6; ++i) c[size_t(i)] = (mask >> i) & 1 ? -1 : 1;
    m.theta.push_back(wt(std::move(c)));
  }
  m.motive_g = {{2, false}, {6, false}, {8, false}, {10, false}, {12, false}, {14, false},
                {18, false}};
  m.motive_h0modz = {{2, false}};
  m.torus_ad_degrees = {1, 1, 1, 1, 1, 1, 1};
  m.expected_constant = uconst({{4, -1}});
  m.datum.weyl_degrees = {2, 6, 8, 10, 12, 14, 18};
  ReductionSpec r;
  r.name = "E7-over-D6";
  r.sub_simple_indices = {1, 2, 3, 4, 5, 6};
  r.wsub_order = 23040;
  r.u_max = 12;
  for (int i = 0; i < 6; ++i)
    for (int si : {2, -2}) {
      std::vector<int> c(8, 0);
      c[size_t(i)] = si;
      c[6] = -1;
      c[7] = 1;
      r.theta1_plus.push_back(wt(std::move(c)));
    }
  m.reductions.push_back(std::move(r));
  return finish(std::move(m));
}

std::vector<ModelSpec> build_catalog() {
  std::vector<ModelSpec> v;
  v.push_back(build_gl4_gl2());
  v.push_back(build_gu4_gu2());
  v.push_back(build_gsp6_gsp4());
  v.push_back(build_gl6());
  v.push_back(build_gu6());
  v.push_back(build_gsp10());
  v.push_back(build_gsp6_gl2());
  v.push_back(build_gso8_gl2());
  v.push_back(build_gso12());
  v.push_back(build_e7());
  v.push_back(build_trilinear());
  return v;
}

std::vector<ModelSpec>& catalog_mut() {
  static std::vector<ModelSpec> cat = build_catalog();
  return cat;
}

}  // namespace

std::string motive_str(const std::vector<MotiveFactor>& fs) {
  std::map<MotiveFactor, int> mult;
  for (const auto& f : fs) mult[f]++;
  std::ostringstream os;
  bool first = true;
  for (const auto& [f, n] : mult) {
    if (!first) os << " ";
    first = false;
    os << (f.eta ? "L(" : "zeta(") << f.degree << (f.eta ? ",eta)" : ")");
    if (n > 1) os << "^" << n;
  }
  return first ? "1" : os.str();
}

Weight ModelSpec::canonical(const Weight& w) const {
  if (!constraint) return w;
  const auto& z = constraint->coords;
  long s = 0, zz = 0;
  for (size_t i = 0; i < z.size(); ++i) {
    s += long(w.coords[i]) * z[i];
    zz += long(z[i]) * z[i];
  }
  Weight out = w;
  // band (-zz/2, zz/2]
  while (2 * s > zz) {
    for (size_t i = 0; i < z.size(); ++i) out.coords[i] -= z[i];
    s -= zz;
  }
  while (2 * s <= -zz) {
    for (size_t i = 0; i < z.size(); ++i) out.coords[i] += z[i];
    s += zz;
  }
  return out;
}

const Weight* ModelSpec::find_theta(const Weight& w) const {
  Weight c = canonical(w);
  for (const auto& t : theta)
    if (t.coords == c.coords) return &t;
  return nullptr;
}

std::vector<int> ModelSpec::tau_exponents(const Weight& w) const {
  if (int(w.dim()) != datum.dim) throw std::invalid_argument("weight dimension mismatch");
  if (tau_dim == datum.dim) return w.coords;
  // E7: weights live in span{e1..e6, e8-e7}; the last tau variable carries
  // the e8-e7 direction.
  if (w.coords[6] != -w.coords[7]) throw std::domain_error("weight outside the e8-e7 span");
  std::vector<int> out(w.coords.begin(), w.coords.begin() + 6);
  out.push_back(w.coords[7]);
  return out;
}

int ModelSpec::theta_dim_weighted() const {
  int n = 0;
  for (const auto& t : theta) n += t.degree;
  return n;
}

int ThetaPlus::weighted_size() const {
  int n = 0;
  for (const auto& t : elements) n += t.degree;
  return n;
}

namespace {

// Per simple root: the set that w_alpha removes from Theta+ (the colors for
// Type T, the single color for the degenerate GU roots, nothing for (U,psi)).
std::vector<Weight> removal_set(const ModelSpec& m, size_t i) {
  const auto& rd = m.root_data[i];
  std::vector<Weight> out;
  if (rd.type == RootType::Upsi) return out;
  if (!rd.color) throw std::domain_error("Type T root without colors: " + rd.name);
  out.push_back(m.canonical(*rd.color));
  if (!rd.degenerate) {
    if (!rd.color2) throw std::domain_error("Type T root without second color: " + rd.name);
    Weight c2 = m.canonical(*rd.color2);
    if (!(c2.coords == out[0].coords)) out.push_back(c2);
  }
  return out;
}

bool contains(const std::vector<Weight>& set, const Weight& w) {
  for (const auto& s : set)
    if (s.coords == w.coords) return true;
  return false;
}

}  // namespace

ThetaPlus theta_plus(const ModelSpec& m) {
  std::set<std::vector<int>> cur;
  for (size_t i = 0; i < m.root_data.size(); ++i)
    for (const auto& c : removal_set(m, i)) {
      if (!m.find_theta(c)) throw std::domain_error("color outside Theta for " + m.name);
      cur.insert(c.coords);
    }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < m.root_data.size(); ++i) {
      const auto& s = m.datum.simples[i];
      auto removed = removal_set(m, i);
      std::vector<std::vector<int>> to_add;
      for (const auto& key : cur) {
        Weight g(key);
        if (m.root_data[i].type == RootType::T && contains(removed, g)) continue;
        Weight img = m.canonical(reflect(s.coroot, s.root, g));
        if (!m.find_theta(img))
          throw std::domain_error("Theta+ closure escapes Theta in " + m.name);
        if (!cur.count(img.coords)) to_add.push_back(img.coords);
      }
      for (auto& k : to_add) {
        cur.insert(std::move(k));
        changed = true;
      }
    }
  }
  ThetaPlus tp;
  for (const auto& key : cur) {
    const Weight* t = m.find_theta(Weight(key));
    tp.elements.push_back(*t);
  }
  std::sort(tp.elements.begin(), tp.elements.end());

  // Post-verification: the reflection conditions and Theta = Theta+ ⊔ -Theta+.
  for (size_t i = 0; i < m.root_data.size(); ++i) {
    const auto& s = m.datum.simples[i];
    std::set<std::vector<int>> image;
    for (const auto& g : tp.elements)
      image.insert(m.canonical(reflect(s.coroot, s.root, g)).coords);
    std::vector<Weight> diff;
    for (const auto& g : tp.elements)
      if (!image.count(g.coords)) diff.push_back(g);
    auto removed = removal_set(m, i);
    if (m.root_data[i].type == RootType::Upsi) {
      if (!diff.empty()) throw std::domain_error("Theta+ not stable under " + s.name);
    } else {
      if (diff.size() != removed.size())
        throw std::domain_error("Theta+ \\ w Theta+ has wrong size at " + s.name);
      for (const auto& d : diff)
        if (!contains(removed, d))
          throw std::domain_error("Theta+ \\ w Theta+ mismatches colors at " + s.name);
    }
  }
  std::map<std::vector<int>, int> count;
  for (const auto& t : m.theta) count[m.canonical(t).coords] += 1;
  for (const auto& g : tp.elements) {
    count[g.coords] -= 1;
    count[m.negate(g).coords] -= 1;
  }
  for (const auto& [k, c] : count)
    if (c != 0) throw std::domain_error("Theta+ ⊔ -Theta+ != Theta in " + m.name);
  return tp;
}

ThetaPlus brute_force_theta_plus(const ModelSpec& m) {
  // Candidates pick one weight from each {gamma, -gamma} pair, so the search
  // space is 2^(|Theta|/2); the per-root conditions are bitmask checks.
  std::vector<Weight> elems;
  for (const auto& t : m.theta) elems.push_back(m.canonical(t));
  std::sort(elems.begin(), elems.end());
  size_t n = elems.size();
  if (n > 32) throw std::length_error("brute force limited to |Theta| <= 32");
  auto index_of = [&](const Weight& w) {
    Weight c = m.canonical(w);
    for (size_t i = 0; i < n; ++i)
      if (elems[i].coords == c.coords) return int(i);
    throw std::domain_error("weight not in Theta");
  };
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> pair_of(n, -1);
  for (size_t i = 0; i < n; ++i) {
    if (pair_of[i] >= 0) continue;
    int j = index_of(m.negate(elems[i]));
    if (j == int(i)) throw std::domain_error("self-paired weight in Theta");
    pair_of[i] = int(pairs.size());
    pair_of[size_t(j)] = int(pairs.size());
    pairs.push_back({int(i), j});
  }
  size_t npairs = pairs.size();
  if (npairs > 16) throw std::length_error("brute force limited to 2^16 candidates");

  std::vector<std::vector<int>> refl_img(m.root_data.size(), std::vector<int>(n));
  std::vector<uint64_t> removal_mask(m.root_data.size(), 0);
  for (size_t r = 0; r < m.root_data.size(); ++r) {
    const auto& s = m.datum.simples[r];
    for (size_t i = 0; i < n; ++i)
      refl_img[r][i] = index_of(reflect(s.coroot, s.root, elems[i]));
    for (const auto& c : removal_set(m, r)) removal_mask[r] |= 1ull << index_of(c);
  }
  std::vector<uint64_t> solutions;
  for (uint32_t choice = 0; choice < (1u << npairs); ++choice) {
    uint64_t set = 0;
    for (size_t p = 0; p < npairs; ++p)
      set |= 1ull << ((choice >> p) & 1 ? pairs[p].second : pairs[p].first);
    bool ok = true;
    for (size_t r = 0; r < m.root_data.size() && ok; ++r) {
      uint64_t img = 0;
      uint64_t s = set;
      while (s) {
        int i = __builtin_ctzll(s);
        s &= s - 1;
        img |= 1ull << refl_img[r][size_t(i)];
      }
      uint64_t diff = set & ~img;
      if (m.root_data[r].type == RootType::Upsi) {
        if (diff != 0) ok = false;
      } else {
        if (diff != removal_mask[r]) ok = false;
      }
    }
    if (ok) solutions.push_back(set);
  }
  if (solutions.size() != 1)
    throw std::domain_error("brute force found " + std::to_string(solutions.size()) +
                            " Theta+ candidates in " + m.name);
  ThetaPlus tp;
  for (size_t i = 0; i < n; ++i)
    if (solutions[0] & (1ull << i)) tp.elements.push_back(elems[i]);
  std::sort(tp.elements.begin(), tp.elements.end());
  return tp;
}

std::vector<MotiveFactor> delta_ratio(const ModelSpec& m) {
  std::map<MotiveFactor, int> mult;
  for (const auto& f : m.motive_g) mult[f]++;
  for (const auto& f : m.motive_h0modz) {
    auto it = mult.find(f);
    if (it == mult.end() || it->second == 0)
      throw std::domain_error("H0/Z motive factor absent from G in " + m.name + ": " +
                              motive_str({f}));
    it->second--;
  }
  std::vector<MotiveFactor> out;
  for (const auto& [f, c] : mult)
    for (int i = 0; i < c; ++i) out.push_back(f);
  return out;
}

const std::vector<ModelSpec>& catalog() { return catalog_mut(); }

const ModelSpec& model(const std::string& name) {
  for (const auto& m : catalog())
    if (m.name == name) return m;
  std::string msg = "unknown model '" + name + "'; available:";
  for (const auto& m : catalog()) msg += " " + m.name;
  throw std::out_of_range(msg);
}

std::vector<std::string> model_names() {
  std::vector<std::string> out;
  for (const auto& m : catalog()) out.push_back(m.name);
  return out;
}

namespace {

using nlohmann::json;

json weight_json(const Weight& w) {
  json j;
  j["coords2"] = w.coords;
  if (w.degree != 1) j["degree"] = w.degree;
  return j;
}

Weight weight_from_json(const json& j) {
  Weight w;
  w.coords = j.at("coords2").get<std::vector<int>>();
  w.degree = j.value("degree", 1);
  return w;
}

json motive_json(const std::vector<MotiveFactor>& fs) {
  json a = json::array();
  for (const auto& f : fs) a.push_back(json{{"degree", f.degree}, {"eta", f.eta}});
  return a;
}

std::vector<MotiveFactor> motive_from_json(const json& a) {
  std::vector<MotiveFactor> out;
  for (const auto& j : a) out.push_back({j.at("degree").get<int>(), j.at("eta").get<bool>()});
  return out;
}

json model_json_impl(const ModelSpec& m, bool with_derived) {
  json j;
  j["name"] = m.name;
  j["rho_x"] = m.rho_x;
  j["dim"] = m.datum.dim;
  j["tau_dim"] = m.tau_dim;
  if (m.constraint) j["constraint"] = weight_json(*m.constraint);
  json roots = json::array();
  for (size_t i = 0; i < m.root_data.size(); ++i) {
    const auto& s = m.datum.simples[i];
    const auto& rd = m.root_data[i];
    json r;
    r["name"] = rd.name;
    r["root"] = weight_json(s.root);
    r["coroot"] = weight_json(s.coroot);
    r["type"] = rd.type == RootType::T ? "T" : "U-psi";
    r["degree"] = rd.degree;
    r["degenerate"] = rd.degenerate;
    if (rd.color) r["color"] = weight_json(*rd.color);
    if (rd.color2) r["color2"] = weight_json(*rd.color2);
    roots.push_back(r);
  }
  j["simple_roots"] = roots;
  json th = json::array();
  for (const auto& t : m.theta) th.push_back(weight_json(t));
  j["theta"] = th;
  j["motive_g"] = motive_json(m.motive_g);
  j["motive_h0modz"] = motive_json(m.motive_h0modz);
  j["torus_ad_degrees"] = m.torus_ad_degrees;
  j["weyl_degrees"] = m.datum.weyl_degrees;
  json cst = json::object();
  for (const auto& [e, c] : m.expected_constant.num().terms())
    cst[std::to_string(e.back())] = rat_str(c);
  j["expected_constant_u"] = cst;
  json reds = json::array();
  for (const auto& r : m.reductions) {
    json jr;
    jr["name"] = r.name;
    jr["sub_simple_indices"] = r.sub_simple_indices;
    jr["wsub_order"] = r.wsub_order;
    jr["u_max"] = r.u_max;
    json t1 = json::array();
    for (const auto& t : r.theta1_plus) t1.push_back(weight_json(t));
    jr["theta1_plus"] = t1;
    reds.push_back(jr);
  }
  j["reductions"] = reds;
  if (with_derived) {
    json pc = json::array();
    for (const auto& c : m.datum.positive_coroots) pc.push_back(weight_json(c));
    j["positive_coroots"] = pc;
    json tp = json::array();
    for (const auto& t : theta_plus(m).elements) tp.push_back(weight_json(t));
    j["theta_plus"] = tp;
    j["delta_factors"] = motive_str(delta_ratio(m));
    j["weyl_order"] = m.datum.weyl_order();
  }
  return j;
}

ModelSpec model_from_json(const json& j) {
  ModelSpec m;
  m.name = j.at("name").get<std::string>();
  m.rho_x = j.value("rho_x", "");
  m.datum.dim = j.at("dim").get<int>();
  m.tau_dim = j.value("tau_dim", m.datum.dim);
  if (j.contains("constraint")) m.constraint = weight_from_json(j.at("constraint"));
  for (const auto& r : j.at("simple_roots")) {
    SimpleRoot s;
    s.name = r.at("name").get<std::string>();
    s.root = weight_from_json(r.at("root"));
    s.coroot = weight_from_json(r.at("coroot"));
    s.degree = r.value("degree", 1);
    m.datum.simples.push_back(s);
    SimpleRootData rd;
    rd.name = s.name;
    rd.type = r.at("type").get<std::string>() == "T" ? RootType::T : RootType::Upsi;
    rd.degree = s.degree;
    rd.degenerate = r.value("degenerate", false);
    if (r.contains("color")) rd.color = weight_from_json(r.at("color"));
    if (r.contains("color2")) rd.color2 = weight_from_json(r.at("color2"));
    m.root_data.push_back(rd);
  }
  for (const auto& t : j.at("theta")) m.theta.push_back(weight_from_json(t));
  m.motive_g = motive_from_json(j.at("motive_g"));
  m.motive_h0modz = motive_from_json(j.at("motive_h0modz"));
  m.torus_ad_degrees = j.at("torus_ad_degrees").get<std::vector<int>>();
  m.datum.weyl_degrees = j.at("weyl_degrees").get<std::vector<int>>();
  LaurentPoly p(0);
  for (const auto& [k, v] : j.at("expected_constant_u").items()) {
    auto c = parse_rat(v.get<std::string>());
    if (!c) throw std::invalid_argument("bad rational in expected_constant_u");
    p.add_term({std::stoi(k)}, *c);
  }
  m.expected_constant = RatFun::from_poly(p);
  if (j.contains("reductions"))
    for (const auto& jr : j.at("reductions")) {
      ReductionSpec r;
      r.name = jr.at("name").get<std::string>();
      r.sub_simple_indices = jr.at("sub_simple_indices").get<std::vector<int>>();
      r.wsub_order = jr.at("wsub_order").get<long>();
      r.u_max = jr.at("u_max").get<int>();
      for (const auto& t : jr.at("theta1_plus")) r.theta1_plus.push_back(weight_from_json(t));
      m.reductions.push_back(r);
    }
  m.datum.complete();
  m.datum.validate();
  // color conditions: beta and coroot-beta both lie in Theta
  for (size_t i = 0; i < m.root_data.size(); ++i) {
    const auto& rd = m.root_data[i];
    if (rd.type != RootType::T) continue;
    if (!rd.color || !m.find_theta(*rd.color))
      throw std::domain_error("color of " + rd.name + " outside Theta");
    if (!rd.degenerate) {
      Weight want = m.datum.simples[i].coroot - *rd.color;
      if (!rd.color2 || !(m.canonical(*rd.color2).coords == m.canonical(want).coords))
        throw std::domain_error("color2 of " + rd.name + " is not coroot - color");
      if (!m.find_theta(*rd.color2))
        throw std::domain_error("color2 of " + rd.name + " outside Theta");
    }
  }
  // Theta is W-stable
  for (const auto& s : m.datum.simples)
    for (const auto& t : m.theta) {
      const Weight* img = m.find_theta(reflect(s.coroot, s.root, t));
      if (!img || img->degree != t.degree)
        throw std::domain_error("Theta not Weyl-stable in " + m.name);
    }
  return m;
}

}  // namespace

std::string model_to_json(const ModelSpec& m, bool with_derived) {
  return model_json_impl(m, with_derived).dump(2);
}

std::string catalog_to_json(bool with_derived) {
  json j;
  j["format"] = "relchar-catalog";
  j["version"] = 1;
  json ms = json::array();
  for (const auto& m : catalog()) ms.push_back(model_json_impl(m, with_derived));
  j["models"] = ms;
  return j.dump(2);
}

std::vector<ModelSpec> catalog_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.value("format", "") != "relchar-catalog")
    throw std::invalid_argument("not a relchar catalog file");
  std::vector<ModelSpec> out;
  for (const auto& jm : j.at("models")) out.push_back(model_from_json(jm));
  return out;
}

void override_catalog(std::vector<ModelSpec> ms) { catalog_mut() = std::move(ms); }

uint64_t catalog_version_hash() {
  std::string s = catalog_to_json(false);
  uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= uint64_t(uint8_t(c));
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace relchar::models
