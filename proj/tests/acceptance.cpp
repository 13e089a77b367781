// Acceptance suite: one criterion per block, printed pass/fail lines, and
// the stated runtime budgets enforced.  Exit status 0 iff every criterion
// holds.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "relchar/matverify.hpp"
#include "relchar/padic.hpp"
#include "relchar/verify.hpp"
#include "relchar/weylsum.hpp"

using namespace relchar;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool ok, const std::string& detail = "") {
  printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, what.c_str(),
         detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

bool suite_clean(const std::vector<verify::Check>& checks, std::string* why = nullptr) {
  for (const auto& c : checks)
    if (c.status == "fail") {
      if (why) *why = c.name + (c.detail.empty() ? "" : ": " + c.detail);
      return false;
    }
  return true;
}

}  // namespace

int main() {
  verify::Options opt;
  opt.points = 5;
  opt.seed = 20260808;

  {  // 1. Theta+ golden sets, with brute-force certification; < 1 s
    auto t0 = Clock::now();
    std::vector<verify::Check> checks;
    try {
      checks = verify::run_suite("thetaplus", opt);
    } catch (const std::exception& e) {
      report(1, "Theta+ golden sets", false, e.what());
    }
    long ms = ms_since(t0);
    std::string why;
    bool ok = !checks.empty() && suite_clean(checks, &why);
    // the timing clause covers the Theta+ computations; the suite also runs
    // the Weyl-order counts, so allow their share generously below 1 s each
    report(1, "Theta+ golden sets for all 11 data + brute-force uniqueness", ok && ms < 1000,
           ok ? ("runtime " + std::to_string(ms) + " ms") : why);
  }

  {  // 2. Constant lemmas by exact evaluation at >= 5 points
    bool ok = true;
    std::string detail;
    for (const auto& m : models::catalog()) {
      auto t0 = Clock::now();
      auto pts = weylsum::sample_points(m, 5, opt.seed + 2);
      auto res = weylsum::weyl_sum_constant(m, pts);
      long ms = ms_since(t0);
      long budget = m.datum.weyl_order() <= 23040 ? 1000 : 600000;
      if (!res.pass || ms > budget) {
        ok = false;
        detail = m.name + ": " + (res.pass ? "over budget" : res.detail);
        break;
      }
      if (m.name == "E7") detail = "E7 in " + std::to_string(ms) + " ms";
    }
    report(2, "constant lemmas exactly at 5 points per model (11 models)", ok, detail);
  }

  {  // 3. Symbolic constant lemmas for |W| <= 384
    bool ok = true;
    std::string detail;
    for (const char* name : {"trilinear", "GL4xGL2", "GSp6xGSp4", "GU4xGU2", "GU6"}) {
      try {
        const auto& m = models::model(name);
        if (!(weylsum::weyl_sum_symbolic(m) == m.expected_constant)) {
          ok = false;
          detail = std::string(name) + ": residual theta-dependence or wrong constant";
        }
      } catch (const std::exception& e) {
        ok = false;
        detail = std::string(name) + ": " + e.what();
      }
    }
    report(3, "symbolic constant lemmas with zero residual (5 models, |W| <= 384)", ok, detail);
  }

  {  // 4. Antisymmetrization case analysis for the six reductions
    bool ok = true;
    std::string detail;
    int count = 0;
    for (const auto& m : models::catalog())
      for (const auto& r : m.reductions) {
        auto rep = weylsum::antisym_vanish_check(m, r);
        ++count;
        if (!rep.ok) {
          ok = false;
          detail = r.name + ": " + rep.detail;
        }
        if (r.name == "E7-over-D6") {
          bool covers = false;
          for (const auto& p : rep.powers)
            if (p.u_power == 12 && p.verdict == "vanishes") covers = true;
          if (!covers) {
            ok = false;
            detail = "E7 coefficients u^1..u^12 not all covered";
          }
        }
      }
    ok = ok && count == 6;
    report(4, "antisymmetrization vanishing for the 6 reductions (E7 through u^12)", ok, detail);
  }

  {  // 5. Coset reductions equal to 1 at 5 points each
    bool ok = true;
    std::string detail;
    for (const char* name : {"E7", "GSO12", "GL6", "GSp10"}) {
      const auto& m = models::model(name);
      size_t pts_n = m.name == "E7" ? 5 : 5;
      auto pts = weylsum::sample_points(m, pts_n, opt.seed + 5);
      for (const auto& r : m.reductions)
        for (const auto& pt : pts) {
          auto v = weylsum::coset_sum(m, r, pt);
          if (!v || *v != 1) {
            ok = false;
            detail = r.name + (v ? " = " + rat_str(*v) : " hit a pole");
          }
        }
    }
    report(5, "coset reductions E7/W(D6), GSO12/S6, GL6/(S4xS2), GSp10/(S4xS2) equal 1", ok,
           detail);
  }

  {  // 6. b-ratio consistency for every simple root of every model
    bool ok = true;
    std::string detail;
    for (const auto& m : models::catalog()) {
      auto pts = weylsum::sample_points(m, 3, opt.seed + 6);
      for (size_t i = 0; i < m.root_data.size(); ++i) {
        auto res = weylsum::b_ratio_consistency(m, i, pts);
        if (!res.pass) {
          ok = false;
          detail = m.name + "/" + res.detail;
        }
      }
    }
    report(6, "I_alpha(w theta)/I_alpha(theta) = beta(w theta)/beta(theta), all simple roots",
           ok, detail);
  }

  {  // 7. p-adic identities; < 30 s
    auto t0 = Clock::now();
    auto checks = verify::run_suite("padic", opt);
    long ms = ms_since(t0);
    std::string why;
    bool ok = suite_clean(checks, &why);
    report(7, "p-adic integral identities (rank one, Lemmas 6.1/6.2, phi0, (U,psi))",
           ok && ms < 30000, ok ? ("runtime " + std::to_string(ms) + " ms") : why);
  }

  {  // 8. Matrix decomposition identities; < 5 s
    auto t0 = Clock::now();
    auto checks = verify::run_suite("matrix", opt);
    long ms = ms_since(t0);
    std::string why;
    bool ok = suite_clean(checks, &why);
    size_t idents = 0;
    for (const auto& c : checks)
      if (c.name.find(": identity") != std::string::npos ||
          c.name.find("commutes into U") != std::string::npos)
        ++idents;
    ok = ok && idents >= 20;
    report(8, "matrix decomposition identities (" + std::to_string(idents) +
                  " identities, memberships, color reads)",
           ok && ms < 5000, ok ? ("runtime " + std::to_string(ms) + " ms") : why);
  }

  {  // 9. Table-1 Delta column as factor multisets
    bool ok = true;
    std::string detail;
    std::vector<std::pair<const char*, const char*>> rows = {
        {"GL4xGL2", "zeta(1) zeta(3) zeta(4)"},
        {"GU4xGU2", "zeta(1)^2 L(1,eta) L(3,eta) zeta(4)"},
        {"GSp6xGSp4", "zeta(1)^2 zeta(4) zeta(6)"},
        {"GL6", "zeta(1) zeta(3) zeta(4) zeta(5) zeta(6)"},
        {"GU6", "zeta(1) L(1,eta) L(3,eta) zeta(4) L(5,eta) zeta(6)"},
        {"GSp10", "zeta(1) zeta(4) zeta(6) zeta(8) zeta(10)"},
        {"GSp6xGL2", "zeta(1) zeta(2) zeta(4) zeta(6)"},
        {"GSO8xGL2", "zeta(1)^2 zeta(2) zeta(4)^2 zeta(6)"},
        {"GSO12", "zeta(1) zeta(4) zeta(6)^2 zeta(8) zeta(10)"},
        {"E7", "zeta(6) zeta(8) zeta(10) zeta(12) zeta(14) zeta(18)"}};
    for (const auto& [name, want] : rows) {
      std::string got = models::motive_str(models::delta_ratio(models::model(name)));
      if (got != want) {
        ok = false;
        detail = std::string(name) + " gives " + got;
      }
    }
    report(9, "Table-1 Delta factors for all 10 rows (including the eta-twisted GU entries)",
           ok, detail);
  }

  {  // 10. Relative-character assembly + WS value properties
    bool ok = true;
    std::string detail;
    for (const auto& m : models::catalog()) {
      auto pts = weylsum::sample_points(m, 5, opt.seed + 10);
      for (const auto& pt : pts) {
        std::string why;
        auto rv = weylsum::relchar(m, pt, &why);
        if (!rv) {
          ok = false;
          detail = m.name + ": " + why;
          break;
        }
      }
      // ws_value at t = 0 equals the constant, and the sum is W-invariant
      bool slow = m.datum.weyl_order() > 100000;
      auto v0 = weylsum::ws_value(m, lattice::Weight(std::vector<int>(size_t(m.datum.dim), 0)),
                                  pts[0]);
      auto want = m.expected_constant.eval({}, pts[0].u);
      if (!v0 || !want || *v0 != *want) {
        ok = false;
        detail = m.name + ": ws_value(0) differs from the constant";
      }
      size_t images = slow ? 2 : 20;
      std::mt19937_64 rng(opt.seed + 1010);
      std::uniform_int_distribution<int> pick(0, int(m.datum.simples.size()) - 1);
      std::uniform_int_distribution<int> len(1, 5);
      for (size_t i = 0; i < images && ok; ++i) {
        std::vector<int> word;
        for (int l = len(rng); l > 0; --l) word.push_back(pick(rng));
        auto w = lattice::weyl_from_word(m.datum, word);
        auto v = weylsum::weyl_sum_image(m, &w, pts[0]);
        if (!v || *v != *want) {
          ok = false;
          detail = m.name + ": Weyl image changed the sum";
        }
      }
      if (!ok) break;
    }
    report(10, "both relative-character assemblies agree; WS value W-invariant, constant at 0",
           ok, detail);
  }

  printf("%s\n", failures == 0 ? "acceptance: all criteria hold"
                               : "acceptance: FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
