#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"
#include "relchar/models.hpp"
#include "relchar/verify.hpp"

using namespace relchar;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* p = popen((cmd + " 2>&1").c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
  int rc = pclose(p);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string bin() { return RELCHAR_BIN; }

}  // namespace

TEST_CASE("models list and show") {
  auto l = run(bin() + " models list");
  CHECK(l.status == 0);
  CHECK(l.out.find("GSp6xGSp4") != std::string::npos);
  auto s = run(bin() + " --json models show GSp6xGSp4");
  CHECK(s.status == 0);
  auto j = nlohmann::json::parse(s.out);
  CHECK(j["theta"].size() == 32);
  CHECK(j["theta_plus"].size() == 16);
  CHECK(j["delta_factors"] == "zeta(1)^2 zeta(4) zeta(6)");
  auto e7 = run(bin() + " --json models show E7");
  CHECK(nlohmann::json::parse(e7.out)["theta"].size() == 56);
  auto gu = run(bin() + " models show GU6");
  CHECK(gu.out.find("L(1,eta)") != std::string::npos);
  auto bad = run(bin() + " models show GSp8");
  CHECK(bad.status != 0);
  CHECK(bad.out.find("GSp6xGSp4") != std::string::npos);  // suggestion list
}

TEST_CASE("verify reports are deterministic under a fixed seed") {
  std::string cmd = bin() + " --json verify thetaplus --model trilinear --seed 42";
  auto a = run(cmd), b = run(cmd);
  CHECK(a.status == 0);
  auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  ja.erase("elapsed_ms");
  jb.erase("elapsed_ms");
  CHECK(ja == jb);
  CHECK(ja["failed"] == 0);
}

TEST_CASE("verify exit status reflects failures") {
  auto ok = run(bin() + " verify padic");
  CHECK(ok.status == 0);
  auto bad = run(bin() + " verify nosuchsuite");
  CHECK(bad.status != 0);
}

TEST_CASE("relchar evaluation and pole reporting") {
  auto r = run(bin() + " --json relchar trilinear --q 9 --random --seed 3");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("value"));
  CHECK(j["delta_factors"] == "zeta(1)^3 zeta(2)");
  // constraint violation is reported
  auto c = run(bin() + " relchar GL6 --q 9 --theta 1,1,1,1,1,2");
  CHECK(c.status == 2);
  CHECK(c.out.find("constraint") != std::string::npos);
  // constructed pole: tau with e^{gamma} = u^{-1}
  auto p = run(bin() + " relchar trilinear --q 16 --theta 2,1,1,1,1,1/2");
  CHECK(p.status == 3);
  CHECK(p.out.find("pole") != std::string::npos);
  // WS value at t = 0 equals the constant 1 - q^{-2} = 1 - 1/81
  auto t = run(bin() + " --json relchar trilinear --q 9 --random --seed 5 --t 0,0,0,0,0,0");
  auto jt = nlohmann::json::parse(t.out);
  CHECK(jt["ws_value"] == "80/81");
}

TEST_CASE("catalog override via RELCHAR_CATALOG") {
  std::string path = "relchar_catalog_test.json";
  {
    auto exported = run(bin() + " models export");
    REQUIRE(exported.status == 0);
    std::ofstream f(path);
    f << exported.out;
  }
  auto ok = run("RELCHAR_CATALOG=" + path + " " + bin() + " models list");
  CHECK(ok.status == 0);
  CHECK(ok.out.find("E7") != std::string::npos);
  {
    std::ofstream f(path);
    f << "{\"format\":\"something-else\"}";
  }
  auto bad = run("RELCHAR_CATALOG=" + path + " " + bin() + " models list");
  CHECK(bad.status != 0);
  std::remove(path.c_str());
}
