#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "relchar/matverify.hpp"

using namespace relchar;
using namespace relchar::matverify;

TEST_CASE("FnScalar is a field with involutive conjugation") {
  FnScalar x = FnScalar::var_x(), y = FnScalar::var_y(), sq = FnScalar::sqrt_eps();
  FnScalar a = x + y * sq;
  FnScalar b = FnScalar::konst(Rat(2)) - x * sq;
  CHECK(a * b == b * a);
  CHECK((a + b) * (a - b) == a * a - b * b);
  CHECK(a * a.inverse() == FnScalar::konst(Rat(1)));
  CHECK(a.conj().conj() == a);
  CHECK((a * b).conj() == a.conj() * b.conj());
  CHECK(sq * sq == FnScalar::var_eps());
  // norm lands in the sqrt-free part
  FnScalar n = a * a.conj();
  CHECK(n.b.is_zero());
}

TEST_CASE("membership predicates") {
  GroupForm g6 = gsp_form_w(6);
  FnMat eta = mat_from_int({{1, 0, 0, 0, 0, 0},
                            {0, 1, 0, 0, 0, 0},
                            {0, 0, 1, 0, 0, 0},
                            {0, -1, -1, 1, 0, 0},
                            {-1, 0, -1, 0, 1, 0},
                            {0, -1, 0, 0, 0, 1}});
  auto mem = check_membership(eta, g6);
  CHECK(mem.ok);
  CHECK(mem.factor == FnScalar::konst(Rat(1)));
  // unipotent one-parameter subgroup of -alpha_1
  FnMat x = mat_identity(6);
  x[1][0] = FnScalar::var_x();
  x[5][4] = -FnScalar::var_x();
  auto memx = check_membership(x, g6);
  CHECK(memx.ok);
  CHECK(memx.factor == FnScalar::konst(Rat(1)));
  // generic upper triangular matrix is not symplectic
  FnMat bad = mat_identity(6);
  bad[0][0] = FnScalar::konst(Rat(3));
  bad[1][2] = FnScalar::var_x();
  CHECK(!check_membership(bad, g6).ok);
}

TEST_CASE("GU membership uses the conjugation") {
  GroupForm f2 = gu_form(2);
  FnScalar one = FnScalar::konst(Rat(1));
  // diag(a, conj(a)^{-1} l): take h = [[1, y sqrt(eps)],[0, 1+x]]
  FnMat h = {{one, FnScalar::var_y() * FnScalar::sqrt_eps()},
             {FnScalar::konst(Rat(0)), one + FnScalar::var_x()}};
  auto mem = check_membership(h, f2);
  CHECK(mem.ok);
  CHECK(mem.factor.b.is_zero());
}

TEST_CASE("all displayed decomposition identities verify") {
  size_t identities = 0;
  for (const auto& r : verify_all_identities()) {
    CAPTURE(r.name);
    CHECK(r.pass);
    if (r.name.find(": identity") != std::string::npos ||
        r.name.find("commutes into U") != std::string::npos)
      ++identities;
  }
  CHECK(identities >= 20);
}

TEST_CASE("unimodularity of the open-orbit representatives") {
  for (const auto& r : unimodularity_checks()) {
    CAPTURE(r.name);
    CHECK(r.pass);
  }
}

TEST_CASE("per-root identity dispatch") {
  auto rs = verify_identity("GL4xGL2", "a2");
  CHECK(rs.size() >= 3);
  for (const auto& r : rs) CHECK(r.pass);
  CHECK_THROWS_AS(verify_identity("E7", "a1"), std::out_of_range);
}
