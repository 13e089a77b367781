#pragma once

#include <functional>
#include <string>
#include <vector>

#include "relchar/ratfun.hpp"

namespace relchar::matverify {

using ratfun::RatFun;

// Element of Q(x, y, eps)[sqrt(eps)]: the pair a + b sqrt(eps) with eps a
// formal variable.  Conjugation flips the sign of b.
struct FnScalar {
  RatFun a = RatFun::constant(3, Rat(0));
  RatFun b = RatFun::constant(3, Rat(0));

  static FnScalar konst(const Rat& c);
  static FnScalar var_x();
  static FnScalar var_y();
  static FnScalar var_eps();
  static FnScalar sqrt_eps();

  FnScalar operator+(const FnScalar& o) const;
  FnScalar operator-(const FnScalar& o) const;
  FnScalar operator*(const FnScalar& o) const;
  FnScalar operator/(const FnScalar& o) const;
  FnScalar operator-() const;
  bool operator==(const FnScalar& o) const { return a == o.a && b == o.b; }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  FnScalar conj() const;
  FnScalar inverse() const;
  std::string str() const;
};

using FnMat = std::vector<std::vector<FnScalar>>;

FnMat mat_identity(int n);
FnMat mat_mul(const FnMat& a, const FnMat& b);
FnMat mat_from_int(const std::vector<std::vector<int>>& rows);
FnMat mat_inverse(const FnMat& m);  // exact Gaussian elimination
FnMat mat_conj(const FnMat& m);
FnMat mat_transpose(const FnMat& m);
bool mat_equal(const FnMat& a, const FnMat& b);
bool mat_upper_triangular(const FnMat& m);
FnScalar mat_det(const FnMat& m);
bool mat_integer_entries(const FnMat& m);

enum class FormKind { GSp, GSO, GU, GL };

struct GroupForm {
  FormKind kind = FormKind::GL;
  FnMat j;  // defining matrix (ignored for GL)
};

GroupForm gsp_form_w(int n2);          // J = [[0,-w],[w,0]] with w antidiagonal
GroupForm gsp_form_recursive(int n2);  // the recursive J' used by the Whittaker-induced models
GroupForm gso_form(int n4);          // L_{4n}
GroupForm gu_form(int n2);           // antidiagonal w_{2n} with conjugation

// Returns the similitude factor if g^t J g = l J (with conjugation for GU)
// holds identically; empty otherwise with the first violated entry reported.
struct Membership {
  bool ok = false;
  FnScalar factor;
  std::string detail;
};
Membership check_membership(const FnMat& g, const GroupForm& form);

struct IdentityResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The open-orbit decomposition identities of the reductive and GU models
// and the Type-(U,psi) commutations of the Whittaker-induced models, with
// color read-off where the display determines one.
std::vector<IdentityResult> verify_all_identities();

// det = +-1 and integral inverse for the catalog eta matrices.
std::vector<IdentityResult> unimodularity_checks();

// The identity checks for one (model, simple root) pair; throws if no
// identity is cataloged for it.
std::vector<IdentityResult> verify_identity(const std::string& model, const std::string& root);

}  // namespace relchar::matverify
