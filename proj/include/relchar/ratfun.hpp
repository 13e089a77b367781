#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relchar/rational.hpp"

namespace relchar::ratfun {

// Exponent key of a Laurent monomial: tau_0..tau_{n-1} exponents followed by
// the exponent of u = q^{-1/2}.  theta_i = tau_i^2, so weights with
// half-integer coordinates are honest monomials here.
using Exps = std::vector<int>;

struct LaurentMono {
  Rat coeff = Rat(1);
  Exps exps;  // length nvars+1, last entry is the u exponent

  LaurentMono() = default;
  LaurentMono(Rat c, Exps e) : coeff(std::move(c)), exps(std::move(e)) {}
  bool is_one() const;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}
  static LaurentPoly constant(int nvars, const Rat& c);
  static LaurentPoly mono(const LaurentMono& m);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Exps, Rat>& terms() const { return terms_; }

  void add_term(const Exps& e, const Rat& c);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  // Largest exponent key in lex order (the "leading monomial" used to pin
  // the normal form); poly must be nonzero.
  const Exps& lead_exps() const;
  const Rat& lead_coeff() const;

  std::optional<Rat> eval(const std::vector<Rat>& tau_vals, const Rat& u_val) const;
  // Restriction to one u-power, as a polynomial in the taus (u exponent 0).
  LaurentPoly u_coefficient(int k) const;
  int u_degree_max() const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_ = 0;
  std::map<Exps, Rat> terms_;
};

// Ratio of Laurent polynomials, normalized so the denominator's leading
// coefficient is 1 and no rational content is shared.  Equality is decided
// by cross multiplication; no polynomial gcd is ever taken.
class RatFun {
 public:
  RatFun() = default;
  RatFun(LaurentPoly num, LaurentPoly den);
  static RatFun constant(int nvars, const Rat& c);
  static RatFun from_poly(LaurentPoly p);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  RatFun operator-() const;
  bool operator==(const RatFun& o) const;

  std::optional<Rat> eval(const std::vector<Rat>& tau_vals, const Rat& u_val) const;
  std::string str(const std::vector<std::string>& names) const;

 private:
  LaurentPoly num_{0};
  LaurentPoly den_ = LaurentPoly::constant(0, Rat(1));
  void normalize();
};

// Sum of the geometric series with ratio m: 1/(1 - m).  Throws if m is the
// constant 1 (divergent series).
RatFun geometric_closed_form(const LaurentMono& m);

// Multiplies the closed form back by (1 - m) and checks the partial sums
// 1 + m + ... + m^N against truncation for N <= depth.
bool geometric_self_test(const LaurentMono& m, int depth = 10);

}  // namespace relchar::ratfun
