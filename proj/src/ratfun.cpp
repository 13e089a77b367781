#include "relchar/ratfun.hpp"

#include <algorithm>
#include <sstream>

namespace relchar::ratfun {

bool LaurentMono::is_one() const {
  if (coeff != 1) return false;
  return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

LaurentPoly LaurentPoly::constant(int nvars, const Rat& c) {
  LaurentPoly p(nvars);
  if (c != 0) p.terms_[Exps(size_t(nvars) + 1, 0)] = c;
  return p;
}

LaurentPoly LaurentPoly::mono(const LaurentMono& m) {
  LaurentPoly p(int(m.exps.size()) - 1);
  if (m.coeff != 0) p.terms_[m.exps] = m.coeff;
  return p;
}

void LaurentPoly::add_term(const Exps& e, const Rat& c) {
  if (int(e.size()) != nvars_ + 1) throw std::invalid_argument("exponent arity mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_[e] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("poly arity mismatch");
  LaurentPoly p(*this);
  for (const auto& [e, c] : o.terms_) p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(*this);
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("poly arity mismatch");
  LaurentPoly p(nvars_);
  Exps e(size_t(nvars_) + 1);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      p.add_term(e, c1 * c2);
    }
  return p;
}

const Exps& LaurentPoly::lead_exps() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const Rat& LaurentPoly::lead_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

std::optional<Rat> LaurentPoly::eval(const std::vector<Rat>& tau_vals, const Rat& u_val) const {
  if (int(tau_vals.size()) != nvars_) throw std::invalid_argument("evaluation arity mismatch");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    bool vanishes = false;
    for (int i = 0; i <= nvars_; ++i) {
      int exp = e[size_t(i)];
      if (exp == 0) continue;
      const Rat& v = i < nvars_ ? tau_vals[size_t(i)] : u_val;
      if (v == 0) {
        if (exp < 0) return std::nullopt;  // pole at a zero assignment
        vanishes = true;
        break;
      }
      t *= pow_rat(v, exp);
    }
    if (!vanishes) acc += t;
  }
  return acc;
}

LaurentPoly LaurentPoly::u_coefficient(int k) const {
  LaurentPoly p(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e.back() != k) continue;
    Exps e2 = e;
    e2.back() = 0;
    p.add_term(e2, c);
  }
  return p;
}

int LaurentPoly::u_degree_max() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.back());
  return d;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0)
      os << "-";
    first = false;
    Rat a = abs(c);
    bool any = false;
    std::ostringstream vars;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) vars << "*";
      any = true;
      vars << (i < names.size() ? names[i] : "v" + std::to_string(i));
      if (e[i] != 1) vars << "^" << e[i];
    }
    if (!any) {
      os << rat_str(a);
    } else {
      if (a != 1) os << rat_str(a) << "*";
      os << vars.str();
    }
  }
  return os.str();
}

RatFun::RatFun(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

RatFun RatFun::constant(int nvars, const Rat& c) {
  return RatFun(LaurentPoly::constant(nvars, c), LaurentPoly::constant(nvars, Rat(1)));
}

RatFun RatFun::from_poly(LaurentPoly p) {
  int nv = p.nvars();
  return RatFun(std::move(p), LaurentPoly::constant(nv, Rat(1)));
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(num_.nvars(), Rat(1));
    return;
  }
  Rat lead = den_.lead_coeff();
  if (lead != 1) {
    LaurentPoly n(num_.nvars()), d(num_.nvars());
    for (const auto& [e, c] : num_.terms()) n.add_term(e, c / lead);
    for (const auto& [e, c] : den_.terms()) d.add_term(e, c / lead);
    num_ = std::move(n);
    den_ = std::move(d);
  }
  // strip shared rational content
  Int gn(0), gd(1);
  bool first = true;
  for (const auto* p : {&num_, &den_})
    for (const auto& [e, c] : p->terms()) {
      if (first) {
        gn = c.get_num();
        gd = c.get_den();
        first = false;
      } else {
        mpz_gcd(gn.get_mpz_t(), gn.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(gd.get_mpz_t(), gd.get_mpz_t(), c.get_den().get_mpz_t());
      }
    }
  Rat content(gn, gd);
  content.canonicalize();
  if (content != 1 && content != 0) {
    LaurentPoly n(num_.nvars()), d(num_.nvars());
    for (const auto& [e, c] : num_.terms()) n.add_term(e, c / content);
    for (const auto& [e, c] : den_.terms()) d.add_term(e, c / content);
    // keep the denominator monic after content strip
    RatFun tmp;
    tmp.num_ = std::move(n);
    tmp.den_ = std::move(d);
    Rat l2 = tmp.den_.lead_coeff();
    if (l2 != 1) {
      LaurentPoly n2(num_.nvars()), d2(num_.nvars());
      for (const auto& [e, c] : tmp.num_.terms()) n2.add_term(e, c / l2);
      for (const auto& [e, c] : tmp.den_.terms()) d2.add_term(e, c / l2);
      tmp.num_ = std::move(n2);
      tmp.den_ = std::move(d2);
    }
    num_ = std::move(tmp.num_);
    den_ = std::move(tmp.den_);
  }
}

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
  return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }

RatFun RatFun::operator/(const RatFun& o) const {
  if (o.num_.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::operator-() const {
  RatFun r(*this);
  r.num_ = -r.num_;
  return r;
}

bool RatFun::operator==(const RatFun& o) const { return num_ * o.den_ == o.num_ * den_; }

std::optional<Rat> RatFun::eval(const std::vector<Rat>& tau_vals, const Rat& u_val) const {
  auto d = den_.eval(tau_vals, u_val);
  if (!d || *d == 0) return std::nullopt;
  auto n = num_.eval(tau_vals, u_val);
  if (!n) return std::nullopt;
  return *n / *d;
}

std::string RatFun::str(const std::vector<std::string>& names) const {
  if (den_ == LaurentPoly::constant(num_.nvars(), Rat(1))) return num_.str(names);
  return "(" + num_.str(names) + ") / (" + den_.str(names) + ")";
}

RatFun geometric_closed_form(const LaurentMono& m) {
  if (m.is_one()) throw std::domain_error("geometric series with ratio 1 diverges");
  int nv = int(m.exps.size()) - 1;
  return RatFun(LaurentPoly::constant(nv, Rat(1)),
                LaurentPoly::constant(nv, Rat(1)) - LaurentPoly::mono(m));
}

bool geometric_self_test(const LaurentMono& m, int depth) {
  RatFun closed = geometric_closed_form(m);
  int nv = int(m.exps.size()) - 1;
  LaurentPoly partial = LaurentPoly::constant(nv, Rat(0));
  LaurentPoly power = LaurentPoly::constant(nv, Rat(1));
  LaurentPoly ratio = LaurentPoly::mono(m);
  for (int n = 0; n <= depth; ++n) {
    partial = partial + power;
    power = power * ratio;
    // closed*(1 - m^{n+1}) must equal the partial sum
    LaurentPoly lhs = closed.num() * (LaurentPoly::constant(nv, Rat(1)) - power);
    LaurentPoly rhs = partial * closed.den();
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace relchar::ratfun
