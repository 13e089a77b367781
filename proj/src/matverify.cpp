#include "relchar/matverify.hpp"

#include <sstream>

#include "relchar/models.hpp"

namespace relchar::matverify {

using ratfun::LaurentPoly;

namespace {

// vars: x = 0, y = 1, eps = 2 (the u slot stays 0)
RatFun rf_mono(int ex, int ey, int ee, const Rat& c) {
  LaurentPoly p(3);
  p.add_term({ex, ey, ee, 0}, c);
  return RatFun::from_poly(p);
}

const RatFun& rf_zero() {
  static RatFun z = RatFun::constant(3, Rat(0));
  return z;
}

}  // namespace

FnScalar FnScalar::konst(const Rat& c) { return {RatFun::constant(3, c), rf_zero()}; }
FnScalar FnScalar::var_x() { return {rf_mono(1, 0, 0, Rat(1)), rf_zero()}; }
FnScalar FnScalar::var_y() { return {rf_mono(0, 1, 0, Rat(1)), rf_zero()}; }
FnScalar FnScalar::var_eps() { return {rf_mono(0, 0, 1, Rat(1)), rf_zero()}; }
FnScalar FnScalar::sqrt_eps() { return {rf_zero(), RatFun::constant(3, Rat(1))}; }

FnScalar FnScalar::operator+(const FnScalar& o) const { return {a + o.a, b + o.b}; }
FnScalar FnScalar::operator-(const FnScalar& o) const { return {a - o.a, b - o.b}; }
FnScalar FnScalar::operator-() const { return {-a, -b}; }
FnScalar FnScalar::operator*(const FnScalar& o) const {
  RatFun eps = rf_mono(0, 0, 1, Rat(1));
  return {a * o.a + eps * b * o.b, a * o.b + b * o.a};
}
FnScalar FnScalar::conj() const { return {a, -b}; }
FnScalar FnScalar::inverse() const {
  RatFun eps = rf_mono(0, 0, 1, Rat(1));
  RatFun norm = a * a - eps * b * b;
  if (norm.is_zero()) throw std::domain_error("inverse of zero norm element");
  return {a / norm, -b / norm};
}
FnScalar FnScalar::operator/(const FnScalar& o) const { return *this * o.inverse(); }
std::string FnScalar::str() const {
  std::vector<std::string> names{"x", "y", "eps", "u"};
  if (b.is_zero()) return a.str(names);
  return "(" + a.str(names) + ") + (" + b.str(names) + ")*sqrt(eps)";
}

FnMat mat_identity(int n) {
  FnMat m(size_t(n), std::vector<FnScalar>(size_t(n), FnScalar::konst(Rat(0))));
  for (int i = 0; i < n; ++i) m[size_t(i)][size_t(i)] = FnScalar::konst(Rat(1));
  return m;
}

FnMat mat_from_int(const std::vector<std::vector<int>>& rows) {
  FnMat m;
  for (const auto& r : rows) {
    std::vector<FnScalar> row;
    for (int v : r) row.push_back(FnScalar::konst(Rat(v)));
    m.push_back(std::move(row));
  }
  return m;
}

FnMat mat_mul(const FnMat& a, const FnMat& b) {
  size_t n = a.size(), k = b.size(), c = b[0].size();
  FnMat m(n, std::vector<FnScalar>(c, FnScalar::konst(Rat(0))));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j].is_zero()) continue;
      for (size_t l = 0; l < c; ++l)
        if (!b[j][l].is_zero()) m[i][l] = m[i][l] + a[i][j] * b[j][l];
    }
  return m;
}

FnMat mat_transpose(const FnMat& a) {
  size_t n = a.size(), c = a[0].size();
  FnMat m(c, std::vector<FnScalar>(n, FnScalar::konst(Rat(0))));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < c; ++j) m[j][i] = a[i][j];
  return m;
}

FnMat mat_conj(const FnMat& a) {
  FnMat m = a;
  for (auto& row : m)
    for (auto& e : row) e = e.conj();
  return m;
}

bool mat_equal(const FnMat& a, const FnMat& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  }
  return true;
}

bool mat_upper_triangular(const FnMat& m) {
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (!m[i][j].is_zero()) return false;
  return true;
}

FnMat mat_inverse(const FnMat& m) {
  size_t n = m.size();
  FnMat a = m, inv = mat_identity(int(n));
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    FnScalar p = a[c][c].inverse();
    for (size_t j = 0; j < n; ++j) {
      a[c][j] = a[c][j] * p;
      inv[c][j] = inv[c][j] * p;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      FnScalar f = a[r][c];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] = a[r][j] - f * a[c][j];
        inv[r][j] = inv[r][j] - f * inv[c][j];
      }
    }
  }
  return inv;
}

FnScalar mat_det(const FnMat& m) {
  size_t n = m.size();
  FnMat a = m;
  FnScalar d = FnScalar::konst(Rat(1));
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return FnScalar::konst(Rat(0));
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = -d;
    }
    d = d * a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      FnScalar f = a[r][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[r][j] = a[r][j] - f * a[c][j];
    }
  }
  return d;
}

bool mat_integer_entries(const FnMat& m) {
  for (const auto& row : m)
    for (const auto& e : row) {
      if (!e.b.is_zero()) return false;
      if (e.a.is_zero()) continue;
      const auto& num = e.a.num();
      const auto& den = e.a.den();
      if (den.term_count() != 1 || num.term_count() > 1) return false;
      for (const auto& [exps, c] : num.terms()) {
        for (int x : exps)
          if (x != 0) return false;
        Rat v = c / den.lead_coeff();
        if (v.get_den() != 1) return false;
      }
    }
  return true;
}

GroupForm gsp_form_w(int n2) {
  int n = n2 / 2;
  std::vector<std::vector<int>> j(size_t(n2), std::vector<int>(size_t(n2), 0));
  for (int i = 0; i < n; ++i) {
    j[size_t(i)][size_t(n2 - 1 - i)] = -1;  // -w_n block
    j[size_t(n + i)][size_t(n - 1 - i)] = 1; // w_n block
  }
  return {FormKind::GSp, mat_from_int(j)};
}

GroupForm gsp_form_recursive(int n2) {
  // J'_2 = [[0,-1],[1,0]], J'_{2n} = [[0, J'_{2n-2}], [J'_2, 0]]
  std::vector<std::vector<int>> j(size_t(n2), std::vector<int>(size_t(n2), 0));
  std::function<void(int, int, int)> fill = [&](int r0, int c0, int size) {
    if (size == 2) {
      j[size_t(r0)][size_t(c0 + 1)] = -1;
      j[size_t(r0 + 1)][size_t(c0)] = 1;
      return;
    }
    fill(r0, c0 + 2, size - 2);          // J'_{2n-2} in the top right
    j[size_t(r0 + size - 2)][size_t(c0 + 1)] = -1;  // J'_2 bottom left
    j[size_t(r0 + size - 1)][size_t(c0)] = 1;
  };
  fill(0, 0, n2);
  return {FormKind::GSp, mat_from_int(j)};
}

GroupForm gso_form(int n4) {
  // L_4 = [[0, J'], [-J', 0]], L_{4n} = [[0,0,J'],[0,L_{4n-4},0],[-J',0,0]]
  std::vector<std::vector<int>> l(size_t(n4), std::vector<int>(size_t(n4), 0));
  std::function<void(int, int)> fill = [&](int off, int size) {
    if (size == 4) {
      l[size_t(off)][size_t(off + 3)] = -1;
      l[size_t(off + 1)][size_t(off + 2)] = 1;
      l[size_t(off + 2)][size_t(off + 1)] = 1;
      l[size_t(off + 3)][size_t(off)] = -1;
      return;
    }
    l[size_t(off)][size_t(off + size - 1)] = -1;
    l[size_t(off + 1)][size_t(off + size - 2)] = 1;
    l[size_t(off + size - 2)][size_t(off + 1)] = 1;
    l[size_t(off + size - 1)][size_t(off)] = -1;
    fill(off + 2, size - 4);
  };
  fill(0, n4);
  return {FormKind::GSO, mat_from_int(l)};
}

GroupForm gu_form(int n2) {
  std::vector<std::vector<int>> w(size_t(n2), std::vector<int>(size_t(n2), 0));
  for (int i = 0; i < n2; ++i) w[size_t(i)][size_t(n2 - 1 - i)] = 1;
  return {FormKind::GU, mat_from_int(w)};
}

Membership check_membership(const FnMat& g, const GroupForm& form) {
  Membership res;
  if (form.kind == FormKind::GL) {
    if (mat_det(g).is_zero()) {
      res.detail = "singular";
      return res;
    }
    res.ok = true;
    res.factor = FnScalar::konst(Rat(1));
    return res;
  }
  FnMat left = mat_transpose(form.kind == FormKind::GU ? mat_conj(g) : g);
  FnMat gjg = mat_mul(mat_mul(left, form.j), g);
  size_t n = g.size();
  // similitude factor from the first nonzero entry of J
  FnScalar l;
  bool found = false;
  for (size_t i = 0; i < n && !found; ++i)
    for (size_t j = 0; j < n && !found; ++j)
      if (!form.j[i][j].is_zero()) {
        l = gjg[i][j] / form.j[i][j];
        found = true;
      }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!(gjg[i][j] == l * form.j[i][j])) {
        std::ostringstream os;
        os << "similitude relation fails at entry (" << i << "," << j << ")";
        res.detail = os.str();
        return res;
      }
  if (form.kind == FormKind::GU && !l.b.is_zero()) {
    res.detail = "similitude factor not fixed by conjugation";
    return res;
  }
  res.ok = true;
  res.factor = l;
  return res;
}

namespace {

using models::ModelSpec;

FnScalar C(long v) { return FnScalar::konst(Rat(v)); }
FnScalar Cr(const Rat& v) { return FnScalar::konst(v); }

FnMat zmat(int n) {
  return FnMat(size_t(n), std::vector<FnScalar>(size_t(n), FnScalar::konst(Rat(0))));
}

FnMat diag_blocks(const std::vector<FnMat>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += int(b.size());
  FnMat m = zmat(n);
  int off = 0;
  for (const auto& b : blocks) {
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) m[size_t(off) + i][size_t(off) + j] = b[i][j];
    off += int(b.size());
  }
  return m;
}

FnMat antidiag_blocks(int nblocks, int bs) {
  FnMat m = zmat(nblocks * bs);
  for (int b = 0; b < nblocks; ++b)
    for (int i = 0; i < bs; ++i)
      m[size_t(b * bs + i)][size_t((nblocks - 1 - b) * bs + i)] = C(1);
  return m;
}

// exponent of the linear factor f in a diagonal entry: entry == sign * f^k
std::optional<int> factor_exponent(const FnScalar& e, const FnScalar& f) {
  if (!e.b.is_zero()) return std::nullopt;
  for (int k = -4; k <= 4; ++k) {
    FnScalar fk = C(1);
    for (int i = 0; i < std::abs(k); ++i) fk = k > 0 ? fk * f : fk / f;
    if (e == fk || e == -fk) return k;
  }
  return std::nullopt;
}

// Reads the torus exponents (of the factor f) off the Borel part diag
// entries listed in `positions`, negates, and matches the catalog color up
// to a rational multiple of the model's central direction.
IdentityResult check_color(const std::string& label, const ModelSpec& m, size_t root_index,
                           const std::vector<FnScalar>& diag, const FnScalar& f) {
  IdentityResult r{label + ": color read", false, ""};
  const auto& beta = m.root_data[root_index].color;
  if (!beta) {
    r.detail = "no catalog color";
    return r;
  }
  std::vector<Rat> mu;
  for (const auto& e : diag) {
    auto k = factor_exponent(e, f);
    if (!k) {
      r.detail = "diagonal entry is not a power of the factor";
      return r;
    }
    mu.push_back(Rat(*k));
  }
  // beta = -mu + c * (1,...,1): solve c from the first coordinate
  Rat c = Rat(beta->coords[0], 2) + mu[0];
  for (size_t i = 0; i < mu.size(); ++i) {
    if (Rat(beta->coords[i], 2) != -mu[i] + c) {
      r.detail = "read color differs from catalog";
      return r;
    }
  }
  r.pass = true;
  r.detail = "beta = " + beta->str() + " (central shift " + rat_str(c) + ")";
  return r;
}

struct Ctx {
  std::vector<IdentityResult> out;
  void add(IdentityResult r) { out.push_back(std::move(r)); }
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    out.push_back({name, ok, detail});
  }
};

FnMat lower_elem(int n, int r, int c, const FnScalar& v) {  // 1-based slots
  FnMat m = mat_identity(n);
  m[size_t(r - 1)][size_t(c - 1)] = v;
  return m;
}

// --- trilinear GL2 ------------------------------------------------------

void trilinear_checks(Ctx& ctx) {
  const auto& model = models::model("trilinear");
  FnScalar X = FnScalar::var_x(), one = C(1);
  FnMat s = mat_from_int({{0, 1}, {1, 0}});
  FnMat sn = mat_from_int({{0, 1}, {1, 1}});
  std::vector<FnMat> eta = {mat_identity(2), s, sn};
  struct Case {
    size_t root;
    int factor_sign;  // f = 1 + sign*x
    std::vector<FnMat> b;
    FnMat h;
    std::vector<FnMat> lhs;
  };
  FnScalar fm = one - X, fp = one + X;
  std::vector<Case> cases;
  {  // alpha_1: factor 1 - x
    Case c;
    c.root = 0;
    c.factor_sign = -1;
    c.b = {FnMat{{one / fm, C(0)}, {C(0), one}}, FnMat{{one, -X / fm}, {C(0), one / fm}},
           FnMat{{one / fm, -X / fm}, {C(0), one}}};
    c.h = FnMat{{fm, C(0)}, {X, one}};
    c.lhs = {FnMat{{one, C(0)}, {X, one}}, mat_identity(2), mat_identity(2)};
    cases.push_back(std::move(c));
  }
  {  // alpha_2
    Case c;
    c.root = 1;
    c.factor_sign = -1;
    c.b = {FnMat{{one, -X / fm}, {C(0), one / fm}}, FnMat{{one / fm, C(0)}, {C(0), one}},
           FnMat{{one / fm, C(0)}, {C(0), one}}};
    c.h = FnMat{{one, X}, {C(0), fm}};
    c.lhs = {mat_identity(2), FnMat{{one, C(0)}, {X, one}}, mat_identity(2)};
    cases.push_back(std::move(c));
  }
  {  // alpha_3: factor 1 + x
    Case c;
    c.root = 2;
    c.factor_sign = 1;
    c.b = {FnMat{{one, C(0)}, {C(0), one / fp}}, FnMat{{one / fp, C(0)}, {C(0), one}},
           FnMat{{one / fp, C(0)}, {C(0), one}}};
    c.h = FnMat{{one, C(0)}, {C(0), fp}};
    c.lhs = {mat_identity(2), mat_identity(2), FnMat{{one, C(0)}, {X, one}}};
    cases.push_back(std::move(c));
  }
  for (const auto& c : cases) {
    std::string nm = "trilinear " + model.root_data[c.root].name;
    bool eq = true, upper = true;
    for (int f = 0; f < 3; ++f) {
      FnMat lhs = mat_mul(c.lhs[size_t(f)], eta[size_t(f)]);
      FnMat rhs = mat_mul(mat_mul(c.b[size_t(f)], eta[size_t(f)]), c.h);
      if (!mat_equal(lhs, rhs)) eq = false;
      if (!mat_upper_triangular(c.b[size_t(f)])) upper = false;
    }
    ctx.check(nm + ": identity", eq);
    ctx.check(nm + ": Borel membership", upper);
    ctx.check(nm + ": H membership", !mat_det(c.h).is_zero());
    std::vector<FnScalar> diag;
    for (int f = 0; f < 3; ++f)
      for (int i = 0; i < 2; ++i) diag.push_back(c.b[size_t(f)][size_t(i)][size_t(i)]);
    FnScalar fac = c.factor_sign > 0 ? fp : fm;
    ctx.add(check_color(nm, model, c.root, diag, fac));
  }
}

// --- GSp6 x GSp4 ----------------------------------------------------------

void gsp6gsp4_checks(Ctx& ctx) {
  const auto& model = models::model("GSp6xGSp4");
  FnScalar X = FnScalar::var_x(), one = C(1);
  GroupForm g6 = gsp_form_w(6), g4 = gsp_form_w(4), g2 = gsp_form_w(2);
  FnMat eta = mat_from_int({{1, 0, 0, 0, 0, 0},
                            {0, 1, 0, 0, 0, 0},
                            {0, 0, 1, 0, 0, 0},
                            {0, -1, -1, 1, 0, 0},
                            {-1, 0, -1, 0, 1, 0},
                            {0, -1, 0, 0, 0, 1}});
  ctx.check("GSp6xGSp4 eta: GSp6 membership", check_membership(eta, g6).ok);
  FnScalar fp = one + X, fm = one - X;

  auto h_embed_ok = [&](const FnMat& g, const FnMat& h) {
    // g = [[a,0,b],[0,h,0],[c,0,d]] with [[a,b],[c,d]] in GSp2, l matching h
    for (size_t i = 1; i <= 4; ++i)
      for (size_t j = 1; j <= 4; ++j)
        if (!(g[i][j] == h[i - 1][j - 1])) return false;
    for (size_t k = 1; k <= 4; ++k)
      if (!g[0][k].is_zero() || !g[5][k].is_zero() || !g[k][0].is_zero() || !g[k][5].is_zero())
        return false;
    FnMat h2 = {{g[0][0], g[0][5]}, {g[5][0], g[5][5]}};
    auto m2 = check_membership(h2, g2);
    auto m4 = check_membership(h, g4);
    return m2.ok && m4.ok && m2.factor == m4.factor;
  };

  auto run_pair_case = [&](const std::string& nm, size_t root, const FnMat& lhs6, const FnMat& b,
                           const FnMat& g, const FnMat& h, const FnScalar& factor) {
    FnMat rhs = mat_mul(mat_mul(b, eta), g);
    ctx.check(nm + ": identity", mat_equal(lhs6, rhs));
    auto bm = check_membership(b, g6);
    ctx.check(nm + ": Borel membership", bm.ok && mat_upper_triangular(b));
    ctx.check(nm + ": H membership", h_embed_ok(g, h) && check_membership(g, g6).ok);
    std::vector<FnScalar> diag{b[0][0], b[1][1], b[2][2]};
    FnMat hinv = mat_inverse(h);
    diag.push_back(hinv[0][0]);
    diag.push_back(hinv[1][1]);
    ctx.add(check_color(nm, model, root, diag, factor));
  };

  {  // alpha_1
    FnMat x = lower_elem(6, 2, 1, X);
    x[5][4] = -X;
    FnMat g = zmat(6);
    g[0][0] = one;
    g[1][1] = one / fp;
    g[1][2] = -X / fp;
    g[1][4] = X / fp;
    g[2][2] = one;
    g[3][3] = one / fp;
    g[3][4] = X / fp;
    g[4][4] = one;
    g[5][0] = X / fp;
    g[5][5] = one / fp;
    FnMat h = zmat(4);
    h[0][0] = one / fp;
    h[0][1] = -X / fp;
    h[0][3] = X / fp;
    h[1][1] = one;
    h[2][2] = one / fp;
    h[2][3] = X / fp;
    h[3][3] = one;
    FnMat b = zmat(6);
    b[0][0] = one;
    b[1][1] = fp;
    b[1][4] = -X;
    b[2][2] = one;
    b[3][3] = fp;
    b[4][4] = one;
    b[5][5] = fp;
    run_pair_case("GSp6xGSp4 a1", 0, mat_mul(x, eta), b, g, h, fp);
  }
  {  // alpha_2
    FnMat x = lower_elem(6, 3, 2, X);
    x[4][3] = -X;
    FnMat g = zmat(6);
    g[0][0] = one / fm;
    g[0][5] = -X / fm;
    g[1][1] = one;
    g[2][2] = one;
    g[2][3] = X / fm;
    g[3][3] = one / fm;
    g[4][4] = one / fm;
    g[5][5] = one;
    FnMat h = zmat(4);
    h[0][0] = one;
    h[1][1] = one;
    h[1][2] = X / fm;
    h[2][2] = one / fm;
    h[3][3] = one / fm;
    FnMat b = zmat(6);
    b[0][0] = fm;
    b[0][1] = X;
    b[0][5] = X;
    b[1][1] = one;
    b[2][2] = fm;
    b[2][3] = -X;
    b[3][3] = one;
    b[4][4] = fm;
    b[4][5] = -X;
    b[5][5] = one;
    run_pair_case("GSp6xGSp4 a2", 1, mat_mul(x, eta), b, g, h, fm);
  }
  {  // alpha_3: conjugation form (g,h) in B cap H
    FnMat x = lower_elem(6, 4, 3, X);
    FnMat g = diag_blocks({FnMat{{one}}, FnMat{{fm}}, FnMat{{one}}, FnMat{{fm}}, FnMat{{one}},
                           FnMat{{fm}}});
    FnMat h = diag_blocks({FnMat{{fm}}, FnMat{{one}}, FnMat{{fm}}, FnMat{{one}}});
    FnMat lhs = mat_mul(x, eta);
    FnMat rhs = mat_mul(mat_mul(g, eta), mat_inverse(g));
    ctx.check("GSp6xGSp4 a3: identity", mat_equal(lhs, rhs));
    ctx.check("GSp6xGSp4 a3: Borel membership",
              check_membership(g, g6).ok && mat_upper_triangular(g));
    ctx.check("GSp6xGSp4 a3: H membership", h_embed_ok(g, h));
    std::vector<FnScalar> diag{g[0][0], g[1][1], g[2][2], h[0][0], h[1][1]};
    ctx.add(check_color("GSp6xGSp4 a3", model, 2, diag, fm));
  }
  {  // alpha_1': eta x_{-alpha_2}(-x) on the left
    FnMat x = lower_elem(6, 3, 2, -X);
    x[4][3] = X;
    FnMat g = zmat(6);
    g[0][0] = one / fm;
    g[0][5] = -X / fm;
    g[1][1] = one;
    g[2][2] = one / fm;
    g[2][3] = -X / fm;
    g[3][3] = one;
    g[4][4] = one / fm;
    g[5][5] = one;
    FnMat h = zmat(4);
    h[0][0] = one;
    h[1][1] = one / fm;
    h[1][2] = -X / fm;
    h[2][2] = one;
    h[3][3] = one / fm;
    FnMat b = zmat(6);
    b[0][0] = fm;
    b[0][1] = X;
    b[0][5] = X;
    b[1][1] = one;
    b[2][2] = one;
    b[2][3] = X;
    b[3][3] = fm;
    b[4][4] = fm;
    b[4][5] = -X;
    b[5][5] = one;
    run_pair_case("GSp6xGSp4 a1'", 3, mat_mul(eta, x), b, g, h, fm);
  }
  {  // alpha_2': eta x_{-alpha_3}(-x), conjugation form
    FnMat x = lower_elem(6, 4, 3, -X);
    FnMat g = diag_blocks({FnMat{{one}}, FnMat{{fp}}, FnMat{{one}}, FnMat{{fp}}, FnMat{{one}},
                           FnMat{{fp}}});
    FnMat h = diag_blocks({FnMat{{fp}}, FnMat{{one}}, FnMat{{fp}}, FnMat{{one}}});
    FnMat lhs = mat_mul(eta, x);
    FnMat rhs = mat_mul(mat_mul(g, eta), mat_inverse(g));
    ctx.check("GSp6xGSp4 a2': identity", mat_equal(lhs, rhs));
    ctx.check("GSp6xGSp4 a2': Borel membership",
              check_membership(g, g6).ok && mat_upper_triangular(g));
    ctx.check("GSp6xGSp4 a2': H membership", h_embed_ok(g, h));
    std::vector<FnScalar> diag{g[0][0], g[1][1], g[2][2], h[0][0], h[1][1]};
    ctx.add(check_color("GSp6xGSp4 a2'", model, 4, diag, fp));
  }
  {  // negative control: upper triangular but not symplectic
    FnMat bad = mat_identity(6);
    bad[0][1] = one;
    bad[0][0] = C(2);
    ctx.check("GSp6xGSp4 negative control: non-member rejected",
              !check_membership(bad, g6).ok);
  }
}

// --- GL4 x GL2 ------------------------------------------------------------

void gl4gl2_checks(Ctx& ctx) {
  const auto& model = models::model("GL4xGL2");
  FnScalar X = FnScalar::var_x(), one = C(1);
  FnMat eta = mat_from_int({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, -1, 1, 0}, {-1, 1, -1, 1}});
  FnScalar fp = one + X, fm = one - X;

  auto run_case = [&](const std::string& nm, size_t root, const FnMat& lhs, const FnMat& b,
                      const FnMat& g, const FnMat& h, const FnScalar& factor) {
    FnMat rhs = mat_mul(mat_mul(b, eta), g);
    ctx.check(nm + ": identity", mat_equal(lhs, rhs));
    ctx.check(nm + ": Borel membership", mat_upper_triangular(b) && !mat_det(b).is_zero());
    // H = {(diag(a,h), h)}: block pattern with the lower block equal to h
    bool hmem = true;
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j) {
        if (!(g[2 + i][2 + j] == h[i][j])) hmem = false;
        if (!g[i][2 + j].is_zero() || !g[2 + i][j].is_zero()) hmem = false;
      }
    ctx.check(nm + ": H membership", hmem && !mat_det(g).is_zero());
    FnMat hinv = mat_inverse(h);
    std::vector<FnScalar> diag{b[0][0], b[1][1], b[2][2], b[3][3], hinv[0][0], hinv[1][1]};
    ctx.add(check_color(nm, model, root, diag, factor));
  };

  {  // alpha_1
    FnMat g = zmat(4);
    g[0][0] = one;
    g[1][0] = X / fp;
    g[1][1] = one / fp;
    g[2][2] = one / fp;
    g[2][3] = X / fp;
    g[3][3] = one;
    FnMat h = FnMat{{one / fp, X / fp}, {C(0), one}};
    FnMat b = zmat(4);
    b[0][0] = one;
    b[1][1] = fp;
    b[2][2] = one;
    b[2][3] = -X;
    b[3][3] = fp;
    run_case("GL4xGL2 a1", 0, mat_mul(lower_elem(4, 2, 1, X), eta), b, g, h, fp);
  }
  {  // alpha_2
    FnMat g = zmat(4);
    g[0][0] = one / fm;
    g[0][1] = -X / fm;
    g[1][1] = one;
    g[2][2] = one / fm;
    g[3][3] = one / fm;
    FnMat h = FnMat{{one / fm, C(0)}, {C(0), one / fm}};
    FnMat b = zmat(4);
    b[0][0] = fm;
    b[0][1] = X;
    b[1][1] = one;
    b[2][2] = fm;
    b[3][3] = fm;
    run_case("GL4xGL2 a2", 1, mat_mul(lower_elem(4, 3, 2, X), eta), b, g, h, fm);
  }
  {  // alpha_3
    FnMat g = zmat(4);
    g[0][0] = one / fm;
    g[1][1] = one;
    g[2][2] = one;
    g[3][3] = one / fm;
    FnMat h = FnMat{{one, C(0)}, {C(0), one / fm}};
    FnMat b = zmat(4);
    b[0][0] = fm;
    b[1][1] = one;
    b[2][2] = one;
    b[3][3] = fm;
    run_case("GL4xGL2 a3", 2, mat_mul(lower_elem(4, 4, 3, X), eta), b, g, h, fm);
  }
  {  // alpha': eta x_{-alpha_3}(-x)
    FnMat g = zmat(4);
    g[0][0] = one / fp;
    g[0][1] = X / fp;
    g[1][1] = one;
    g[2][2] = one;
    g[3][3] = one / fp;
    FnMat h = FnMat{{one, C(0)}, {C(0), one / fp}};
    FnMat b = zmat(4);
    b[0][0] = fp;
    b[0][1] = -X;
    b[1][1] = one;
    b[2][2] = one;
    b[3][3] = fp;
    run_case("GL4xGL2 a'", 3, mat_mul(eta, lower_elem(4, 4, 3, -X)), b, g, h, fp);
  }
}

// --- Type-(U,psi) commutation checks --------------------------------------

// x_{-alpha}(a) = I + a (E_{rc} + t E_{r'c'}) with t solved from the Lie
// algebra condition X^t J + J X = 0 and verified on every entry.
FnMat lower_root_matrix(const GroupForm& form, int n, int r, int c) {
  int r2 = n + 1 - c, c2 = n + 1 - r;
  FnScalar X = FnScalar::var_x();
  // constant entries of J as exact rationals
  auto jat = [&](int i, int j) {
    const FnScalar& e = form.j[size_t(i)][size_t(j)];
    if (e.is_zero()) return Rat(0);
    Rat v(0);
    for (const auto& [ex, co] : e.a.num().terms()) v = co / e.a.den().lead_coeff();
    return v;
  };
  // (E_{cr} J + J E_{rc}) entries, 0-based slots
  auto contribution = [&](int rr, int cc) {
    std::vector<std::vector<Rat>> m(size_t(n), std::vector<Rat>(size_t(n), Rat(0)));
    for (int j = 0; j < n; ++j) {
      m[size_t(cc)][size_t(j)] += jat(rr, j);
      m[size_t(j)][size_t(cc)] += jat(j, rr);
    }
    return m;
  };
  if (r2 == r && c2 == c) {
    auto m0 = contribution(r - 1, c - 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m0[size_t(i)][size_t(j)] != 0) throw std::domain_error("slot is not a root space");
    return lower_elem(n, r, c, X);
  }
  auto m0 = contribution(r - 1, c - 1), m1 = contribution(r2 - 1, c2 - 1);
  std::optional<Rat> t;
  for (int i = 0; i < n && !t; ++i)
    for (int j = 0; j < n && !t; ++j)
      if (m1[size_t(i)][size_t(j)] != 0) t = -m0[size_t(i)][size_t(j)] / m1[size_t(i)][size_t(j)];
  if (!t) throw std::domain_error("degenerate root slot");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m0[size_t(i)][size_t(j)] + *t * m1[size_t(i)][size_t(j)] != 0)
        throw std::domain_error("root slot equations are inconsistent");
  FnMat x = mat_identity(n);
  x[size_t(r - 1)][size_t(c - 1)] = X;
  x[size_t(r2 - 1)][size_t(c2 - 1)] = Cr(*t) * X;
  return x;
}

// block-upper-unipotent in 2x2 blocks, and the sum of the traces of the
// designated superdiagonal blocks
struct UnipotentRead {
  bool ok = false;
  FnScalar lambda;
};

UnipotentRead read_unipotent(const FnMat& u, const std::vector<std::pair<int, int>>& lambda_blocks) {
  UnipotentRead res;
  int n = int(u.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int bi = i / 2, bj = j / 2;
      if (bi == bj) {
        if (!(u[size_t(i)][size_t(j)] == (i == j ? C(1) : C(0)))) return res;
      } else if (bi > bj) {
        if (!u[size_t(i)][size_t(j)].is_zero()) return res;
      }
    }
  res.lambda = C(0);
  for (auto [bi, bj] : lambda_blocks)
    res.lambda = res.lambda + u[size_t(2 * bi)][size_t(2 * bj)] + u[size_t(2 * bi + 1)][size_t(2 * bj + 1)];
  res.ok = true;
  return res;
}

void commutation_check(Ctx& ctx, const std::string& nm, const GroupForm& form, const FnMat& eta,
                       int r, int cc0, const std::vector<std::pair<int, int>>& lambda_blocks,
                       bool eta_membership = true) {
  int c = cc0;
  int n = int(eta.size());
  if (eta_membership)
    ctx.check(nm + ": eta membership", check_membership(eta, form).ok);
  FnMat x = lower_root_matrix(form, n, r, c);
  ctx.check(nm + ": root matrix in G", check_membership(x, form).ok);
  FnMat u = mat_mul(mat_mul(mat_inverse(eta), x), eta);
  auto read = read_unipotent(u, lambda_blocks);
  // lambda(u) must be a p-adic-unit multiple of a (p != 2 throughout)
  bool lam_ok = false;
  std::string cs;
  if (read.ok)
    for (int c : {1, -1, 2, -2})
      if (read.lambda == FnScalar::konst(Rat(c)) * FnScalar::var_x()) {
        lam_ok = true;
        cs = "lambda = " + std::to_string(c) + "a";
      }
  ctx.check(nm + ": commutes into U with unit lambda", read.ok && lam_ok,
            read.ok ? cs : "image not block-unipotent");
}

void section8_checks(Ctx& ctx) {
  FnMat s = mat_from_int({{0, 1}, {1, 0}});
  FnMat sn = mat_from_int({{0, 1}, {1, 1}});
  FnMat i2 = mat_identity(2);
  FnMat mi2 = mat_from_int({{-1, 0}, {0, -1}});
  {  // GL6: the Ginzburg-Rallis commutations
    GroupForm gl{FormKind::GL, {}};
    FnMat eta = mat_mul(diag_blocks({i2, s, sn}), antidiag_blocks(3, 2));
    FnMat x2 = lower_elem(6, 3, 2, FnScalar::var_x());
    FnMat u = mat_mul(mat_mul(mat_inverse(eta), x2), eta);
    auto rd = read_unipotent(u, {{0, 1}, {1, 2}});
    ctx.check("GL6 a2: commutes into U with lambda = +-a",
              rd.ok && (rd.lambda == FnScalar::var_x() || rd.lambda == -FnScalar::var_x()));
    FnMat x4 = lower_elem(6, 5, 4, FnScalar::var_x());
    FnMat u4 = mat_mul(mat_mul(mat_inverse(eta), x4), eta);
    auto rd4 = read_unipotent(u4, {{0, 1}, {1, 2}});
    ctx.check("GL6 a4: commutes into U with lambda = +-a",
              rd4.ok && (rd4.lambda == FnScalar::var_x() || rd4.lambda == -FnScalar::var_x()));
    // the expected unipotent images
    FnMat want2 = mat_identity(6);
    want2[2][4] = C(0);
    want2[3][5] = FnScalar::var_x();
    ctx.check("GL6 a2: displayed image", mat_equal(u, want2));
    FnMat want4 = mat_identity(6);
    want4[0][2] = -FnScalar::var_x();
    want4[1][2] = FnScalar::var_x();
    ctx.check("GL6 a4: displayed image", mat_equal(u4, want4));
    (void)gl;
  }
  {  // GSp10
    GroupForm f = gsp_form_recursive(10);
    FnMat eta = mat_mul(diag_blocks({i2, s, sn, s, mi2}), antidiag_blocks(5, 2));
    commutation_check(ctx, "GSp10 a2", f, eta, 3, 2, {{0, 1}, {1, 2}});
    commutation_check(ctx, "GSp10 a4", f, eta, 5, 4, {{0, 1}, {1, 2}});
  }
  {  // GSp6 x GL2 (the GSp6 factor carries U)
    GroupForm f = gsp_form_recursive(6);
    FnMat eta = mat_mul(diag_blocks({i2, s, mi2}), antidiag_blocks(3, 2));
    commutation_check(ctx, "GSp6xGL2 a2", f, eta, 3, 2, {{0, 1}});
  }
  {  // GSO12
    GroupForm f = gso_form(12);
    FnMat b4 = mat_from_int({{0, -1}, {-1, -1}});
    FnMat ms = mat_from_int({{0, -1}, {-1, 0}});
    FnMat eta = mat_mul(diag_blocks({i2, s, sn, b4, ms, i2}), antidiag_blocks(6, 2));
    commutation_check(ctx, "GSO12 a2", f, eta, 3, 2, {{0, 1}, {1, 2}, {2, 3}});
    commutation_check(ctx, "GSO12 a4", f, eta, 5, 4, {{0, 1}, {1, 2}, {2, 3}});
    commutation_check(ctx, "GSO12 a6", f, eta, 7, 5, {{0, 1}, {1, 2}, {2, 3}});
  }
  {  // GSO8 x GL2
    GroupForm f = gso_form(8);
    FnMat ms = mat_from_int({{0, -1}, {-1, 0}});
    FnMat eta = mat_mul(diag_blocks({i2, s, ms, i2}), antidiag_blocks(4, 2));
    commutation_check(ctx, "GSO8xGL2 a2", f, eta, 3, 2, {{0, 1}, {1, 2}});
    commutation_check(ctx, "GSO8xGL2 a4", f, eta, 5, 3, {{0, 1}, {1, 2}});
  }
}

// --- GU models -------------------------------------------------------------

void gu_checks(Ctx& ctx) {
  FnScalar X = FnScalar::var_x(), Y = FnScalar::var_y(), SQ = FnScalar::sqrt_eps(), one = C(1);
  FnScalar EPS = FnScalar::var_eps();
  FnMat i2 = mat_identity(2);
  {  // GU6
    const auto& model = models::model("GU6");
    GroupForm f6 = gu_form(6), f2 = gu_form(2);
    FnMat sn = mat_from_int({{0, 1}, {1, 1}});
    FnMat third = mat_from_int({{0, 1}, {1, -1}});  // [[1,0],[-1,1]] * [[0,1],[1,0]]
    FnMat eta0 = diag_blocks({sn, i2, third});
    FnMat eta = mat_mul(eta0, antidiag_blocks(3, 2));
    ctx.check("GU6 eta: GU membership", check_membership(eta, f6).ok);
    FnScalar a = X + Y * SQ, abar = X - Y * SQ;
    {  // alpha_1
      FnMat x = diag_blocks({FnMat{{one, C(0)}, {a, one}}, i2, FnMat{{one, C(0)}, {-abar, one}}});
      FnScalar fp = one + X;
      FnMat A = diag_blocks({FnMat{{one / fp, C(0)}, {C(0), one}},
                             FnMat{{one, -(Y * SQ) / fp}, {C(0), one / fp}},
                             FnMat{{one / fp, C(0)}, {C(0), one}}});
      FnMat Cc = FnMat{{one, Y * SQ}, {C(0), fp}};
      FnMat B = diag_blocks({Cc, Cc, Cc});
      FnMat lhs = mat_mul(x, eta);
      FnMat rhs = mat_mul(mat_mul(A, eta), B);
      ctx.check("GU6 a1: identity", mat_equal(lhs, rhs));
      ctx.check("GU6 a1: Borel membership",
                mat_upper_triangular(A) && check_membership(A, f6).ok);
      ctx.check("GU6 a1: H membership", check_membership(Cc, f2).ok);
      std::vector<FnScalar> diag{A[0][0], A[1][1], A[2][2]};
      ctx.add(check_color("GU6 a1", model, 0, diag, fp));
    }
    {  // alpha_2: commutation into U with lambda = tr_{E/F}(a)
      FnMat x = mat_identity(6);
      x[2][1] = a;
      x[4][3] = -abar;
      ctx.check("GU6 a2: root matrix in G", check_membership(x, f6).ok);
      FnMat u = mat_mul(mat_mul(mat_inverse(eta), x), eta);
      auto rd = read_unipotent(u, {{0, 1}});
      FnScalar tr = rd.lambda + rd.lambda.conj();
      ctx.check("GU6 a2: commutes into U with tr_{E/F} lambda = a + abar",
                rd.ok && (tr == a + abar || tr == -(a + abar)));
    }
    {  // alpha_3
      FnMat x = diag_blocks({i2, FnMat{{one, C(0)}, {X * SQ, one}}, i2});
      FnScalar fpe = one + X * SQ, fme = one - X * SQ, fq = one - X * X * EPS;
      FnMat A = diag_blocks({FnMat{{fpe, -X * SQ}, {C(0), fme}},
                             FnMat{{one, -X * SQ}, {C(0), fq}},
                             FnMat{{fme, -X * SQ}, {C(0), fpe}}});
      FnMat mm = FnMat{{one / fq, (X * SQ) / fq}, {(X * SQ) / fq, one / fq}};
      FnMat B = diag_blocks({mm, mm, mm});
      ctx.check("GU6 a3: identity", mat_equal(mat_mul(x, eta), mat_mul(mat_mul(A, eta), B)));
      ctx.check("GU6 a3: Borel membership",
                mat_upper_triangular(A) && check_membership(A, f6).ok);
      ctx.check("GU6 a3: H membership", check_membership(mm, f2).ok);
    }
  }
  {  // GU4 x GU2
    const auto& model = models::model("GU4xGU2");
    GroupForm f4 = gu_form(4), f2 = gu_form(2);
    FnMat eta = mat_from_int({{1, 0, 0, 0}, {1, 1, 0, 0}, {-1, 0, 1, 0}, {1, 1, -1, 1}});
    FnMat etainv_display =
        mat_from_int({{1, 0, 0, 0}, {-1, 1, 0, 0}, {1, 0, 1, 0}, {1, -1, 1, 1}});
    ctx.check("GU4xGU2 eta: GU membership and inverse display",
              check_membership(eta, f4).ok && mat_equal(mat_inverse(eta), etainv_display));
    auto h_embed_ok = [&](const FnMat& g, const FnMat& h) {
      FnMat mid = {{g[1][1], g[1][2]}, {g[2][1], g[2][2]}};
      // the alpha' display prints the conjugate of the middle block as the
      // GU2 component; both describe the same H element
      if (!mat_equal(mid, h) && !mat_equal(mat_conj(mid), h)) return false;
      for (size_t k = 1; k <= 2; ++k)
        if (!g[0][k].is_zero() || !g[3][k].is_zero() || !g[k][0].is_zero() || !g[k][3].is_zero())
          return false;
      FnMat h2 = {{g[0][0], g[0][3]}, {g[3][0], g[3][3]}};
      auto m2 = check_membership(h2, f2);
      auto m1 = check_membership(mid, f2);
      return m2.ok && m1.ok && m2.factor == m1.factor;
    };
    FnScalar a = X + Y * SQ;
    {  // alpha_1
      FnMat x = mat_identity(4);
      x[1][0] = a;
      x[3][2] = -(X - Y * SQ);
      FnScalar fp = one + X;
      FnMat g = zmat(4);
      g[0][0] = fp;
      g[1][1] = one;
      g[1][2] = Y * SQ;
      g[2][2] = fp;
      g[3][0] = -(Y * SQ);
      g[3][3] = one;
      FnMat h = FnMat{{one, Y * SQ}, {C(0), fp}};
      FnMat b = zmat(4);
      b[0][0] = one / fp;
      b[1][1] = one;
      b[1][2] = -(Y * SQ) / fp;
      b[2][2] = one / fp;
      b[3][3] = one;
      FnMat lhs = mat_mul(x, eta);
      FnMat rhs = mat_mul(mat_mul(b, eta), g);
      ctx.check("GU4xGU2 a1: identity", mat_equal(lhs, rhs));
      ctx.check("GU4xGU2 a1: Borel membership",
                mat_upper_triangular(b) && check_membership(b, f4).ok);
      ctx.check("GU4xGU2 a1: H membership", h_embed_ok(g, h));
      FnMat hinv = mat_inverse(h);
      std::vector<FnScalar> diag{b[0][0], b[1][1], hinv[0][0]};
      ctx.add(check_color("GU4xGU2 a1", model, 0, diag, fp));
    }
    {  // alpha_2
      FnMat x = mat_identity(4);
      x[2][1] = X * SQ;
      FnScalar fpe = one + X * SQ, fme = one - X * SQ, fq = one - X * X * EPS;
      FnMat g = zmat(4);
      g[0][0] = one;
      g[0][3] = X * SQ;
      g[1][1] = fpe;
      g[2][2] = fpe;
      g[3][0] = X * SQ;
      g[3][3] = one;
      FnMat h = FnMat{{fpe, C(0)}, {C(0), fpe}};
      FnMat b = zmat(4);
      b[0][0] = fme / fq;
      b[0][1] = (X * SQ) / fq;
      b[0][2] = -(X * SQ) / fq;
      b[0][3] = -(X * SQ) / fq;
      b[1][1] = one / fq;
      b[1][2] = -(X * SQ) / fq;
      b[1][3] = -(X * SQ) / fq;
      b[2][2] = one;
      b[2][3] = (-(X * X * EPS) + X * SQ) / fq;
      b[3][3] = fme / fq;
      ctx.check("GU4xGU2 a2: identity",
                mat_equal(mat_mul(x, eta), mat_mul(mat_mul(b, eta), g)));
      ctx.check("GU4xGU2 a2: Borel membership",
                mat_upper_triangular(b) && check_membership(b, f4).ok);
      ctx.check("GU4xGU2 a2: H membership", h_embed_ok(g, h));
    }
    {  // alpha': eta x_{-alpha_2}(-x)
      FnMat x = mat_identity(4);
      x[2][1] = -(X * SQ);
      FnScalar fpe = one + X * SQ, fme = one - X * SQ;
      FnMat g = zmat(4);
      g[0][0] = one / fme;
      g[0][3] = -(X * SQ) / fme;
      g[1][1] = fpe;
      g[1][2] = (X * SQ) / fme;
      g[2][2] = one / fme;
      g[3][0] = -(X * SQ) / fme;
      g[3][3] = one / fme;
      FnMat h = FnMat{{fme, -(X * SQ) / fpe}, {C(0), one / fpe}};
      FnMat b = zmat(4);
      b[0][0] = one;
      b[0][1] = -(X * SQ) / fpe;
      b[0][2] = (X * SQ) / fpe;
      b[0][3] = (X * SQ) / fpe;
      b[1][1] = fme / fpe;
      b[1][3] = (X * SQ) / fpe;
      b[2][2] = fme / fpe;
      b[2][3] = -(X * SQ) / fpe;
      b[3][3] = one;
      ctx.check("GU4xGU2 a': identity",
                mat_equal(mat_mul(eta, x), mat_mul(mat_mul(b, eta), g)));
      ctx.check("GU4xGU2 a': Borel membership",
                mat_upper_triangular(b) && check_membership(b, f4).ok);
      ctx.check("GU4xGU2 a': H membership", h_embed_ok(g, h));
    }
  }
}

}  // namespace

std::vector<IdentityResult> verify_all_identities() {
  Ctx ctx;
  trilinear_checks(ctx);
  gsp6gsp4_checks(ctx);
  gl4gl2_checks(ctx);
  gu_checks(ctx);
  section8_checks(ctx);
  return ctx.out;
}

std::vector<IdentityResult> verify_identity(const std::string& model, const std::string& root) {
  std::string prefix = model + " " + root + ":";
  std::vector<IdentityResult> out;
  for (auto& r : verify_all_identities())
    if (r.name.rfind(prefix, 0) == 0) out.push_back(std::move(r));
  if (out.empty())
    throw std::out_of_range("no cataloged identity for " + model + " " + root);
  return out;
}

std::vector<IdentityResult> unimodularity_checks() {
  Ctx ctx;
  auto unimod = [&](const std::string& nm, const FnMat& m,
                    const FnMat* inv_display = nullptr) {
    FnScalar d = mat_det(m);
    bool det_ok = d == C(1) || d == C(-1);
    FnMat inv = mat_inverse(m);
    bool int_ok = mat_integer_entries(m) && mat_integer_entries(inv);
    bool disp_ok = inv_display == nullptr || mat_equal(inv, *inv_display);
    ctx.check(nm, det_ok && int_ok && disp_ok,
              det_ok ? (int_ok ? (disp_ok ? "" : "displayed inverse differs") : "non-integral")
                     : "det != +-1");
  };
  FnMat s = mat_from_int({{0, 1}, {1, 0}});
  FnMat sn = mat_from_int({{0, 1}, {1, 1}});
  FnMat i2 = mat_identity(2);
  FnMat mi2 = mat_from_int({{-1, 0}, {0, -1}});
  unimod("unimodular: identity", mat_identity(4));
  {
    FnMat eta = mat_from_int({{1, 0, 0, 0, 0, 0},
                              {0, 1, 0, 0, 0, 0},
                              {0, 0, 1, 0, 0, 0},
                              {0, -1, -1, 1, 0, 0},
                              {-1, 0, -1, 0, 1, 0},
                              {0, -1, 0, 0, 0, 1}});
    FnMat inv = mat_from_int({{1, 0, 0, 0, 0, 0},
                              {0, 1, 0, 0, 0, 0},
                              {0, 0, 1, 0, 0, 0},
                              {0, 1, 1, 1, 0, 0},
                              {1, 0, 1, 0, 1, 0},
                              {0, 1, 0, 0, 0, 1}});
    unimod("unimodular: GSp6xGSp4 eta", eta, &inv);
  }
  {
    FnMat eta = mat_from_int({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, -1, 1, 0}, {-1, 1, -1, 1}});
    FnMat inv = mat_from_int({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 1}});
    unimod("unimodular: GL4xGL2 eta", eta, &inv);
  }
  {
    FnMat eta = mat_from_int({{1, 0, 0, 0}, {1, 1, 0, 0}, {-1, 0, 1, 0}, {1, 1, -1, 1}});
    FnMat inv = mat_from_int({{1, 0, 0, 0}, {-1, 1, 0, 0}, {1, 0, 1, 0}, {1, -1, 1, 1}});
    unimod("unimodular: GU4xGU2 eta", eta, &inv);
  }
  unimod("unimodular: trilinear eta0",
         diag_blocks({i2, s, sn}));
  unimod("unimodular: GU6 eta", mat_mul(diag_blocks({sn, i2, mat_from_int({{0, 1}, {1, -1}})}),
                                        antidiag_blocks(3, 2)));
  unimod("unimodular: GL6 eta", mat_mul(diag_blocks({i2, s, sn}), antidiag_blocks(3, 2)));
  unimod("unimodular: GSp10 eta",
         mat_mul(diag_blocks({i2, s, sn, s, mi2}), antidiag_blocks(5, 2)));
  unimod("unimodular: GSp6xGL2 eta",
         mat_mul(diag_blocks({i2, s, mi2}), antidiag_blocks(3, 2)));
  unimod("unimodular: GSO12 eta",
         mat_mul(diag_blocks({i2, s, sn, mat_from_int({{0, -1}, {-1, -1}}),
                              mat_from_int({{0, -1}, {-1, 0}}), i2}),
                 antidiag_blocks(6, 2)));
  unimod("unimodular: GSO8xGL2 eta",
         mat_mul(diag_blocks({i2, s, mat_from_int({{0, -1}, {-1, 0}}), i2}),
                 antidiag_blocks(4, 2)));
  return ctx.out;
}

}  // namespace relchar::matverify
