#include "relchar/padic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace relchar::padic {

namespace {

// vars [s1, s2], u symbolic: q = u^{-2}
LaurentPoly upoly2(int s1, int s2, int u, const Rat& c) {
  LaurentPoly p(2);
  p.add_term({s1, s2, u}, c);
  return p;
}

RatFun q_sym() { return RatFun::from_poly(upoly2(0, 0, -2, Rat(1))); }

long valuation_mod(long t, long p, int cap) {
  if (t == 0) return cap;
  int v = 0;
  while (t % p == 0 && v < cap) {
    t /= p;
    ++v;
  }
  return v;
}


}  // namespace

bool shell_partition_unit_test(int depth) {
  // O = {v = 0} ⊔ ... ⊔ {v = depth} ⊔ {v > depth}: measures (1-q^{-1})q^{-k}
  // and q^{-(depth+1)} must add to vol(O) = 1, and vol(O^x) = 1 - q^{-1}.
  LaurentPoly one = LaurentPoly::constant(0, Rat(1));
  LaurentPoly u2(0);
  u2.add_term({2}, Rat(1));
  LaurentPoly unit_vol = one - u2;  // 1 - q^{-1}
  LaurentPoly total(0);
  LaurentPoly qk = one;
  for (int k = 0; k <= depth; ++k) {
    total = total + unit_vol * qk;
    qk = qk * u2;
  }
  total = total + qk;  // tail {v > depth}
  return total == one && unit_vol == one - u2;
}

ResidueCount count_conic_cells(long p, long eps, int level) {
  ResidueCount rc;
  rc.p = p;
  rc.level = level;
  long pm = 1;
  for (int i = 0; i < level; ++i) pm *= p;
  for (long x = 0; x < pm; ++x)
    for (long y = 0; y < pm; ++y) {
      int a = int(std::min(valuation_mod(x, p, level), valuation_mod(y, p, level)));
      long f = ((x * x - eps * y * y - x) % pm + pm) % pm;
      int b = int(valuation_mod(f, p, level));
      rc.counts[{a, b}] += 1;
    }
  return rc;
}

std::pair<long, long> conic_point_count(long p, long eps) {
  long total = 0, nonzero = 0;
  for (long x = 0; x < p; ++x)
    for (long y = 0; y < p; ++y) {
      long f = ((x * x - eps * y * y - x) % p + p) % p;
      if (f == 0) {
        ++total;
        if (x != 0 || y != 0) ++nonzero;
      }
    }
  return {total, nonzero};
}

std::vector<ShellMeasure> rank_one_shells() {
  LaurentPoly one = LaurentPoly::constant(0, Rat(1));
  LaurentPoly u2(0);
  u2.add_term({2}, Rat(1));
  std::vector<ShellMeasure> cells;
  cells.push_back({"v(a) >= 1", RatFun::from_poly(u2)});
  cells.push_back({"v(a) = 0, v(1+a) >= 1", RatFun::from_poly(u2)});
  cells.push_back({"v(a) = v(1+a) = 0", RatFun::from_poly(one - u2 - u2)});
  RatFun total = RatFun::constant(0, Rat(0));
  for (const auto& s : cells) total = total + s.measure;
  if (!(total == RatFun::constant(0, Rat(1))))
    throw std::domain_error("rank-one shell partition is not complete");
  return cells;
}

RatFun rank_one_integral() {
  // cells {v(a) >= 1}, {v(a) = 0, v(1+a) >= 1}, {v(a) = v(1+a) = 0};
  // the first two are geometric series with ratios s2 u and s1 u.
  RatFun one = RatFun::constant(2, Rat(1));
  RatFun unit_vol = one - RatFun::from_poly(upoly2(0, 0, 2, Rat(1)));  // 1 - q^{-1}
  LaurentMono m2(Rat(1), {0, 1, 1});                                   // s2 u
  LaurentMono m1(Rat(1), {1, 0, 1});                                   // s1 u
  RatFun cell_deep = unit_vol * (ratfun::geometric_closed_form(m2) - one);
  RatFun cell_minus1 = unit_vol * (ratfun::geometric_closed_form(m1) - one);
  RatFun cell_units = one - RatFun::from_poly(upoly2(0, 0, 2, Rat(2)));  // 1 - 2 q^{-1}
  return q_sym() * (cell_deep + cell_minus1 + cell_units);
}

RatFun rank_one_closed_form() {
  RatFun one = RatFun::constant(2, Rat(1));
  RatFun q = q_sym();
  RatFun us1 = RatFun::from_poly(upoly2(1, 0, 1, Rat(1)));
  RatFun us2 = RatFun::from_poly(upoly2(0, 1, 1, Rat(1)));
  RatFun u2s1s2 = RatFun::from_poly(upoly2(1, 1, 2, Rat(1)));
  RatFun num = us1 + us2 - u2s1s2 - u2s1s2;
  return q - one - one + (q - one) * num / ((one - us1) * (one - us2));
}

namespace {

// measures mu_k(c) of {v(p^k(x^2-eps y^2) - x) = c} on X = {min(v x, v y)=0},
// counted mod p^level; the last resolved index is level-1 and the final
// entry is the >= level bucket.
std::vector<Rat> gk_measures(long p, long eps, int k, int level) {
  long pm = 1;
  for (int i = 0; i < level; ++i) pm *= p;
  long pk = 1;
  for (int i = 0; i < k && i < level; ++i) pk *= p;
  std::vector<long> counts(size_t(level) + 1, 0);
  for (long x = 0; x < pm; ++x)
    for (long y = 0; y < pm; ++y) {
      if (x % p == 0 && y % p == 0) continue;  // not in X
      long g = (((pk % pm) * ((x * x - eps * y * y) % pm)) % pm - x % pm + 2 * pm) % pm;
      counts[size_t(valuation_mod(g, p, level))] += 1;
    }
  std::vector<Rat> mu;
  Rat scale = Rat(1) / Rat(pm * pm);
  for (long c : counts) mu.push_back(Rat(c) * scale);
  return mu;
}

}  // namespace

namespace {

void require_nonresidue(long p, long eps) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("q must be an odd prime");
  long e = ((eps % p) + p) % p;
  if (e == 0) throw std::invalid_argument("eps must be a unit");
  for (long z = 1; z < p; ++z)
    if ((z * z) % p == e) throw std::invalid_argument("eps must be a quadratic non-residue");
}

}  // namespace

RatFun quad_ext_integral_61(long p, long eps, int level) {
  // LHS = 1 + sum_k q^{2-2k} (s_sigma s_eta)^k J_k with
  // J_k = sum_c mu_k(c) s_sigma^c on the shell p^k X.
  // Residue counts resolve c < level; the tails are geometric with ratio
  // q^{-1} (certified against the counted levels below) and J_k is
  // independent of k for k >= 1 (certified by comparing the counted J_k).
  require_nonresidue(p, eps);
  Rat q(p);
  auto measures_at = [&](int k, int lv) { return gk_measures(p, eps, k, lv); };
  // stabilization between consecutive levels
  for (int k = 0; k <= 2; ++k) {
    auto lo = measures_at(k, level - 1), hi = measures_at(k, level);
    for (int c = 0; c + 1 < int(lo.size()) - 1; ++c)
      if (lo[size_t(c)] != hi[size_t(c)])
        throw std::runtime_error("residue counts fail to stabilize between levels");
  }
  std::vector<std::vector<Rat>> mu;
  for (int k = 0; k <= 2; ++k) mu.push_back(measures_at(k, level));
  // geometric tails: mu(c+1) = mu(c)/q on the resolved tail region, and the
  // >= bucket equals mu(last)/(q-1)
  for (int k = 0; k <= 2; ++k) {
    int c0 = k == 0 ? 1 : k + 1;  // tail start: conic Hensel region
    for (int c = c0; c + 1 <= level - 1; ++c)
      if (mu[size_t(k)][size_t(c + 1)] * q != mu[size_t(k)][size_t(c)])
        throw std::runtime_error("cell measures are not geometric in the tail");
    if (mu[size_t(k)][size_t(level)] * (q - 1) != mu[size_t(k)][size_t(level - 1)])
      throw std::runtime_error("tail bucket inconsistent with the geometric ratio");
  }
  // J_k independent of k for k >= 1
  if (mu[1] != mu[2])
    throw std::runtime_error("shell integrals J_k depend on k for k >= 1");

  // assemble exactly, vars [s_sigma, s_eta] with numeric q
  auto smono = [&](int a, int b, const Rat& c) {
    LaurentPoly pl(2);
    pl.add_term({a, b, 0}, c);
    return RatFun::from_poly(pl);
  };
  RatFun one = RatFun::constant(2, Rat(1));
  auto J = [&](int k) {
    // finite part c < level, then the geometric tail from c = level
    RatFun acc = RatFun::constant(2, Rat(0));
    for (int c = 0; c <= level - 1; ++c) acc = acc + smono(c, 0, mu[size_t(k)][size_t(c)]);
    // tail: mu(level-1)/q * s^level / (1 - s/q)
    RatFun tail_head = smono(level, 0, mu[size_t(k)][size_t(level - 1)] / q);
    RatFun tail = tail_head / (one - smono(1, 0, Rat(1) / q));
    return acc + tail;
  };
  RatFun J0 = J(0), J1 = J(1);
  // sum_{k>=1} q^{2-2k} (st)^k J1 = q^2 J1 * r/(1-r), r = st/q^2
  RatFun r = smono(1, 1, Rat(1) / (q * q));
  RatFun lhs = one + smono(0, 0, q * q) * J0 + smono(0, 0, q * q) * J1 * r / (one - r);
  return lhs;
}

RatFun quad_ext_closed_form_61(long p) {
  Rat q(p);
  auto smono = [&](int a, int b, const Rat& c) {
    LaurentPoly pl(2);
    pl.add_term({a, b, 0}, c);
    return RatFun::from_poly(pl);
  };
  RatFun one = RatFun::constant(2, Rat(1));
  RatFun num = smono(0, 0, q * q * (1 - Rat(1) / q)) * (one - smono(2, 1, Rat(1) / (q * q * q * q)));
  RatFun den = (one - smono(1, 0, Rat(1) / q)) * (one - smono(1, 1, Rat(1) / (q * q)));
  return num / den;
}

QuadExt62Result quad_ext_integral_62(long p, long eps, int level) {
  // cells p^k X: integrand there is s_eta^k phi0(v(x') - k) with the
  // |x^2-eps y^2|^{-1} factor cancelling the shell rescaling exactly; the
  // counts themselves need eps to be a non-residue so x^2 - eps y^2 is a
  // unit on X.
  require_nonresidue(p, eps);
  Rat q(p);
  long pm = 1;
  for (int i = 0; i < level; ++i) pm *= p;
  // measures of v(x) = c on X (y a unit when v(x) > 0)
  std::vector<long> counts(size_t(level) + 1, 0);
  for (long x = 0; x < pm; ++x)
    for (long y = 0; y < pm; ++y) {
      if (x % p == 0 && y % p == 0) continue;
      counts[size_t(valuation_mod(x, p, level))] += 1;
    }
  std::vector<Rat> mu;
  for (long c : counts) mu.push_back(Rat(c) / Rat(pm * pm));
  QuadExt62Result res;
  auto cell_value = [&](int k) {
    // measure(v(x') >= k) * 1 + measure(v(x') = k-1) * (-1/(q-1))
    Rat geq(0);
    for (int c = k; c <= level; ++c) geq += mu[size_t(c)];
    Rat out = geq;
    if (k >= 1) out -= mu[size_t(k - 1)] / (q - 1);
    return out;
  };
  res.cell_x = cell_value(0);
  LaurentPoly pix(1);
  pix.add_term({1, 0}, cell_value(1));
  res.cell_pix = RatFun::from_poly(pix);
  for (int k = 2; k <= level - 1; ++k) res.deeper.push_back(cell_value(k));
  Rat total_scalar = 1 + q * q * (res.cell_x + 0);  // s_eta-free part
  LaurentPoly tot(1);
  tot.add_term({0, 0}, total_scalar);
  tot.add_term({1, 0}, q * q * cell_value(1));
  for (int k = 2; k <= level - 1; ++k) tot.add_term({k, 0}, q * q * cell_value(k));
  res.total = RatFun::from_poly(tot);
  return res;
}

RatFun quad_ext_closed_form_62(long p) {
  Rat q(p);
  LaurentPoly tot(1);
  tot.add_term({0, 0}, q * q);
  tot.add_term({1, 0}, -Rat(1));
  return RatFun::from_poly(tot);
}

PhiFourierResult phi_fourier_check(long p, int m_max) {
  PhiFourierResult res;
  Rat q(p);
  // phi0(xi) = (1/vol(O^x)) int_{O^x} psi(x xi) dx as a normalized unit sum;
  // for v(xi) = -j the sum lives in Q(zeta_{p^j}).
  for (int c = 0; c >= -(m_max - 1); --c) {
    int j = -c;
    Rat expected = c >= 0 ? Rat(1) : (c == -1 ? Rat(-1) / (q - 1) : Rat(0));
    for (int m = std::max(j, 1); m <= std::max(j, 1) + 1; ++m) {
      long pm = 1;
      for (int i = 0; i < m; ++i) pm *= p;
      long pj = 1;
      for (int i = 0; i < j; ++i) pj *= p;
      // exact cyclotomic sum: coefficients of zeta_{p^j}^e
      std::vector<Rat> coeff(size_t(std::max(pj, 1L)), Rat(0));
      long units = 0;
      for (long x = 0; x < pm; ++x) {
        if (x % p == 0) continue;
        ++units;
        long e = j == 0 ? 0 : (x % pj);
        coeff[size_t(e)] += 1;
      }
      // reduce modulo Phi_{p^j}(X) = sum_{i<p} X^{i p^{j-1}}
      if (j >= 1) {
        long pj1 = pj / p;
        for (long e = pj - 1; e >= pj1; --e) {
          Rat t = coeff[size_t(e)];
          if (t == 0) continue;
          coeff[size_t(e)] = 0;
          // X^e = X^{e-pj1} * X^{pj1}; X^{pj1} = -(1 + X^{pj1} + ...) etc.
          // handled by subtracting t from each X^{e - i p^{j-1}}, i = 1..p-1
          for (long i = 1; i < p; ++i) coeff[size_t(e - i * pj1)] -= t;
        }
        for (long e = 1; e < pj1; ++e)
          if (coeff[size_t(e)] != 0) {
            res.pass = false;
            res.detail = "cyclotomic sum not rational at v = " + std::to_string(c);
            return res;
          }
      }
      Rat value = coeff[0] / Rat(units);
      if (value != expected) {
        res.pass = false;
        res.detail = "phi0 mismatch at v = " + std::to_string(c) + ": got " + rat_str(value) +
                     " expected " + rat_str(expected);
        return res;
      }
      // complex cross-check at 1e-9
      if (j >= 1) {
        std::complex<double> acc(0, 0);
        const double tau = 6.283185307179586476925286766559;
        for (long x = 0; x < pm; ++x) {
          if (x % p == 0) continue;
          double ang = tau * double(x % pj) / double(pj);
          acc += std::complex<double>(std::cos(ang), std::sin(ang));
        }
        acc /= double(units);
        double want = expected.get_d();
        if (std::abs(acc.real() - want) > 1e-9 || std::abs(acc.imag()) > 1e-9) {
          res.pass = false;
          res.detail = "complex character sum off tolerance at v = " + std::to_string(c);
          return res;
        }
      }
      if (m == std::max(j, 1)) res.values.push_back({c, value});
    }
  }
  res.detail = "phi0 = 1, -1/(q-1), 0 on v >= 0, v = -1, v <= -2";
  return res;
}

IAlphaUpsiResult i_alpha_upsi_check() {
  IAlphaUpsiResult res;
  // vars [t], u symbolic: I = 1 + q sum_k vol(v=k) t^k q^k phi0(v = -k)
  auto tmono = [&](int a, int u, const Rat& c) {
    LaurentPoly pl(1);
    pl.add_term({a, u}, c);
    return RatFun::from_poly(pl);
  };
  RatFun one = RatFun::constant(1, Rat(1));
  RatFun q = tmono(0, -2, Rat(1));
  RatFun unit_vol = one - tmono(0, 2, Rat(1));
  // phi0 values: 1 at k = 0; -1/(q-1) = -u^2/(1-u^2) at k = 1; 0 beyond
  RatFun shell0 = unit_vol;
  RatFun phi1 = -tmono(0, 2, Rat(1)) / (one - tmono(0, 2, Rat(1)));
  RatFun shell1 = unit_vol * tmono(0, 2, Rat(1)) * tmono(1, -2, Rat(1)) * phi1;
  RatFun value = one + q * (shell0 + shell1);
  // shells k >= 2 vanish because phi0 is 0 below v = -1
  RatFun target = q * (one - tmono(1, 2, Rat(1)));
  res.value = value;
  res.pass = value == target;
  if (!res.pass) res.detail = "shell assembly does not match q(1 - q^{-1} t)";
  else res.detail = "q(1 - q^{-1} t), only shells v(a) in {0,1} contribute";
  return res;
}

}  // namespace relchar::padic
