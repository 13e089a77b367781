#include "relchar/weylsum.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace relchar::weylsum {

using lattice::RatMat;
using lattice::reflect;
using lattice::WeylElement;
using models::RootType;
using ratfun::LaurentPoly;
using ratfun::RatFun;

namespace {

Rat eval_exps(const std::vector<int>& exps, const std::vector<Rat>& tau) {
  Rat acc(1);
  for (size_t i = 0; i < exps.size(); ++i)
    if (exps[i]) acc *= pow_rat(tau[i], exps[i]);
  return acc;
}

// exact square root of a rational, if it exists
std::optional<Rat> rat_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  Int n = r.get_num(), d = r.get_den();
  Int sn, sd;
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  Rat out(sn, sd);
  out.canonicalize();
  return out;
}

}  // namespace

Rat eval_weight(const ModelSpec& m, const Weight& gamma, const SatakePoint& pt) {
  if (int(pt.tau.size()) != m.tau_dim) throw std::invalid_argument("point arity mismatch");
  for (const auto& t : pt.tau)
    if (t == 0) throw std::domain_error("zero tau assignment");
  if (pt.u == 0) throw std::domain_error("zero u assignment");
  return eval_exps(m.tau_exponents(gamma), pt.tau);
}

SatakePoint random_point(const ModelSpec& m, std::mt19937_64& rng) {
  SatakePoint pt;
  pt.tau.resize(size_t(m.tau_dim));
  bool squares = m.tau_dim != m.datum.dim;  // E7: transforms need rational sqrt
  if (squares) {
    // distinct squares > 1: no two coordinates coincide and no product of
    // two hits 1, which keeps every classical coroot value away from 1
    static const std::pair<int, int> pool[] = {{5, 4}, {4, 3}, {3, 2}, {5, 3}, {2, 1},
                                               {5, 2}, {3, 1}, {4, 1}, {5, 1}};
    std::vector<int> idx(std::size(pool));
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
    std::shuffle(idx.begin(), idx.end(), rng);
    for (int i = 0; i < m.tau_dim; ++i) {
      Rat r = make_rat(pool[size_t(idx[size_t(i)])].first, pool[size_t(idx[size_t(i)])].second);
      pt.tau[size_t(i)] = r * r;
    }
  } else {
    auto draw = [&](int lim) {
      std::uniform_int_distribution<int> d(1, lim);
      int p = d(rng), q = d(rng);
      return make_rat(p, q);
    };
    for (auto& t : pt.tau) {
      std::uniform_int_distribution<int> sgn(0, 1);
      t = draw(7);
      if (sgn(rng)) t = -t;
    }
  }
  if (m.constraint) {
    // enforce prod tau_i^{Z_i} = 1 by solving for the last coordinate with a
    // nonzero constraint exponent
    const auto& z = m.constraint->coords;
    int last = -1;
    for (int i = m.tau_dim - 1; i >= 0; --i)
      if (z[size_t(i)] != 0) {
        last = i;
        break;
      }
    Rat prod(1);
    for (int i = 0; i < m.tau_dim; ++i)
      if (i != last && z[size_t(i)] != 0) prod *= pow_rat(pt.tau[size_t(i)], z[size_t(i)]);
    // tau_last^{Z_last} = 1/prod; our constraints all have Z_last = 2
    if (z[size_t(last)] != 2) throw std::domain_error("unsupported constraint exponent");
    auto root = rat_sqrt(Rat(1) / prod);
    if (!root) {
      // flip one earlier sign so the product becomes a square
      pt.tau[0] = -pt.tau[0];
      prod = Rat(1);
      for (int i = 0; i < m.tau_dim; ++i)
        if (i != last && z[size_t(i)] != 0) prod *= pow_rat(pt.tau[size_t(i)], z[size_t(i)]);
      root = rat_sqrt(Rat(1) / prod);
      if (!root) throw std::domain_error("constraint sampling failed");
    }
    pt.tau[size_t(last)] = *root;
  }
  std::uniform_int_distribution<int> d(2, 7);
  pt.u = make_rat(1, d(rng));
  return pt;
}

SatakePoint delta_half_point(const ModelSpec& m, const Rat& s) {
  // e^mu(theta) = q^{<rho, mu>} with q = s^4: tau_i = s^{2 rho_i} in doubled
  // coordinates, so tau_i^{D_i} = s^{sum 2 rho_i D_i} = q^{<rho,mu>}.
  SatakePoint pt;
  std::vector<int> rho2 = m.tau_exponents(m.datum.rho);  // doubled rho
  if (m.tau_dim != m.datum.dim) rho2.back() *= 2;  // the e8-e7 direction has norm 2
  pt.tau.resize(size_t(m.tau_dim));
  for (int i = 0; i < m.tau_dim; ++i) pt.tau[size_t(i)] = pow_rat(s, rho2[size_t(i)]);
  pt.u = pow_rat(s, -2);  // u = q^{-1/2} = s^{-2}
  return pt;
}

SatakePoint transform_point(const ModelSpec& m, const WeylElement& w, const SatakePoint& pt) {
  RatMat inv = w.matrix;
  if (!w.word.empty()) {
    inv = RatMat::identity(m.datum.dim);
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
      inv = inv.mul(RatMat::reflection(m.datum.simples[size_t(*it)].root,
                                       m.datum.simples[size_t(*it)].coroot));
  } else {
    // reflections are involutions; general elements must carry their word
    if (!(w.matrix.mul(w.matrix) == RatMat::identity(m.datum.dim)))
      throw std::invalid_argument("transform_point needs a word or an involution");
  }
  SatakePoint out;
  out.u = pt.u;
  out.tau.resize(size_t(m.tau_dim));
  // basis coweights whose half-values are the taus
  for (int i = 0; i < m.tau_dim; ++i) {
    std::vector<int> b(size_t(m.datum.dim), 0);
    if (m.tau_dim == m.datum.dim) {
      b[size_t(i)] = 2;
    } else {
      if (i < 6)
        b[size_t(i)] = 2;
      else {
        b[6] = -2;
        b[7] = 2;
      }  // the e8-e7 direction
    }
    std::vector<int> img = inv.apply_doubled(b);
    std::vector<int> eff = m.tau_exponents(Weight(img));
    // tau'_i = prod tau_j^{eff_j / 2}
    Rat val(1);
    for (size_t j = 0; j < eff.size(); ++j) {
      int e = eff[j];
      if (e == 0) continue;
      if (e % 2 == 0) {
        val *= pow_rat(pt.tau[j], e / 2);
      } else {
        auto r = rat_sqrt(pt.tau[j]);
        if (!r) throw std::domain_error("Weyl transform needs square tau values");
        val *= pow_rat(*r, e);
      }
    }
    out.tau[size_t(i)] = val;
  }
  return out;
}

std::optional<Rat> c_ws(const ModelSpec& m, const WeylElement& w, const SatakePoint& pt) {
  // c_WS(w theta) = prod_{Theta+}(1 - u^deg e^{w^-1 g}) / prod_{Phi+}(1 - e^{w^-1 a})
  RatMat inv = RatMat::identity(m.datum.dim);
  if (!w.word.empty()) {
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
      inv = inv.mul(RatMat::reflection(m.datum.simples[size_t(*it)].root,
                                       m.datum.simples[size_t(*it)].coroot));
  } else {
    inv = w.matrix;
    if (!(inv.mul(inv) == RatMat::identity(m.datum.dim)))
      throw std::invalid_argument("c_ws needs a word or an involution");
  }
  Rat num(1), den(1);
  for (const auto& g : models::theta_plus(m).elements) {
    Weight img(inv.apply_doubled(g.coords), g.degree);
    num *= Rat(1) - pow_rat(pt.u, g.degree) * eval_weight(m, img, pt);
  }
  for (const auto& a : m.datum.positive_coroots) {
    Weight img(inv.apply_doubled(a.coords), 1);
    Rat f = Rat(1) - eval_weight(m, img, pt);
    if (f == 0) return std::nullopt;
    den *= f;
  }
  return num / den;
}

// ---------------------------------------------------------------------------
// The streaming fold over W.
//
// States are (inversion mask over coroot pairs, choice mask over Theta+
// pairs); the inversion mask determines the Weyl element uniquely and its
// popcount is the length, so the enumeration runs frontier-by-length with no
// global visited set.  Term values are products of word-sized integer atoms
// over a fixed common denominator, accumulated into one mpz per worker.
// ---------------------------------------------------------------------------

namespace {

struct PairTables {
  std::vector<Weight> tpos;  // Theta+ (pair representatives)
  std::vector<Weight> cpos;  // positive coroots
  // action of each simple reflection on the pairs
  std::vector<std::vector<uint8_t>> th_perm, th_flip, co_perm, co_flip;
};

PairTables build_tables(const ModelSpec& m) {
  PairTables t;
  t.tpos = models::theta_plus(m).elements;
  t.cpos = m.datum.positive_coroots;
  size_t ns = m.datum.simples.size();
  auto find_pair = [&](const std::vector<Weight>& pos, const Weight& img,
                       const ModelSpec& mm) -> std::pair<uint8_t, uint8_t> {
    Weight c = mm.canonical(img);
    for (size_t k = 0; k < pos.size(); ++k)
      if (pos[k].coords == c.coords) return {uint8_t(k), 0};
    Weight n = mm.negate(img);
    for (size_t k = 0; k < pos.size(); ++k)
      if (pos[k].coords == n.coords) return {uint8_t(k), 1};
    throw std::domain_error("reflection image escapes the pair table");
  };
  t.th_perm.assign(ns, {});
  t.th_flip.assign(ns, {});
  t.co_perm.assign(ns, {});
  t.co_flip.assign(ns, {});
  for (size_t i = 0; i < ns; ++i) {
    const auto& s = m.datum.simples[i];
    for (const auto& g : t.tpos) {
      auto [p, f] = find_pair(t.tpos, reflect(s.coroot, s.root, g), m);
      t.th_perm[i].push_back(p);
      t.th_flip[i].push_back(f);
    }
    for (const auto& a : t.cpos) {
      auto [p, f] = find_pair(t.cpos, reflect(s.coroot, s.root, a), m);
      t.co_perm[i].push_back(p);
      t.co_flip[i].push_back(f);
    }
  }
  return t;
}

struct Atoms {
  // numerator atoms per Theta pair (positive / negated member) and
  // denominator atoms per coroot pair, all over the common denominator D
  std::vector<long> apos, aneg;
  std::vector<long> bpos, bneg;
  mpz_class D;
  bool pole = false;
};

long fit_long(const Int& z) {
  if (!mpz_fits_slong_p(z.get_mpz_t()))
    throw std::overflow_error("evaluation point too large for the integer fold");
  return mpz_get_si(z.get_mpz_t());
}

Atoms build_atoms(const ModelSpec& m, const PairTables& t, const SatakePoint& pt,
                  const RatMat* twist = nullptr) {
  Atoms a;
  a.D = 1;
  Int ua = pt.u.get_num(), ub = pt.u.get_den();
  auto at = [&](const Weight& w) {
    if (!twist) return eval_weight(m, w, pt);
    return eval_weight(m, Weight(twist->apply_doubled(w.coords), w.degree), pt);
  };
  for (const auto& g : t.tpos) {
    Rat y = at(g);
    Int yn = y.get_num(), yd = y.get_den();
    Int ud = pow_int(ub, unsigned(g.degree));
    Int un = pow_int(ua, unsigned(g.degree));
    Int apn = (ud * yd - un * yn) * yn;
    Int ann = (ud * yn - un * yd) * yd;
    a.apos.push_back(fit_long(apn));
    a.aneg.push_back(fit_long(ann));
    a.D *= ud * yd * yn;
  }
  for (const auto& c : t.cpos) {
    Rat x = at(c);
    Int xn = x.get_num(), xd = x.get_den();
    if (xn == xd) {
      a.pole = true;
      return a;
    }
    a.bpos.push_back(fit_long(xd));
    a.bneg.push_back(fit_long(-xn));
    a.D *= xd - xn;
  }
  return a;
}

// product accumulator: multiplies word-sized atoms into an mpz via u64 chunks
struct TermProduct {
  mpz_class value;
  uint64_t chunk = 1;
  int sign = 1;
  bool zero = false;

  void reset() {
    value = 1;
    chunk = 1;
    sign = 1;
    zero = false;
  }
  inline void mul(long a) {
    if (a == 0) {
      zero = true;
      return;
    }
    uint64_t ua = a < 0 ? uint64_t(-(a + 1)) + 1 : uint64_t(a);
    if (a < 0) sign = -sign;
    if (ua != 0 && chunk > UINT64_MAX / ua) {
      mpz_mul_ui(value.get_mpz_t(), value.get_mpz_t(), chunk);
      chunk = ua;
    } else {
      chunk *= ua;
    }
  }
  void flush() {
    if (chunk != 1) {
      mpz_mul_ui(value.get_mpz_t(), value.get_mpz_t(), chunk);
      chunk = 1;
    }
  }
};

struct MaskState {
  uint64_t den = 0;
  uint32_t num = 0;
};

// One pass over the whole Weyl group; calls term(state) for every element.
template <typename TermFn>
size_t mask_bfs(const PairTables& t, size_t nsimple, TermFn&& term) {
  size_t nt = t.tpos.size(), nc = t.cpos.size();
  if (nt > 32 || nc > 64) throw std::length_error("mask fold limited to 32/64 pairs");
  std::vector<MaskState> frontier{MaskState{}};
  std::unordered_map<uint64_t, uint32_t> next;
  size_t total = 0, len = 0;
  while (!frontier.empty()) {
    total += frontier.size();
    for (const auto& st : frontier) term(st);
    next.clear();
    for (const auto& st : frontier) {
      for (size_t i = 0; i < nsimple; ++i) {
        uint64_t nd = 0;
        for (size_t j = 0; j < nc; ++j) {
          uint64_t bit = ((st.den >> j) & 1) ^ t.co_flip[i][j];
          nd |= bit << t.co_perm[i][j];
        }
        if (size_t(__builtin_popcountll(nd)) != len + 1) continue;
        if (next.count(nd)) continue;
        uint32_t nn = 0;
        for (size_t k = 0; k < nt; ++k) {
          uint32_t bit = ((st.num >> k) & 1) ^ t.th_flip[i][k];
          nn |= bit << t.th_perm[i][k];
        }
        next.emplace(nd, nn);
      }
    }
    frontier.clear();
    frontier.reserve(next.size());
    for (const auto& [d, n] : next) frontier.push_back(MaskState{d, n});
    ++len;
  }
  return total;
}

}  // namespace

std::optional<Rat> weyl_sum(const ModelSpec& m, const SatakePoint& pt, int jobs) {
  return weyl_sum_image(m, nullptr, pt, jobs);
}

// The sum evaluated at w.theta: every weight argument is twisted by w^{-1}
// on the weight side, so no root of a tau value is ever needed.
std::optional<Rat> weyl_sum_image(const ModelSpec& m, const lattice::WeylElement* w,
                                  const SatakePoint& pt, int jobs) {
  PairTables t = build_tables(m);
  std::optional<RatMat> inv;
  if (w) {
    inv = RatMat::identity(m.datum.dim);
    if (!w->word.empty()) {
      for (auto it = w->word.rbegin(); it != w->word.rend(); ++it)
        *inv = inv->mul(RatMat::reflection(m.datum.simples[size_t(*it)].root,
                                           m.datum.simples[size_t(*it)].coroot));
    } else {
      inv = w->matrix;
      if (!(inv->mul(*inv) == RatMat::identity(m.datum.dim)))
        throw std::invalid_argument("weyl_sum_image needs a word or an involution");
    }
  }
  Atoms at = build_atoms(m, t, pt, inv ? &*inv : nullptr);
  if (at.pole) return std::nullopt;
  size_t nt = t.tpos.size(), nc = t.cpos.size();
  int nworkers = std::max(1, jobs);
  std::vector<mpz_class> partial(size_t(nworkers), mpz_class(0));
  // collect frontier terms, then fold them (in deterministic chunk order)
  std::vector<MaskState> batch;
  auto fold_batch = [&]() {
    if (batch.empty()) return;
    auto work = [&](size_t w0, size_t lo, size_t hi) {
      TermProduct tp;
      mpz_class local(0);
      for (size_t idx = lo; idx < hi; ++idx) {
        const auto& st = batch[idx];
        tp.reset();
        for (size_t k = 0; k < nt; ++k) tp.mul(((st.num >> k) & 1) ? at.aneg[k] : at.apos[k]);
        if (tp.zero) continue;
        for (size_t j = 0; j < nc; ++j) tp.mul(((st.den >> j) & 1) ? at.bneg[j] : at.bpos[j]);
        if (tp.zero) continue;
        tp.flush();
        if (tp.sign > 0)
          local += tp.value;
        else
          local -= tp.value;
      }
      partial[w0] += local;
    };
    if (nworkers == 1 || batch.size() < 1024) {
      work(0, 0, batch.size());
    } else {
      std::vector<std::thread> threads;
      size_t chunk = (batch.size() + size_t(nworkers) - 1) / size_t(nworkers);
      for (int w = 0; w < nworkers; ++w) {
        size_t lo = size_t(w) * chunk, hi = std::min(batch.size(), lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back(work, size_t(w), lo, hi);
      }
      for (auto& th : threads) th.join();
    }
    batch.clear();
  };
  size_t total = mask_bfs(t, m.datum.simples.size(), [&](const MaskState& st) {
    batch.push_back(st);
    if (batch.size() >= 1u << 16) fold_batch();
  });
  fold_batch();
  if (long(total) != m.datum.weyl_order())
    throw std::runtime_error("Weyl fold enumerated " + std::to_string(total) + " elements");
  mpz_class acc(0);
  for (const auto& p : partial) acc += p;
  Rat out(acc, at.D);
  out.canonicalize();
  return out;
}

CheckResult weyl_sum_constant(const ModelSpec& m, const std::vector<SatakePoint>& pts, int jobs) {
  CheckResult res;
  for (size_t i = 0; i < pts.size(); ++i) {
    auto v = weyl_sum(m, pts[i], jobs);
    if (!v) {
      res.pass = false;
      res.detail = "pole at point " + std::to_string(i);
      return res;
    }
    auto want = m.expected_constant.eval({}, pts[i].u);
    if (!want || *v != *want) {
      res.pass = false;
      res.detail = "point " + std::to_string(i) + ": got " + rat_str(*v) + ", expected " +
                   (want ? rat_str(*want) : std::string("?")) +
                   " (residual " + rat_str(*v - (want ? *want : Rat(0))) + ")";
      return res;
    }
  }
  res.detail = "matched at " + std::to_string(pts.size()) + " points";
  return res;
}

std::optional<Rat> ws_value(const ModelSpec& m, const Weight& t, const SatakePoint& pt,
                            int jobs) {
  for (const auto& s : m.datum.simples)
    if (pair(t, s.root) < 0) throw std::invalid_argument("ws_value needs a dominant coweight");
  if (t.is_zero()) return weyl_sum(m, pt, jobs);
  PairTables tb = build_tables(m);
  Atoms at = build_atoms(m, tb, pt);
  if (at.pole) return std::nullopt;
  size_t nt = tb.tpos.size(), nc = tb.cpos.size();
  // delta_B^{1/2}(t^{-1}) = q^{-<rho,t>} = u^{2<rho,t>}
  Rat rho_t = pair(m.datum.rho, t);
  Rat dexp = 2 * rho_t;
  if (dexp.get_den() != 1) throw std::domain_error("delta exponent not integral");
  Rat delta_factor = pow_rat(pt.u, mpz_get_si(dexp.get_num().get_mpz_t()));
  // carry w^{-1} t through the walk
  struct St {
    uint64_t den;
    uint32_t num;
    std::vector<int> lam;
  };
  std::vector<St> frontier{{0, 0, t.coords}};
  Rat acc(0);
  size_t total = 0, len = 0;
  std::vector<Weight> sroot, scoroot;
  for (const auto& s : m.datum.simples) {
    sroot.push_back(s.root);
    scoroot.push_back(s.coroot);
  }
  TermProduct tp;
  while (!frontier.empty()) {
    total += frontier.size();
    for (const auto& st : frontier) {
      tp.reset();
      for (size_t k = 0; k < nt; ++k) tp.mul(((st.num >> k) & 1) ? at.aneg[k] : at.apos[k]);
      if (!tp.zero)
        for (size_t j = 0; j < nc; ++j) tp.mul(((st.den >> j) & 1) ? at.bneg[j] : at.bpos[j]);
      if (tp.zero) continue;
      tp.flush();
      Rat term(tp.sign > 0 ? tp.value : -tp.value, at.D);
      term.canonicalize();
      term *= eval_exps(m.tau_exponents(Weight(st.lam)), pt.tau);
      acc += term;
    }
    std::unordered_map<uint64_t, St> next;
    for (const auto& st : frontier) {
      for (size_t i = 0; i < m.datum.simples.size(); ++i) {
        uint64_t nd = 0;
        for (size_t j = 0; j < nc; ++j) {
          uint64_t bit = ((st.den >> j) & 1) ^ tb.co_flip[i][j];
          nd |= bit << tb.co_perm[i][j];
        }
        if (size_t(__builtin_popcountll(nd)) != len + 1 || next.count(nd)) continue;
        uint32_t nn = 0;
        for (size_t k = 0; k < nt; ++k) {
          uint32_t bit = ((st.num >> k) & 1) ^ tb.th_flip[i][k];
          nn |= bit << tb.th_perm[i][k];
        }
        next.emplace(nd,
                     St{nd, nn, reflect(scoroot[i], sroot[i], Weight(st.lam)).coords});
      }
    }
    frontier.clear();
    for (auto& [d, s] : next) frontier.push_back(std::move(s));
    ++len;
  }
  if (long(total) != m.datum.weyl_order())
    throw std::runtime_error("ws_value fold enumerated " + std::to_string(total));
  (void)jobs;
  return acc * delta_factor;
}

std::optional<Rat> coset_sum(const ModelSpec& m, const ReductionSpec& r, const SatakePoint& pt,
                             int jobs) {
  (void)jobs;
  PairTables tb = build_tables(m);
  // full Theta table (canonical) and signed coroot codes
  std::vector<Weight> tab;
  for (const auto& g : m.theta) tab.push_back(m.canonical(g));
  std::sort(tab.begin(), tab.end());
  auto theta_index = [&](const Weight& w) {
    Weight c = m.canonical(w);
    for (size_t i = 0; i < tab.size(); ++i)
      if (tab[i].coords == c.coords) return int(i);
    throw std::domain_error("weight outside Theta table");
  };
  size_t ns = m.datum.simples.size(), ntab = tab.size(), nc = tb.cpos.size();
  // reflection permutation of the full Theta table
  std::vector<std::vector<uint8_t>> tperm(ns, std::vector<uint8_t>(ntab));
  for (size_t i = 0; i < ns; ++i) {
    const auto& s = m.datum.simples[i];
    for (size_t k = 0; k < ntab; ++k)
      tperm[i][k] = uint8_t(theta_index(reflect(s.coroot, s.root, tab[k])));
  }
  // atoms over the full table
  Int ua = pt.u.get_num(), ub = pt.u.get_den();
  std::vector<long> N(ntab), Dn(ntab);
  mpz_class D(1);
  for (size_t k = 0; k < ntab; ++k) {
    Rat y = eval_exps(m.tau_exponents(tab[k]), pt.tau);
    Int yn = y.get_num(), yd = y.get_den();
    Int ud = pow_int(ub, unsigned(tab[k].degree)), un = pow_int(ua, unsigned(tab[k].degree));
    N[k] = fit_long(ud * yd - un * yn);
    Dn[k] = fit_long(ud * yd);
    D *= Dn[k];
  }
  std::vector<long> bpos(nc), bneg(nc), bfull(nc);
  for (size_t j = 0; j < nc; ++j) {
    Rat x = eval_weight(m, tb.cpos[j], pt);
    Int xn = x.get_num(), xd = x.get_den();
    if (xn == xd) return std::nullopt;
    bpos[j] = fit_long(xd);
    bneg[j] = fit_long(-xn);
    bfull[j] = fit_long(xd - xn);
    D *= xd - xn;
  }
  // sub root system: positive coroots of the reduction's Levi
  lattice::RootDatum sub;
  sub.dim = m.datum.dim;
  for (int i : r.sub_simple_indices) sub.simples.push_back(m.datum.simples[size_t(i)]);
  sub.weyl_degrees = {1};
  sub.complete();
  std::set<std::vector<int>> sub_coroots;
  for (const auto& c : sub.positive_coroots) sub_coroots.insert(c.coords);
  // slots: numerator indices (Theta1+) and denominator pair slots (Phi1+)
  std::vector<uint8_t> th_slots;
  for (const auto& g : r.theta1_plus) th_slots.push_back(uint8_t(theta_index(g)));
  std::vector<uint8_t> ph_slots;  // code = 2*pair + sign
  for (size_t j = 0; j < nc; ++j)
    if (!sub_coroots.count(tb.cpos[j].coords)) ph_slots.push_back(uint8_t(2 * j));
  size_t n1 = th_slots.size(), p1 = ph_slots.size();

  struct St {
    uint64_t den;
    std::vector<uint8_t> th, ph;
  };
  std::vector<St> frontier{{0, th_slots, ph_slots}};
  mpz_class acc(0);
  size_t total = 0, len = 0;
  TermProduct tp;
  std::vector<char> hit_t(ntab), hit_p(nc);
  std::vector<int> psign(nc);
  while (!frontier.empty()) {
    total += frontier.size();
    for (const auto& st : frontier) {
      std::fill(hit_t.begin(), hit_t.end(), 0);
      std::fill(hit_p.begin(), hit_p.end(), 0);
      for (uint8_t k : st.th) hit_t[k] = 1;
      for (uint8_t c : st.ph) {
        hit_p[c >> 1] = 1;
        psign[c >> 1] = c & 1;
      }
      tp.reset();
      for (size_t k = 0; k < ntab; ++k) tp.mul(hit_t[k] ? N[k] : Dn[k]);
      if (!tp.zero)
        for (size_t j = 0; j < nc; ++j)
          tp.mul(hit_p[j] ? (psign[j] ? bneg[j] : bpos[j]) : bfull[j]);
      if (tp.zero) continue;
      tp.flush();
      if (tp.sign > 0)
        acc += tp.value;
      else
        acc -= tp.value;
    }
    std::unordered_map<uint64_t, St> next;
    for (const auto& st : frontier) {
      for (size_t i = 0; i < ns; ++i) {
        uint64_t nd = 0;
        for (size_t j = 0; j < nc; ++j) {
          uint64_t bit = ((st.den >> j) & 1) ^ tb.co_flip[i][j];
          nd |= bit << tb.co_perm[i][j];
        }
        if (size_t(__builtin_popcountll(nd)) != len + 1 || next.count(nd)) continue;
        St n2;
        n2.den = nd;
        n2.th.resize(n1);
        n2.ph.resize(p1);
        for (size_t k = 0; k < n1; ++k) n2.th[k] = tperm[i][st.th[k]];
        for (size_t k = 0; k < p1; ++k) {
          uint8_t pr = st.ph[k] >> 1, sg = st.ph[k] & 1;
          n2.ph[k] = uint8_t(2 * tb.co_perm[i][pr] + (sg ^ tb.co_flip[i][pr]));
        }
        next.emplace(nd, std::move(n2));
      }
    }
    frontier.clear();
    for (auto& [d, s] : next) frontier.push_back(std::move(s));
    ++len;
  }
  if (long(total) != m.datum.weyl_order())
    throw std::runtime_error("coset fold enumerated " + std::to_string(total));
  Rat out(acc, D * Int(r.wsub_order));
  out.canonicalize();
  return out;
}

std::optional<Rat> beta_value(const ModelSpec& m, const SatakePoint& pt) {
  return beta_value_at(m, pt, nullptr);
}

std::optional<Rat> beta_value_at(const ModelSpec& m, const SatakePoint& pt,
                                 const lattice::WeylElement* w) {
  auto at = [&](const Weight& g) {
    if (!w) return eval_weight(m, g, pt);
    return eval_weight(m, w->apply(g), pt);
  };
  Rat num(1), den(1);
  for (const auto& a : m.datum.positive_coroots) {
    num *= Rat(1) - pow_rat(pt.u, 2 * a.degree) * at(a);
  }
  for (const auto& g : models::theta_plus(m).elements) {
    Rat f = Rat(1) - pow_rat(pt.u, g.degree) * at(g);
    if (f == 0) return std::nullopt;
    den *= f;
  }
  return num / den;
}

std::optional<Rat> i_alpha_value(const ModelSpec& m, size_t root_index, const SatakePoint& pt) {
  return i_alpha_value_at(m, root_index, pt, nullptr);
}

std::optional<Rat> i_alpha_value_at(const ModelSpec& m, size_t root_index, const SatakePoint& pt,
                                    const lattice::WeylElement* w) {
  const auto& s = m.datum.simples[root_index];
  const auto& rd = m.root_data[root_index];
  auto at = [&](const Weight& g) {
    if (!w) return eval_weight(m, g, pt);
    return eval_weight(m, w->apply(g), pt);
  };
  Rat u = pt.u;
  Rat q = Rat(1) / (u * u);
  Rat ea = at(s.coroot);
  if (rd.type == RootType::Upsi) {
    // q^deg (1 - q^{-deg} e^{a})
    Rat qd = pow_rat(q, rd.degree);
    return qd * (Rat(1) - (Rat(1) / qd) * ea);
  }
  if (rd.degenerate) {
    Rat db = Rat(1) - (Rat(1) / q) * at(*rd.color);
    if (db == 0) return std::nullopt;
    return (q + 1) * (Rat(1) - (Rat(1) / q) * ea) / db;
  }
  Rat b1 = Rat(1) - u * at(*rd.color);
  Rat b2 = Rat(1) - u * at(*rd.color2);
  if (b1 == 0 || b2 == 0) return std::nullopt;
  if (rd.degree == 2) return q * q * (Rat(1) - Rat(1) / q) * (Rat(1) - ea / (q * q)) / (b1 * b2);
  return (q - 1) * (Rat(1) - ea / q) / (b1 * b2);
}

CheckResult b_ratio_consistency(const ModelSpec& m, size_t root_index,
                                const std::vector<SatakePoint>& pts) {
  CheckResult res;
  WeylElement w = lattice::weyl_simple(m.datum, int(root_index));
  for (size_t i = 0; i < pts.size(); ++i) {
    auto i0 = i_alpha_value(m, root_index, pts[i]);
    auto i1 = i_alpha_value_at(m, root_index, pts[i], &w);
    auto b0 = beta_value(m, pts[i]);
    auto b1 = beta_value_at(m, pts[i], &w);
    if (!i0 || !i1 || !b0 || !b1 || *i0 == 0 || *b0 == 0) {
      res.pass = false;
      res.detail = "pole at point " + std::to_string(i) + " for " +
                   m.root_data[root_index].name;
      return res;
    }
    if (*i1 / *i0 != *b1 / *b0) {
      res.pass = false;
      res.detail = "b-ratio mismatch at " + m.root_data[root_index].name + " point " +
                   std::to_string(i);
      return res;
    }
  }
  res.detail = m.root_data[root_index].name + " consistent at " + std::to_string(pts.size()) +
               " points";
  return res;
}

std::optional<RelcharValue> relchar(const ModelSpec& m, const SatakePoint& pt,
                                    std::string* pole_reason) {
  RelcharValue rv;
  Rat u = pt.u;
  // Delta_G(1)/Delta_{H0/Z}(1) at u, with zeta(d) = (1-u^{2d})^{-1} and
  // L(d,eta) = (1+u^{2d})^{-1}
  Rat delta(1);
  for (const auto& f : models::delta_ratio(m)) {
    Rat fac = Rat(1) + (f.eta ? Rat(1) : Rat(-1)) * pow_rat(u, 2 * f.degree);
    if (fac == 0) {
      if (pole_reason) *pole_reason = "pole of the Delta factor " + models::motive_str({f});
      return std::nullopt;
    }
    delta /= fac;
  }
  rv.delta_part = delta;
  // torus correction prod (1 - u^{2d})
  Rat torus(1);
  for (int d : m.torus_ad_degrees) torus *= Rat(1) - pow_rat(u, 2 * d);
  if (torus == 0) {
    if (pole_reason) *pole_reason = "pole of the adjoint torus factor";
    return std::nullopt;
  }
  // assembly (a): delta * torus * beta(theta) beta(theta^{-1})
  SatakePoint inv;
  inv.u = pt.u;
  for (const auto& t : pt.tau) inv.tau.push_back(Rat(1) / t);
  auto ba = beta_value(m, pt);
  auto bb = beta_value(m, inv);
  if (!ba || !bb) {
    if (pole_reason) *pole_reason = "pole of L(1/2, pi, rho_X) (a beta denominator vanishes)";
    return std::nullopt;
  }
  Rat assembly_a = delta * torus * (*ba) * (*bb);
  // assembly (b): delta * L(1/2)/L(1,Ad)
  Rat lhalf(1);
  for (const auto& g : m.theta) {
    Rat f = Rat(1) - pow_rat(u, g.degree) * eval_weight(m, g, pt);
    if (f == 0) {
      if (pole_reason)
        *pole_reason = "pole of L(1/2, pi, rho_X) at the weight " + g.str();
      return std::nullopt;
    }
    lhalf /= f;
  }
  Rat lad = Rat(1) / torus;
  for (const auto& a : m.datum.positive_coroots) {
    Rat ea = eval_weight(m, a, pt);
    Rat f1 = Rat(1) - pow_rat(u, 2 * a.degree) * ea;
    Rat f2 = Rat(1) - pow_rat(u, 2 * a.degree) / ea;
    if (f1 == 0 || f2 == 0) {
      if (pole_reason) *pole_reason = "pole of L(1, pi, Ad) at the coroot " + a.str();
      return std::nullopt;
    }
    lad /= f1 * f2;
  }
  rv.lhalf_part = lhalf;
  rv.lad_part = lad;
  Rat assembly_b = delta * lhalf / lad;
  if (assembly_a != assembly_b)
    throw std::runtime_error("relative-character assemblies disagree in " + m.name);
  rv.value = assembly_a;
  return rv;
}

namespace {

bool point_ok(const ModelSpec& m, const SatakePoint& pt) {
  if (pt.u == 0 || pt.u == 1 || pt.u == -1) return false;
  for (const auto& t : pt.tau)
    if (t == 0) return false;
  for (const auto& g : m.theta) {
    Rat y = eval_weight(m, g, pt);
    Rat ud = pow_rat(pt.u, g.degree);
    if (ud * y == 1 || ud == y) return false;
  }
  for (const auto& a : m.datum.positive_coroots) {
    Rat x = eval_weight(m, a, pt);
    if (x == 1) return false;
    Rat u2 = pow_rat(pt.u, 2 * a.degree);
    if (u2 * x == 1 || u2 == x) return false;
  }
  return true;
}

}  // namespace

std::vector<SatakePoint> sample_points(const ModelSpec& m, size_t count, uint64_t seed,
                                       int retries) {
  std::mt19937_64 rng(seed);
  std::vector<SatakePoint> out;
  for (size_t i = 0; i < count; ++i) {
    bool found = false;
    for (int r = 0; r < retries && !found; ++r) {
      SatakePoint pt = random_point(m, rng);
      if (point_ok(m, pt)) {
        out.push_back(pt);
        found = true;
      }
    }
    if (!found) throw std::runtime_error("failed to sample a pole-free point for " + m.name);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symbolic Weyl sum for |W| <= 384 via antisymmetrization over the common
// Weyl denominator: sum_w c_WS(w theta) = (-1)^{|Phi+|} A / Delta with
// A = sum_w sgn(w) w(e^{-rho_vee} prod_{Theta+}(1 - u^deg e^gamma)) and
// Delta = sum_w sgn(w) e^{w rho_vee}.
// ---------------------------------------------------------------------------

ratfun::RatFun weyl_sum_symbolic(const ModelSpec& m) {
  if (m.datum.weyl_order() > 384)
    throw std::invalid_argument("symbolic Weyl sum limited to |W| <= 384");
  if (m.tau_dim != m.datum.dim)
    throw std::invalid_argument("symbolic Weyl sum needs plain coordinates");
  int dim = m.datum.dim;
  auto elements = lattice::enumerate_weyl(m.datum);
  auto tplus = models::theta_plus(m).elements;

  // expand P = e^{-rho_vee} prod (1 - u^deg e^gamma) as exponent-vector map
  struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
      size_t h = 1469598103934665603ull;
      for (int x : v) {
        h ^= size_t(uint32_t(x));
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  using PolyMap = std::unordered_map<std::vector<int>, long, VecHash>;  // key: exps + [upow]
  PolyMap P;
  {
    std::vector<int> base = (-m.datum.rho_vee).coords;
    base.push_back(0);
    P[base] = 1;
    for (const auto& g : tplus) {
      PolyMap nxt;
      for (const auto& [e, c] : P) {
        nxt[e] += c;
        std::vector<int> e2 = e;
        for (int i = 0; i < dim; ++i) e2[size_t(i)] += g.coords[size_t(i)];
        e2.back() += g.degree;
        nxt[e2] -= c;
      }
      P = std::move(nxt);
    }
  }
  auto canon = [&](std::vector<int> v) {
    if (!m.constraint) return v;
    int up = v.back();
    v.pop_back();
    Weight w(std::move(v));
    v = m.canonical(w).coords;
    v.push_back(up);
    return v;
  };
  PolyMap A, Delta;
  for (const auto& w : elements) {
    for (const auto& [e, c] : P) {
      std::vector<int> img = w.matrix.apply_doubled(std::vector<int>(e.begin(), e.end() - 1));
      img.push_back(e.back());
      A[canon(std::move(img))] += w.sign * c;
    }
    std::vector<int> img = w.matrix.apply_doubled(m.datum.rho_vee.coords);
    img.push_back(0);
    Delta[canon(std::move(img))] += w.sign;
  }
  for (auto it = A.begin(); it != A.end();)
    it = it->second == 0 ? A.erase(it) : std::next(it);
  for (auto it = Delta.begin(); it != Delta.end();)
    it = it->second == 0 ? Delta.erase(it) : std::next(it);

  std::vector<int> rho_key = canon([&] {
    std::vector<int> v = m.datum.rho_vee.coords;
    v.push_back(0);
    return v;
  }());
  long delta_lead = Delta.at(rho_key);
  int sign = m.datum.positive_coroots.size() % 2 == 0 ? 1 : -1;
  // split A by u power and match c_k Delta
  std::map<int, long> cks;
  for (const auto& [e, c] : A) {
    std::vector<int> k = e;
    int up = k.back();
    k.back() = 0;
    std::vector<int> rk = rho_key;
    if (k == rk && c % delta_lead == 0) cks[up] = c / delta_lead;
  }
  PolyMap check;
  for (const auto& [e, c] : Delta)
    for (const auto& [up, ck] : cks) {
      std::vector<int> e2 = e;
      e2.back() = up;
      check[e2] += ck * c;
    }
  for (const auto& [e, c] : A) {
    auto it = check.find(e);
    long want = it == check.end() ? 0 : it->second;
    if (c != want) {
      Weight offending(std::vector<int>(e.begin(), e.end() - 1));
      throw std::runtime_error("residual theta-dependence in symbolic Weyl sum of " + m.name +
                               " at u^" + std::to_string(e.back()) + " monomial " +
                               offending.str());
    }
    if (it != check.end()) check.erase(it);
  }
  for (const auto& [e, c] : check)
    if (c != 0)
      throw std::runtime_error("missing monomial in symbolic Weyl sum of " + m.name);
  LaurentPoly result(0);
  for (const auto& [up, ck] : cks) result.add_term({up}, Rat(sign * ck));
  return RatFun::from_poly(result);
}

}  // namespace relchar::weylsum
