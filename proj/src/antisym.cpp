// The (W, sgn)-antisymmetrization checks behind the coset reduction lemmas:
// the reduction kernel  e^{-rho_vee} prod_{Phi2+}(1-e^{a}) prod_{Theta1+}(1-u e^{g})
// must have every u^k coefficient (1 <= k <= u_max) killed monomial by
// monomial by a reflection fixing the exponent vector, while the u^0
// coefficient antisymmetrizes to |W_sub| times the Weyl denominator.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "relchar/weylsum.hpp"

namespace relchar::weylsum {

using lattice::RatMat;
using lattice::reflect;
using lattice::Weight;

namespace {

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

// Weyl-denominator expansion of the sub system:
// prod_{a in Phi2+}(1 - e^{a}) = sum_{w in Wsub} sgn(w) e^{rho2 - w rho2}.
// Walks the orbit of rho2_vee carrying signs.
std::vector<std::pair<std::vector<int>, int>> sub_denominator_terms(
    const lattice::RootDatum& sub) {
  std::vector<RatMat> refl;
  for (const auto& s : sub.simples)
    refl.push_back(RatMat::reflection(s.root, s.coroot));
  std::unordered_set<std::vector<int>, VecHash> seen;
  std::vector<std::pair<std::vector<int>, int>> out, frontier;
  frontier.push_back({sub.rho_vee.coords, 1});
  seen.insert(sub.rho_vee.coords);
  out = frontier;
  while (!frontier.empty()) {
    std::vector<std::pair<std::vector<int>, int>> next;
    for (const auto& [v, sg] : frontier) {
      for (size_t i = 0; i < refl.size(); ++i) {
        std::vector<int> nv = refl[i].apply_doubled(v);
        if (seen.insert(nv).second) {
          next.push_back({nv, -sg});
          out.push_back({nv, -sg});
        }
      }
    }
    frontier = std::move(next);
  }
  // e^{rho2 - w rho2} with sign sgn(w)
  for (auto& [v, sg] : out)
    for (size_t i = 0; i < v.size(); ++i) v[i] = sub.rho_vee.coords[i] - v[i];
  return out;
}

}  // namespace

AntisymReport antisym_vanish_check(const ModelSpec& m, const ReductionSpec& r) {
  AntisymReport rep;
  rep.reduction = r.name;

  lattice::RootDatum sub;
  sub.dim = m.datum.dim;
  for (int i : r.sub_simple_indices) sub.simples.push_back(m.datum.simples[size_t(i)]);
  sub.weyl_degrees = {1};
  sub.complete();
  auto base = sub_denominator_terms(sub);
  if (long(base.size()) != r.wsub_order) {
    rep.detail = "sub Weyl order mismatch: got " + std::to_string(base.size());
    return rep;
  }
  // shift every base monomial by -rho_vee of the full system
  for (auto& [v, sg] : base)
    for (size_t i = 0; i < v.size(); ++i) v[i] -= m.datum.rho_vee.coords[size_t(i)];

  size_t dim = size_t(m.datum.dim);
  const auto& roots = m.datum.positive_roots;
  size_t nroots = roots.size();
  // precomputed pairings of bases and numerator weights with every root
  std::vector<std::vector<long>> base_dot(base.size(), std::vector<long>(nroots));
  for (size_t b = 0; b < base.size(); ++b)
    for (size_t j = 0; j < nroots; ++j) {
      long d = 0;
      for (size_t i = 0; i < dim; ++i)
        d += long(base[b].first[i]) * roots[j].coords[i];
      base_dot[b][j] = d;
    }
  size_t n1 = r.theta1_plus.size();
  if (n1 > 16) {
    rep.detail = "too many residual weights";
    return rep;
  }
  std::vector<std::vector<long>> g_dot(n1, std::vector<long>(nroots));
  for (size_t k = 0; k < n1; ++k)
    for (size_t j = 0; j < nroots; ++j) {
      long d = 0;
      for (size_t i = 0; i < dim; ++i)
        d += long(r.theta1_plus[k].coords[i]) * roots[j].coords[i];
      g_dot[k][j] = d;
    }

  // group subsets of Theta1+ by total u power
  std::map<int, std::vector<uint32_t>> subsets;
  for (uint32_t s = 0; s < (1u << n1); ++s) {
    int upow = 0;
    for (size_t k = 0; k < n1; ++k)
      if (s & (1u << k)) upow += r.theta1_plus[k].degree;
    if (upow <= r.u_max) subsets[upow].push_back(s);
  }

  // canonical dominant representative with sign, for the anchor coefficients
  auto canonical_orbit = [&](std::vector<int> v, int sg) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (const auto& s : m.datum.simples) {
        long d = 0;
        for (size_t i = 0; i < dim; ++i) d += long(v[i]) * s.root.coords[i];
        if (d < 0) {
          v = reflect(s.coroot, s.root, Weight(v)).coords;
          sg = -sg;
          moved = true;
        }
      }
    }
    if (m.constraint) v = m.canonical(Weight(v)).coords;
    return std::make_pair(v, sg);
  };

  bool all_ok = true;
  std::vector<long> subset_dot(nroots);
  std::vector<int> subset_sum(dim);
  for (const auto& [upow, subs] : subsets) {
    PowerReport pr;
    pr.u_power = upow;
    std::map<std::vector<int>, long> orbit_sums;
    for (uint32_t s : subs) {
      std::fill(subset_dot.begin(), subset_dot.end(), 0);
      std::fill(subset_sum.begin(), subset_sum.end(), 0);
      int bits = 0;
      for (size_t k = 0; k < n1; ++k)
        if (s & (1u << k)) {
          ++bits;
          for (size_t j = 0; j < nroots; ++j) subset_dot[j] += g_dot[k][j];
          for (size_t i = 0; i < dim; ++i) subset_sum[i] += r.theta1_plus[k].coords[i];
        }
      int coeff_sign = bits % 2 == 0 ? 1 : -1;
      for (size_t b = 0; b < base.size(); ++b) {
        ++pr.monomials;
        bool killed = false;
        const auto& bd = base_dot[b];
        for (size_t j = 0; j < nroots; ++j)
          if (bd[j] + subset_dot[j] == 0) {
            killed = true;
            break;
          }
        if (killed) {
          ++pr.killed;
          continue;
        }
        std::vector<int> v = base[b].first;
        for (size_t i = 0; i < dim; ++i) v[i] += subset_sum[i];
        auto [key, sg] = canonical_orbit(std::move(v), base[b].second * coeff_sign);
        orbit_sums[key] += sg;
      }
    }
    for (auto it = orbit_sums.begin(); it != orbit_sums.end();)
      it = it->second == 0 ? orbit_sums.erase(it) : std::next(it);
    if (upow == 0) {
      // anchor: survivors must assemble |Wsub| copies of the Weyl denominator
      bool anchor_ok = orbit_sums.size() == 1 && pr.killed == 0 &&
                       std::llabs(orbit_sums.begin()->second) == r.wsub_order;
      if (anchor_ok) {
        auto rho_orbit = canonical_orbit([&] {
          std::vector<int> v = m.datum.rho_vee.coords;
          for (auto& c : v) c = -c;
          return v;
        }(), 1);
        anchor_ok = orbit_sums.begin()->first == rho_orbit.first;
      }
      pr.verdict = anchor_ok ? "survives-with-coefficient" : "anchor-mismatch";
      if (!anchor_ok) all_ok = false;
      for (const auto& [k, c] : orbit_sums)
        if (pr.survivors.size() < 4) pr.survivors.push_back({k, c});
    } else {
      bool vanished = pr.killed == pr.monomials;
      pr.verdict = vanished ? "vanishes" : "survives-with-coefficient";
      if (!vanished) {
        all_ok = false;
        for (const auto& [k, c] : orbit_sums)
          if (pr.survivors.size() < 4) pr.survivors.push_back({k, c});
      }
    }
    rep.powers.push_back(std::move(pr));
  }
  rep.ok = all_ok;
  if (!all_ok) {
    std::ostringstream os;
    os << "discrepancy:";
    for (const auto& pr : rep.powers)
      if (pr.verdict != "vanishes" && pr.u_power != 0) {
        os << " u^" << pr.u_power;
        if (!pr.survivors.empty()) {
          os << " survivor (";
          for (size_t i = 0; i < pr.survivors[0].first.size(); ++i)
            os << (i ? "," : "") << pr.survivors[0].first[i];
          os << ")";
        }
      }
    rep.detail = os.str();
  } else {
    std::ostringstream os;
    os << "all u^1..u^" << r.u_max << " coefficients vanish monomially; u^0 reproduces "
       << r.wsub_order << " x Weyl denominator";
    rep.detail = os.str();
  }
  return rep;
}

}  // namespace relchar::weylsum
