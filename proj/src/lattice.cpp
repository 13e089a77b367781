#include "relchar/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace relchar::lattice {

Weight Weight::operator+(const Weight& o) const {
  if (coords.size() != o.coords.size()) throw std::invalid_argument("weight dimension mismatch");
  Weight w(*this);
  for (size_t i = 0; i < coords.size(); ++i) w.coords[i] += o.coords[i];
  return w;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

std::string Weight::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ",";
    if (coords[i] % 2 == 0)
      os << coords[i] / 2;
    else
      os << coords[i] << "/2";
  }
  os << ")";
  if (degree != 1) os << "[deg" << degree << "]";
  return os.str();
}

Rat pair(const Weight& a, const Weight& b) {
  if (a.coords.size() != b.coords.size()) throw std::invalid_argument("weight dimension mismatch");
  long dot = 0;
  for (size_t i = 0; i < a.coords.size(); ++i) dot += long(a.coords[i]) * b.coords[i];
  return make_rat(dot, 4);
}

long pair_int(const Weight& v, const Weight& alpha_vee) {
  if (v.coords.size() != alpha_vee.coords.size())
    throw std::invalid_argument("weight dimension mismatch");
  long dot = 0;
  for (size_t i = 0; i < v.coords.size(); ++i) dot += long(v.coords[i]) * alpha_vee.coords[i];
  if (dot % 4 != 0) throw std::domain_error("non-integral pairing: " + v.str());
  return dot / 4;
}

Weight reflect(const Weight& alpha, const Weight& alpha_vee, const Weight& v) {
  long k = pair_int(v, alpha_vee);
  Weight out(v);
  for (size_t i = 0; i < v.coords.size(); ++i) {
    long c = long(out.coords[i]) - k * alpha.coords[i];
    out.coords[i] = static_cast<int>(c);
  }
  return out;
}

RatMat RatMat::identity(int n) {
  RatMat m;
  m.n = n;
  m.den = 1;
  m.num.assign(size_t(n) * n, 0);
  for (int i = 0; i < n; ++i) m.num[size_t(i) * n + i] = 1;
  return m;
}

RatMat RatMat::reflection(const Weight& alpha, const Weight& alpha_vee) {
  int n = int(alpha.dim());
  // s(v) = v - (v . Avee / 4) A  in doubled coordinates, so the matrix is
  // I - A Avee^T / 4.
  RatMat m;
  m.n = n;
  m.den = 4;
  m.num.assign(size_t(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long v = (i == j ? 4 : 0);
      v -= long(alpha.coords[i]) * alpha_vee.coords[j];
      m.num[size_t(i) * n + j] = v;
    }
  m.normalize();
  return m;
}

void RatMat::normalize() {
  long g = den < 0 ? -den : den;
  for (long v : num) g = std::gcd(g, v < 0 ? -v : v);
  if (g > 1) {
    den /= g;
    for (long& v : num) v /= g;
  }
  if (den < 0) {
    den = -den;
    for (long& v : num) v = -v;
  }
}

RatMat RatMat::mul(const RatMat& o) const {
  if (n != o.n) throw std::invalid_argument("matrix dimension mismatch");
  RatMat m;
  m.n = n;
  m.den = den * o.den;
  m.num.assign(size_t(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long a = num[size_t(i) * n + k];
      if (a == 0) continue;
      for (int j = 0; j < n; ++j) m.num[size_t(i) * n + j] += a * o.num[size_t(k) * n + j];
    }
  m.normalize();
  return m;
}

std::vector<int> RatMat::apply_doubled(const std::vector<int>& v) const {
  if (int(v.size()) != n) throw std::invalid_argument("vector dimension mismatch");
  std::vector<int> out(v.size(), 0);
  for (int i = 0; i < n; ++i) {
    long acc = 0;
    for (int j = 0; j < n; ++j) acc += num[size_t(i) * n + j] * long(v[j]);
    if (acc % den != 0) throw std::domain_error("Weyl image leaves the lattice");
    out[i] = static_cast<int>(acc / den);
  }
  return out;
}

Rat RatMat::det() const {
  // Fraction-free Gaussian elimination on the scaled integer matrix.
  std::vector<Rat> a(num.size());
  for (size_t i = 0; i < num.size(); ++i) a[i] = make_rat(num[i], den);
  Rat d(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a[size_t(r) * n + c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a[size_t(piv) * n + j], a[size_t(c) * n + j]);
      d = -d;
    }
    Rat p = a[size_t(c) * n + c];
    d *= p;
    for (int r = c + 1; r < n; ++r) {
      Rat f = a[size_t(r) * n + c] / p;
      if (f == 0) continue;
      for (int j = c; j < n; ++j) a[size_t(r) * n + j] -= f * a[size_t(c) * n + j];
    }
  }
  return d;
}

namespace {

// Solves root = sum c_i * simple_i exactly; returns the coefficients or
// nothing if the root is outside the span.
std::optional<std::vector<Rat>> simple_coords(const std::vector<SimpleRoot>& simples,
                                              const Weight& root) {
  size_t k = simples.size(), dim = root.dim();
  std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(k + 1));
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = 0; j < k; ++j) m[i][j] = Rat(simples[j].root.coords[i]);
    m[i][k] = Rat(root.coords[i]);
  }
  size_t row = 0;
  std::vector<int> pivot_col(k, -1);
  for (size_t col = 0; col < k && row < dim; ++col) {
    size_t piv = row;
    while (piv < dim && m[piv][col] == 0) ++piv;
    if (piv == dim) continue;
    std::swap(m[row], m[piv]);
    Rat p = m[row][col];
    for (auto& v : m[row]) v /= p;
    for (size_t r = 0; r < dim; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (size_t c2 = col; c2 <= k; ++c2) m[r][c2] -= f * m[row][c2];
    }
    pivot_col[col] = int(row);
    ++row;
  }
  std::vector<Rat> sol(k, Rat(0));
  for (size_t col = 0; col < k; ++col)
    if (pivot_col[col] >= 0) sol[col] = m[size_t(pivot_col[col])][k];
  // residual check
  for (size_t i = 0; i < dim; ++i) {
    Rat acc(0);
    for (size_t j = 0; j < k; ++j) acc += sol[j] * Rat(simples[j].root.coords[i]);
    if (acc != Rat(root.coords[i])) return std::nullopt;
  }
  return sol;
}

}  // namespace

void RootDatum::complete() {
  // Reflection closure of the simple roots; each root keeps the degree of
  // the simple it came from (W preserves root-space dimensions).
  std::map<std::vector<int>, std::pair<Weight, Weight>> roots;  // root -> (root, coroot)
  std::vector<std::pair<Weight, Weight>> frontier;
  for (const auto& s : simples) {
    Weight r = s.root;
    r.degree = s.degree;
    roots[r.coords] = {r, s.coroot};
    frontier.push_back({r, s.coroot});
  }
  while (!frontier.empty()) {
    std::vector<std::pair<Weight, Weight>> next;
    for (const auto& [r, rv] : frontier) {
      for (const auto& s : simples) {
        Weight nr = reflect(s.root, s.coroot, r);
        Weight nrv = reflect(s.coroot, s.root, rv);
        nr.degree = r.degree;
        auto it = roots.find(nr.coords);
        if (it == roots.end()) {
          roots[nr.coords] = {nr, nrv};
          next.push_back({nr, nrv});
        }
      }
    }
    frontier = std::move(next);
  }
  positive_roots.clear();
  positive_coroots.clear();
  for (auto& [key, rc] : roots) {
    auto coeffs = simple_coords(simples, rc.first);
    if (!coeffs) throw std::domain_error("root outside simple span");
    bool nonneg = true, nonpos = true;
    for (const auto& c : *coeffs) {
      if (c < 0) nonneg = false;
      if (c > 0) nonpos = false;
    }
    if (!nonneg && !nonpos) throw std::domain_error("root not signed in simple basis");
    if (nonneg) {
      positive_roots.push_back(rc.first);
      Weight cv = rc.second;
      cv.degree = rc.first.degree;
      positive_coroots.push_back(cv);
    }
  }
  std::vector<int> acc(size_t(dim), 0), accv(size_t(dim), 0);
  for (size_t i = 0; i < positive_roots.size(); ++i) {
    for (int j = 0; j < dim; ++j) {
      acc[size_t(j)] += positive_roots[i].degree * positive_roots[i].coords[size_t(j)];
      accv[size_t(j)] += positive_coroots[i].coords[size_t(j)];
    }
  }
  for (int j = 0; j < dim; ++j) {
    if (acc[size_t(j)] % 2 != 0 || accv[size_t(j)] % 2 != 0)
      throw std::domain_error("rho is not in the half-integral lattice");
    acc[size_t(j)] /= 2;
    accv[size_t(j)] /= 2;
  }
  rho = Weight(acc);
  rho_vee = Weight(accv);
}

Rat RootDatum::delta_half_exponent(const Weight& lam) const { return pair(rho, lam); }

void RootDatum::validate() const {
  for (size_t i = 0; i < simples.size(); ++i) {
    for (size_t j = 0; j < simples.size(); ++j) {
      Rat c = pair(simples[i].root, simples[j].coroot);
      if (c.get_den() != 1) throw std::domain_error("non-integral Cartan entry");
      if (i == j && c != 2) throw std::domain_error("Cartan diagonal is not 2");
      if (i != j && c > 0) throw std::domain_error("positive off-diagonal Cartan entry");
    }
  }
  for (const auto& cv : positive_coroots) {
    std::vector<SimpleRoot> covee;
    for (const auto& s : simples) covee.push_back({s.name, s.coroot, s.root, s.degree});
    auto coeffs = simple_coords(covee, cv);
    if (!coeffs) throw std::domain_error("coroot outside simple-coroot span");
    for (const auto& c : *coeffs) {
      if (c < 0) throw std::domain_error("positive coroot with negative coefficient");
      if (c.get_den() != 1) throw std::domain_error("coroot with fractional coefficient");
    }
  }
}

WeylElement weyl_identity(const RootDatum& datum) {
  WeylElement w;
  w.matrix = RatMat::identity(datum.dim);
  w.sign = 1;
  return w;
}

WeylElement weyl_simple(const RootDatum& datum, int i) {
  WeylElement w;
  w.matrix = RatMat::reflection(datum.simples[size_t(i)].root, datum.simples[size_t(i)].coroot);
  w.sign = -1;
  w.word = {i};
  return w;
}

WeylElement weyl_compose(const WeylElement& a, const WeylElement& b) {
  WeylElement w;
  w.matrix = a.matrix.mul(b.matrix);
  w.sign = a.sign * b.sign;
  w.word = a.word;
  w.word.insert(w.word.end(), b.word.begin(), b.word.end());
  return w;
}

WeylElement weyl_from_word(const RootDatum& datum, const std::vector<int>& word) {
  WeylElement w = weyl_identity(datum);
  for (int i : word) w = weyl_compose(w, weyl_simple(datum, i));
  return w;
}

std::vector<WeylElement> enumerate_weyl(const RootDatum& datum, size_t cap) {
  std::vector<WeylElement> out;
  std::set<std::vector<int>> seen;
  std::vector<WeylElement> frontier;
  WeylElement id = weyl_identity(datum);
  seen.insert(datum.rho_vee.coords);
  out.push_back(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier) {
      for (size_t i = 0; i < datum.simples.size(); ++i) {
        WeylElement ws = weyl_compose(w, weyl_simple(datum, int(i)));
        std::vector<int> key = ws.matrix.apply_doubled(datum.rho_vee.coords);
        if (seen.insert(key).second) {
          if (out.size() >= cap) throw std::length_error("Weyl enumeration exceeded cap");
          out.push_back(ws);
          next.push_back(ws);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

size_t count_weyl(const RootDatum& datum, size_t cap) {
  // Orbit of rho_vee under left multiplication by simple reflections,
  // frontier-by-length with no global visited set: l(s_i w) = l(w)+1 iff
  // <alpha_i, w(rho_vee)> > 0, so an element is only ever produced from the
  // previous length and duplicates within a frontier are hashed away.
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
  std::unordered_set<std::vector<int>, VecHash> frontier;
  frontier.insert(datum.rho_vee.coords);
  size_t total = 0;
  std::vector<RatMat> refl;
  for (size_t i = 0; i < datum.simples.size(); ++i)
    refl.push_back(RatMat::reflection(datum.simples[i].root, datum.simples[i].coroot));
  while (!frontier.empty()) {
    total += frontier.size();
    if (total > cap) throw std::length_error("Weyl count exceeded cap");
    std::unordered_set<std::vector<int>, VecHash> next;
    next.reserve(frontier.size() * 2);
    for (const auto& v : frontier) {
      for (size_t i = 0; i < refl.size(); ++i) {
        long dot = 0;
        const auto& a = datum.simples[i].root.coords;
        for (size_t j = 0; j < v.size(); ++j) dot += long(a[j]) * v[j];
        if (dot > 0) next.insert(refl[i].apply_doubled(v));
      }
    }
    frontier = std::move(next);
  }
  return total;
}

}  // namespace relchar::lattice
