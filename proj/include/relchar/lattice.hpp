#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "relchar/rational.hpp"

namespace relchar::lattice {

// A weight (or root, or coweight) in the model's coordinate system.  Half
// integer coordinates are stored doubled, so coords = {1,-1} means
// (e1 - e2)/2.  The degree is the dimension of the weight space (2 for the
// ±e_i weights of the GU models, 1 everywhere else).
struct Weight {
  std::vector<int> coords;
  int degree = 1;

  Weight() = default;
  explicit Weight(std::vector<int> c, int deg = 1) : coords(std::move(c)), degree(deg) {}

  size_t dim() const { return coords.size(); }
  bool is_zero() const {
    for (int c : coords)
      if (c != 0) return false;
    return true;
  }
  Weight operator-() const {
    Weight w(*this);
    for (int& c : w.coords) c = -c;
    return w;
  }
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  bool operator==(const Weight& o) const { return coords == o.coords; }
  bool operator<(const Weight& o) const { return coords < o.coords; }
  std::string str() const;
};

// <a,b> via the standard dot product of the model's orthogonal coordinates;
// the /4 undoes the doubling of both sides.
Rat pair(const Weight& a, const Weight& b);

// Integer pairing <v, alpha_vee> for crystallographic pairs; throws if the
// value is not an integer (which would take v outside the lattice).
long pair_int(const Weight& v, const Weight& alpha_vee);

// s_alpha(v) = v - <v, alpha_vee> alpha.
Weight reflect(const Weight& alpha, const Weight& alpha_vee, const Weight& v);

// Square matrix with exact rational entries a[i][j] = num[i*n+j]/den.
// Weyl matrices are integral (den = 1) for all classical models; the E7
// Bourbaki coordinates need den = 4.
struct RatMat {
  int n = 0;
  long den = 1;
  std::vector<long> num;

  static RatMat identity(int n);
  static RatMat reflection(const Weight& alpha, const Weight& alpha_vee);
  RatMat mul(const RatMat& o) const;
  std::vector<int> apply_doubled(const std::vector<int>& v) const;
  Rat det() const;
  void normalize();
  bool operator==(const RatMat& o) const { return n == o.n && den == o.den && num == o.num; }
};

struct WeylElement {
  RatMat matrix;
  int sign = 1;                // det restricted to the root span
  std::vector<int> word;       // reduced-ish word in simple reflections

  Weight apply(const Weight& w) const {
    return Weight(matrix.apply_doubled(w.coords), w.degree);
  }
};

struct SimpleRoot {
  std::string name;
  Weight root;
  Weight coroot;
  int degree = 1;  // root-space dimension
};

struct RootDatum {
  int dim = 0;
  std::vector<SimpleRoot> simples;
  std::vector<Weight> positive_roots;    // degree field carries dim of root space
  std::vector<Weight> positive_coroots;  // aligned with positive_roots
  Weight rho;       // degree-weighted half sum of positive roots (doubled coords)
  Weight rho_vee;   // half sum of positive coroots
  std::vector<int> weyl_degrees;  // invariant degrees; product = |W|

  // Fills positive_roots/positive_coroots/rho/rho_vee by reflection closure
  // of the simple roots.
  void complete();

  long weyl_order() const {
    long n = 1;
    for (int d : weyl_degrees) n *= d;
    return n;
  }
  // <rho, lam>; the value of delta_B^{1/2} at e^lam(varpi) is q^{exponent}
  // in the orientation fixed by the GSp6 value table.
  Rat delta_half_exponent(const Weight& lam) const;

  // Checks the Cartan-matrix and coroot-positivity invariants; throws on
  // inconsistent data.
  void validate() const;
};

// Full enumeration with matrices; aborts past cap.
std::vector<WeylElement> enumerate_weyl(const RootDatum& datum, size_t cap = 4000000);

// Streaming count (dedups on the image of rho_vee, stores no matrices).
size_t count_weyl(const RootDatum& datum, size_t cap = 4000000);

WeylElement weyl_identity(const RootDatum& datum);
WeylElement weyl_simple(const RootDatum& datum, int i);
WeylElement weyl_compose(const WeylElement& a, const WeylElement& b);
WeylElement weyl_from_word(const RootDatum& datum, const std::vector<int>& word);

}  // namespace relchar::lattice
