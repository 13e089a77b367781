#pragma once

#include <map>
#include <string>
#include <vector>

#include "relchar/ratfun.hpp"

namespace relchar::padic {

using ratfun::LaurentMono;
using ratfun::LaurentPoly;
using ratfun::RatFun;

// One valuation-pattern cell of an integration domain with its exact measure
// (a rational function of u, with u^2 = q^{-1}).
struct ShellMeasure {
  std::string pattern;
  RatFun measure;  // nvars 0, in u only
};

// vol(O) = 1 partition of O by valuation, depth cells then the tail; the sum
// of measures is checked to be exactly 1.
bool shell_partition_unit_test(int depth = 8);

// The three cells of the rank-one integral as an explicit shell partition
// of O; their measures sum to vol(O) = 1.
std::vector<ShellMeasure> rank_one_shells();

// Exhaustive residue counting of valuation patterns modulo p^m.
struct ResidueCount {
  long p = 0;
  int level = 0;
  // counts[(a,b)] = #{(x,y) mod p^m : min(v(x),v(y)) = a, v(f(x,y)) = b},
  // with valuations capped at the level.
  std::map<std::pair<int, int>, long> counts;
};

// Counts cells of min(v(x),v(y)) and v(x^2 - eps y^2 - x) mod p^m.
ResidueCount count_conic_cells(long p, long eps, int level);

// #{(x,y) in F_q^2 : x^2 - eps y^2 - x = 0} and the number of nonzero ones.
std::pair<long, long> conic_point_count(long p, long eps);

// q * int_O (chi1 |.|^{-1/2})(1+a) (chi2 |.|^{-1/2})(a) da by the three-cell
// shell decomposition, as a rational function of (s1, s2, u).
RatFun rank_one_integral();
// the closed form of the same integral as displayed in the reduction lemma
RatFun rank_one_closed_form();

// 1 + q^2 int_{O^2} sigma(x^2 - eps y^2 - x) eta(x + y sqrt(eps)) dx dy as a
// rational function of (s_sigma, s_eta, u) at the fixed prime power q = p,
// assembled from residue counts with stabilization-certified geometric tails.
RatFun quad_ext_integral_61(long p, long eps, int level = 4);
RatFun quad_ext_closed_form_61(long p);

struct QuadExt62Result {
  RatFun total;            // in s_eta (vars {s_eta}, plus u unused)
  Rat cell_x;              // the X-cell value, expected (q^2-1)/q^2
  RatFun cell_pix;         // the pi X-cell, expected -s_eta/q^2
  std::vector<Rat> deeper; // k >= 2 cells, expected all zero
};

// 1 + q^2 int eta(x+sqrt(eps) y) |x^2-eps y^2|^{-1} phi0(2x/(x^2-eps y^2))
QuadExt62Result quad_ext_integral_62(long p, long eps, int level = 4);
RatFun quad_ext_closed_form_62(long p);

struct PhiFourierResult {
  bool pass = true;
  std::string detail;
  std::vector<std::pair<int, Rat>> values;  // valuation -> exact phi0 value
};

// phi0 = Fourier transform of 1_{O^x}/vol(O^x): verifies the three-piece
// formula by exact cyclotomic character sums and by complex sums at 1e-9.
PhiFourierResult phi_fourier_check(long p, int m_max = 3);

struct IAlphaUpsiResult {
  bool pass = true;
  std::string detail;
  RatFun value;  // in (t, u)
};

// 1 + q int_O t^{v(a)} q^{v(a)} phi0(a^{-1}) da == q (1 - q^{-1} t), the
// Type-(U,psi) local integral; only the shells v(a) in {0,1} contribute.
IAlphaUpsiResult i_alpha_upsi_check();

}  // namespace relchar::padic
