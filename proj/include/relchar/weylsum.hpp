#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "relchar/models.hpp"

namespace relchar::weylsum {

using lattice::Weight;
using models::ModelSpec;
using models::ReductionSpec;

// An unramified character of the torus, given by exact nonzero rational
// values of the half-coordinates tau_i (theta_i = tau_i^2) and of u = q^{-1/2}.
struct SatakePoint {
  std::vector<Rat> tau;
  Rat u;
};

// Random constraint-respecting point.  E7 points are sampled from squares so
// that Weyl transforms (which involve half-integral coweight exponents there)
// stay rational.
SatakePoint random_point(const ModelSpec& m, std::mt19937_64& rng);

// The theta = delta_B^{1/2} substitution: e^mu(theta) = q^{<rho,mu>} with
// q = s^4 (so all half powers of q are exact).
SatakePoint delta_half_point(const ModelSpec& m, const Rat& s);

// e^{gamma}(theta) as an exact scalar; errors on zero assignments.
Rat eval_weight(const ModelSpec& m, const Weight& gamma, const SatakePoint& pt);

// theta -> w.theta, i.e. e^mu(new) = e^{w^{-1} mu}(old) for all mu.
SatakePoint transform_point(const ModelSpec& m, const lattice::WeylElement& w,
                            const SatakePoint& pt);

// c_WS(w theta) for a single Weyl element; nullopt on a denominator pole.
std::optional<Rat> c_ws(const ModelSpec& m, const lattice::WeylElement& w, const SatakePoint& pt);

// Exact sum of c_WS(w theta) over the whole Weyl group (streaming fold,
// deterministic and independent of the job count).  nullopt on pole.
std::optional<Rat> weyl_sum(const ModelSpec& m, const SatakePoint& pt, int jobs = 1);

// The same sum evaluated at w.theta, with every weight argument twisted on
// the weight side (works for E7 where the tau transform leaves the field).
std::optional<Rat> weyl_sum_image(const ModelSpec& m, const lattice::WeylElement* w,
                                  const SatakePoint& pt, int jobs = 1);

// Exact coset sum  sum_{w in W/W_sub} prod_{Theta1+}(1-u^deg e^{w^-1 g}) /
// prod_{Phi1+}(1 - e^{w^-1 a}); nullopt on pole.
std::optional<Rat> coset_sum(const ModelSpec& m, const ReductionSpec& r, const SatakePoint& pt,
                             int jobs = 1);

// Normalized Whittaker-Shintani value at the dominant coweight t:
// sum_w c_WS(w theta) e^{w^{-1} t}(theta) q^{-<rho, t>}.
std::optional<Rat> ws_value(const ModelSpec& m, const Weight& t, const SatakePoint& pt,
                            int jobs = 1);

// Full symbolic Weyl sum over the common Weyl denominator; requires
// |W| <= 384.  Throws with the offending numerator if any theta-dependence
// survives.
ratfun::RatFun weyl_sum_symbolic(const ModelSpec& m);

// beta(theta) = prod_{Phi+}(1-u^{2 deg} e^{a})/prod_{Theta+}(1-u^{deg} e^{g}).
std::optional<Rat> beta_value(const ModelSpec& m, const SatakePoint& pt);
std::optional<Rat> beta_value_at(const ModelSpec& m, const SatakePoint& pt,
                                 const lattice::WeylElement* w);

// I_alpha(theta) from the closed form selected by the root's type.
std::optional<Rat> i_alpha_value(const ModelSpec& m, size_t root_index, const SatakePoint& pt);
std::optional<Rat> i_alpha_value_at(const ModelSpec& m, size_t root_index, const SatakePoint& pt,
                                    const lattice::WeylElement* w);

struct CheckResult {
  bool pass = true;
  std::string detail;
};

// I_alpha(w theta)/I_alpha(theta) == beta(w theta)/beta(theta) at each point.
CheckResult b_ratio_consistency(const ModelSpec& m, size_t root_index,
                                const std::vector<SatakePoint>& pts);

// sum_w c_WS(w theta) == expected_constant at each point (with bounded
// resampling on poles handled by the caller).
CheckResult weyl_sum_constant(const ModelSpec& m, const std::vector<SatakePoint>& pts,
                              int jobs = 1);

struct RelcharValue {
  Rat value;       // the common value of both assemblies
  Rat delta_part;  // Delta_G(1)/Delta_{H0/Z}(1) at the point's u
  Rat lhalf_part;  // L(1/2, pi, rho_X)
  Rat lad_part;    // L(1, pi, Ad)
};

// Computes the relative character by both assemblies and checks they agree;
// nullopt means a pole (pole_reason says which factor).
std::optional<RelcharValue> relchar(const ModelSpec& m, const SatakePoint& pt,
                                    std::string* pole_reason = nullptr);

// Draws constraint-respecting pole-free points, resampling up to `retries`.
std::vector<SatakePoint> sample_points(const ModelSpec& m, size_t count, uint64_t seed,
                                       int retries = 50);

// --- antisymmetrization reductions (implemented in antisym.cpp) ---

struct PowerReport {
  int u_power = 0;
  size_t monomials = 0;
  size_t killed = 0;
  std::vector<std::pair<std::vector<int>, long>> survivors;  // exponent vec, signed count
  std::string verdict;  // "vanishes" or "survives-with-coefficient"
};

struct AntisymReport {
  std::string reduction;
  bool ok = false;
  std::string detail;
  std::vector<PowerReport> powers;
};

AntisymReport antisym_vanish_check(const ModelSpec& m, const ReductionSpec& r);

}  // namespace relchar::weylsum
