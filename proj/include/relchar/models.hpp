#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relchar/lattice.hpp"
#include "relchar/ratfun.hpp"

namespace relchar::models {

using lattice::Weight;

enum class RootType { T, Upsi };

// One simple root of the spherical datum, with its type and (for Type T)
// virtual weighted colors.  degenerate marks the GU roots whose two colors
// coincide (the (q+1) form); they carry a single color.
struct SimpleRootData {
  std::string name;
  RootType type = RootType::T;
  int degree = 1;
  bool degenerate = false;
  std::optional<Weight> color;   // beta_alpha^vee
  std::optional<Weight> color2;  // alpha^vee - beta_alpha^vee
};

struct MotiveFactor {
  int degree = 1;
  bool eta = false;  // quadratic twist
  bool operator==(const MotiveFactor& o) const { return degree == o.degree && eta == o.eta; }
  bool operator<(const MotiveFactor& o) const {
    return degree != o.degree ? degree < o.degree : eta < o.eta;
  }
};

std::string motive_str(const std::vector<MotiveFactor>& fs);

// Coset/antisymmetrization reduction data: the sub root system is generated
// by the named simple roots, theta1_plus is the residual numerator multiset,
// and the u-power coefficients 1..u_max of the reduction kernel must vanish.
struct ReductionSpec {
  std::string name;
  std::vector<int> sub_simple_indices;
  std::vector<Weight> theta1_plus;
  long wsub_order = 1;
  int u_max = 0;
};

struct ModelSpec {
  std::string name;
  std::string rho_x;  // description of the dual-group representation
  lattice::RootDatum datum;
  std::vector<SimpleRootData> root_data;  // aligned with datum.simples
  std::vector<Weight> theta;              // weight multiset of rho_X, with degrees
  std::optional<Weight> constraint;       // torus product constraint (doubled coords)
  std::vector<MotiveFactor> motive_g;
  std::vector<MotiveFactor> motive_h0modz;
  std::vector<int> torus_ad_degrees;      // adjoint torus factors (1 -> zeta(1), 2 -> zeta_E(1))
  ratfun::RatFun expected_constant;       // value of sum_w c_WS(w theta), in u alone
  std::vector<ReductionSpec> reductions;
  int tau_dim = 0;  // number of torus half-coordinate variables

  // Canonical representative of a weight modulo the constraint line.
  Weight canonical(const Weight& w) const;
  Weight negate(const Weight& w) const { return canonical(-w); }
  const Weight* find_theta(const Weight& w) const;  // nullptr if not in Theta
  // tau exponents of a weight (doubled coordinates; E7 folds e8-e7 into the
  // last variable).
  std::vector<int> tau_exponents(const Weight& w) const;
  int theta_dim_weighted() const;
};

struct ThetaPlus {
  std::vector<Weight> elements;  // canonical, sorted
  int weighted_size() const;
};

// Closure of the colors under the two reflection conditions, with the
// post-verification that each simple reflection removes exactly the colors
// (Type T) or nothing (Type (U,psi)), and that Theta+ ⊔ -Theta+ = Theta.
ThetaPlus theta_plus(const ModelSpec& m);

// Independent oracle: exhaustive search over one-per-pair sign choices of
// Theta for subsets satisfying the conditions; must find exactly one.
ThetaPlus brute_force_theta_plus(const ModelSpec& m);

// Multiset difference of the two Gross-motive degree lists, as zeta/L factors.
std::vector<MotiveFactor> delta_ratio(const ModelSpec& m);

const std::vector<ModelSpec>& catalog();
const ModelSpec& model(const std::string& name);
std::vector<std::string> model_names();

// JSON interchange (schema shared by `models show` and RELCHAR_CATALOG).
std::string catalog_to_json(bool with_derived = true);
std::string model_to_json(const ModelSpec& m, bool with_derived = true);
std::vector<ModelSpec> catalog_from_json(const std::string& text);
// Replaces the embedded catalog (used by the RELCHAR_CATALOG override).
void override_catalog(std::vector<ModelSpec> models);
uint64_t catalog_version_hash();

}  // namespace relchar::models
