// Command-line surface: catalog inspection, verification suites, and
// relative-character evaluation with machine-readable output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "relchar/verify.hpp"
#include "relchar/weylsum.hpp"

using namespace relchar;

namespace {

int load_catalog_override() {
  const char* path = std::getenv("RELCHAR_CATALOG");
  if (!path || !*path) return 0;
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open RELCHAR_CATALOG file '" << path << "'\n";
    return 1;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    models::override_catalog(models::catalog_from_json(ss.str()));
  } catch (const std::exception& e) {
    std::cerr << "error: invalid catalog override: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

std::vector<Rat> parse_rat_list(const std::string& s) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto r = parse_rat(item);
    if (!r) throw std::invalid_argument("bad rational '" + item + "'");
    out.push_back(*r);
  }
  return out;
}


int cmd_models_list(bool json_out) {
  if (json_out) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& m : models::catalog())
      a.push_back({{"name", m.name},
                   {"rho_x", m.rho_x},
                   {"dim_rho_x", m.theta_dim_weighted()},
                   {"weyl_order", m.datum.weyl_order()},
                   {"delta", models::motive_str(models::delta_ratio(m))}});
    std::cout << a.dump(2) << "\n";
  } else {
    for (const auto& m : models::catalog())
      std::cout << m.name << "  |W| = " << m.datum.weyl_order()
                << "  dim rho_X = " << m.theta_dim_weighted()
                << "  Delta = " << models::motive_str(models::delta_ratio(m)) << "\n";
  }
  return 0;
}

int cmd_models_show(const std::string& name, bool json_out) {
  const models::ModelSpec* mp = nullptr;
  try {
    mp = &models::model(name);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const auto& m = *mp;
  if (json_out) {
    std::cout << models::model_to_json(m) << "\n";
    return 0;
  }
  std::cout << m.name << ": rho_X = " << m.rho_x << "\n";
  std::cout << "  coordinates: " << m.datum.dim << " (tau variables: " << m.tau_dim << ")\n";
  if (m.constraint) std::cout << "  torus constraint direction: " << m.constraint->str() << "\n";
  std::cout << "  simple roots:\n";
  for (size_t i = 0; i < m.root_data.size(); ++i) {
    const auto& rd = m.root_data[i];
    std::cout << "    " << rd.name << "  " << m.datum.simples[i].root.str() << "  type "
              << (rd.type == models::RootType::T ? "T" : "(U,psi)");
    if (rd.degree == 2) std::cout << "  (2-dimensional root space)";
    if (rd.color) std::cout << "  beta = " << rd.color->str();
    if (rd.color2) std::cout << ", coroot - beta = " << rd.color2->str();
    std::cout << "\n";
  }
  auto tp = models::theta_plus(m);
  std::cout << "  |Theta| = " << m.theta.size() << " (" << m.theta_dim_weighted()
            << " with multiplicity), Theta+ (" << tp.elements.size() << "):\n";
  for (const auto& w : tp.elements) std::cout << "    " << w.str() << "\n";
  std::cout << "  Delta_{X,v} = " << models::motive_str(models::delta_ratio(m)) << "\n";
  std::cout << "  sum_W c_WS = " << m.expected_constant.str({"u"}) << "  (u = q^{-1/2})\n";
  return 0;
}

int cmd_verify(const std::string& suite, const verify::Options& opt, bool json_out) {
  std::string cmd = "verify " + suite + " --model " + opt.model_filter + " --points " +
                    std::to_string(opt.points) + " --seed " + std::to_string(opt.seed);
  verify::Report rep;
  try {
    rep = verify::run_report(cmd, suite, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "available suites:";
    for (const auto& s : verify::suite_names()) std::cerr << " " << s;
    std::cerr << "\n";
    return 2;
  }
  std::cout << (json_out ? rep.to_json() + "\n" : rep.to_text());
  return rep.ok() ? 0 : 1;
}

int cmd_relchar(const std::string& model_name, const std::string& q_str,
                const std::string& theta_str, bool random_theta, uint64_t seed,
                const std::string& t_str, int jobs, bool json_out) {
  const models::ModelSpec* mp = nullptr;
  try {
    mp = &models::model(model_name);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const auto& m = *mp;
  weylsum::SatakePoint pt;
  try {
    if (random_theta || theta_str.empty()) {
      pt = weylsum::sample_points(m, 1, seed)[0];
    } else {
      pt.tau = parse_rat_list(theta_str);
      if (int(pt.tau.size()) != m.tau_dim)
        throw std::invalid_argument("expected " + std::to_string(m.tau_dim) +
                                    " tau values for " + m.name);
    }
    auto q = parse_rat(q_str);
    if (!q || *q <= 0) throw std::invalid_argument("bad q");
    // u = q^{-1/2}: require q to be the square of a rational
    Int num = q->get_num(), den = q->get_den(), sn, sd;
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
      throw std::invalid_argument("q must be a square of a rational for exact q^{-1/2}");
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    pt.u = Rat(sd, sn);
    pt.u.canonicalize();
    if (m.constraint) {
      const auto& z = m.constraint->coords;
      Rat prod(1);
      for (int i = 0; i < m.tau_dim; ++i) prod *= pow_rat(pt.tau[size_t(i)], z[size_t(i)]);
      if (prod != 1) {
        std::cerr << "error: theta violates the torus constraint of " << m.name
                  << " (prod tau^Z = " << rat_str(prod) << ", expected 1)\n";
        return 2;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::string pole;
  auto rv = weylsum::relchar(m, pt, &pole);
  nlohmann::json j;
  j["model"] = m.name;
  nlohmann::json taus = nlohmann::json::array();
  for (const auto& t : pt.tau) taus.push_back(rat_str(t));
  j["tau"] = taus;
  j["u"] = rat_str(pt.u);
  if (!rv) {
    j["pole"] = pole;
    if (json_out) std::cout << j.dump(2) << "\n";
    else std::cout << "pole: " << pole << "\n";
    return 3;
  }
  j["value"] = rat_str(rv->value);
  j["delta_part"] = rat_str(rv->delta_part);
  j["delta_factors"] = models::motive_str(models::delta_ratio(m));
  j["l_half"] = rat_str(rv->lhalf_part);
  j["l_one_ad"] = rat_str(rv->lad_part);
  if (!t_str.empty()) {
    try {
      auto coords = parse_rat_list(t_str);
      std::vector<int> doubled;
      for (const auto& c : coords) {
        Rat d = c * 2;
        if (d.get_den() != 1) throw std::invalid_argument("coweight must be half-integral");
        doubled.push_back(int(mpz_get_si(d.get_num().get_mpz_t())));
      }
      auto v = weylsum::ws_value(m, lattice::Weight(doubled), pt, jobs);
      j["ws_value"] = v ? rat_str(*v) : "pole";
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  if (json_out) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << m.name << " at u = " << rat_str(pt.u) << ":\n";
    std::cout << "  I(phi_theta) = " << rat_str(rv->value) << "\n";
    std::cout << "  Delta part   = " << rat_str(rv->delta_part) << "  ["
              << models::motive_str(models::delta_ratio(m)) << "]\n";
    std::cout << "  L(1/2,rho_X) = " << rat_str(rv->lhalf_part) << "\n";
    std::cout << "  L(1,Ad)      = " << rat_str(rv->lad_part) << "\n";
    if (j.contains("ws_value"))
      std::cout << "  WS value     = " << j["ws_value"].get<std::string>() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (int rc = load_catalog_override()) return rc;
  CLI::App app{"exact computation and verification of unramified local relative characters "
               "for the strongly tempered spherical varieties"};
  app.require_subcommand(1);
  bool json_out = false;
  app.add_flag("--json", json_out, "machine-readable JSON output");

  auto* models_cmd = app.add_subcommand("models", "catalog inspection");
  models_cmd->require_subcommand(1);
  auto* list_cmd = models_cmd->add_subcommand("list", "list the catalog");
  auto* export_cmd =
      models_cmd->add_subcommand("export", "emit the full catalog in the interchange schema");
  std::string show_name;
  auto* show_cmd = models_cmd->add_subcommand("show", "show one model");
  show_cmd->add_option("name", show_name, "model name")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify::Options opt;
  verify_cmd->add_option("suite", suite, "thetaplus | weylsum | antisym | padic | matrix | all")
      ->required();
  verify_cmd->add_option("--model", opt.model_filter, "restrict to one model");
  verify_cmd->add_option("--points", opt.points, "random points per check");
  verify_cmd->add_option("--seed", opt.seed, "sampling seed");
  verify_cmd->add_option("--jobs", opt.jobs, "worker count for the Weyl folds");
  verify_cmd->add_flag("--skip-slow", opt.skip_slow, "skip the full E7 folds");

  auto* relchar_cmd = app.add_subcommand("relchar", "evaluate the relative character");
  std::string model_name, q_str = "9", theta_str, t_str;
  bool random_theta = false;
  uint64_t seed = 1;
  int jobs = 1;
  relchar_cmd->add_option("model", model_name, "model name")->required();
  relchar_cmd->add_option("--q", q_str, "residue cardinality (a rational square)");
  relchar_cmd->add_option("--theta", theta_str, "comma-separated tau values");
  relchar_cmd->add_flag("--random", random_theta, "sample a random pole-free theta");
  relchar_cmd->add_option("--seed", seed, "sampling seed");
  relchar_cmd->add_option("--t", t_str, "dominant coweight for the WS value (comma-separated)");
  relchar_cmd->add_option("--jobs", jobs, "worker count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list_cmd->parsed()) return cmd_models_list(json_out);
    if (export_cmd->parsed()) {
      std::cout << models::catalog_to_json(false) << "\n";
      return 0;
    }
    if (show_cmd->parsed()) return cmd_models_show(show_name, json_out);
    if (verify_cmd->parsed()) return cmd_verify(suite, opt, json_out);
    if (relchar_cmd->parsed())
      return cmd_relchar(model_name, q_str, theta_str, random_theta, seed, t_str, jobs, json_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
