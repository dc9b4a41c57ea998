// bogo: command-line front end for the Bogoliubov engine.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bogo/diagonal.hpp"
#include "bogo/fock.hpp"
#include "bogo/implementer.hpp"
#include "bogo/infimum.hpp"
#include "bogo/io.hpp"
#include "bogo/oracle.hpp"
#include "bogo/symplectic.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;

struct RunConfig {
  std::string command;
  std::string model_path;
  std::string diagonal_path;
  double t = 0.1;
  int cutoff = 20;
  int sector = -1;
  int oracle_cutoff = -1;
  double f_norm = 0.3;
  double tol = 1e-12;
  std::string cutoffs = "1e3,1e4,1e5,1e6";
  std::string brute_cutoffs;
  unsigned seed = 12345;
  std::string output;
  bool natural = false;
};

std::vector<long long> parse_cutoff_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    char* end = nullptr;
    const double x = std::strtod(item.c_str(), &end);
    if (end == item.c_str() || *end != '\0' || !(x >= 1) || x != std::floor(x) || x > 1e9) {
      throw bogo::InputError("bad cutoff '" + item + "'");
    }
    out.push_back(static_cast<long long>(x));
  }
  if (out.empty()) throw bogo::InputError("empty cutoff list");
  return out;
}

bogo::CVector random_vector(int d, double norm, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  bogo::CVector f(d);
  for (int i = 0; i < d; ++i) f(i) = bogo::Complex{g(rng), g(rng)};
  return f * (norm / f.norm());
}

struct CheckList {
  json items = json::array();
  bool all = true;
  void add(const std::string& name, double value, double tol) {
    const bool pass = value <= tol;
    all = all && pass;
    items.push_back(json{{"name", name}, {"value", value}, {"tol", tol}, {"pass", pass}});
  }
};

double unitarity_residual(const bogo::FockOperator& u, int sector) {
  const bogo::CMatrix& m = u.matrix();
  const bogo::CMatrix r = m.adjoint() * m - bogo::CMatrix::Identity(m.rows(), m.cols());
  return bogo::sector_norm(*u.space(), r, sector);
}

int default_oracle_cutoff(int d, int cutoff) {
  int oc = 3 * cutoff;
  while (oc > cutoff && bogo::basis_size(d, oc) > 3000) --oc;
  return oc;
}

int cmd_check(const RunConfig& c, json& out) {
  const bogo::Generator g = bogo::io::generator_from_json(bogo::io::read_file(c.model_path));
  const bogo::ValidationReport r = bogo::validate_generator(g.h, g.v, c.tol);
  out["validation"] = bogo::io::to_json(r);
  if (r.ok) out["symbol_min"] = bogo::classical_symbol_min(g);
  return r.ok ? kExitOk : kExitCheckFailed;
}

int cmd_evolve(const RunConfig& c, json& out) {
  const bogo::Generator g = bogo::io::generator_from_json(bogo::io::read_file(c.model_path));
  const bogo::SymplecticMap s = bogo::evolve(g, c.t);
  const double res = bogo::check_symplectic(s);
  const bogo::KLOperators kl = bogo::kl_operators(s);
  out["map"] = bogo::io::to_json(s);
  out["symplectic_residual"] = res;
  out["K"] = bogo::io::to_json(kl.K);
  out["L"] = bogo::io::to_json(kl.L);
  out["K_norm"] = bogo::operator_norm(kl.K);
  out["P_condition"] = kl.p_condition;
  out["time_averaged_v_hs_norm"] = bogo::time_averaged_v(g, c.t).hs_norm;
  return res <= 1e-8 ? kExitOk : kExitCheckFailed;
}

int cmd_implement(const RunConfig& c, json& out) {
  const bogo::Generator g = bogo::io::generator_from_json(bogo::io::read_file(c.model_path));
  const int d = static_cast<int>(g.dim());
  const auto space = bogo::build_space(d, c.cutoff);
  const int sector = c.sector >= 0 ? c.sector : c.cutoff / 2;
  const bogo::SymplecticMap s = bogo::evolve(g, c.t);
  const bogo::ImplementerResult r = c.natural ? bogo::u_nat(space, s) : bogo::u_type1(space, g, c.t);
  const bogo::CVector f = random_vector(d, c.f_norm, c.seed);
  out["implementer"] = c.natural ? "natural" : "type_I";
  out["vacuum_overlap"] = bogo::io::to_json(r.vacuum_overlap);
  out["phase"] = bogo::io::to_json(r.phase);
  out["sector"] = sector;
  out["unitarity_residual"] = unitarity_residual(r.op, sector);
  out["f"] = bogo::io::to_json(f);
  out["intertwine_residual"] = bogo::intertwine_residual(space, r.op, s, f, sector);
  return kExitOk;
}

int cmd_infimum(const RunConfig& c, json& out) {
  const bogo::Generator g = bogo::io::generator_from_json(bogo::io::read_file(c.model_path));
  const bogo::InfimumReport r = bogo::inf_HI(g);
  out = bogo::io::to_json(r);
  if (!c.brute_cutoffs.empty()) {
    std::vector<int> cuts;
    for (long long x : parse_cutoff_list(c.brute_cutoffs)) cuts.push_back(static_cast<int>(x));
    const bogo::ConvergenceSeries cs = bogo::brute_inf(g, cuts);
    out["brute"] = json{{"cutoffs", cs.cutoffs},
                        {"values", cs.values},
                        {"extrapolated", cs.extrapolated},
                        {"monotone", cs.monotone}};
  }
  return kExitOk;
}

int cmd_classify(const RunConfig& c, json& out) {
  const bogo::DiagonalModel m = bogo::io::diagonal_from_json(bogo::io::read_file(c.diagonal_path));
  out = bogo::io::to_json(bogo::classify(m));
  return kExitOk;
}

int cmd_constants(const RunConfig& c, json& out) {
  const bogo::DiagonalModel m = bogo::io::diagonal_from_json(bogo::io::read_file(c.diagonal_path));
  const std::vector<long long> cuts = parse_cutoff_list(c.cutoffs);
  const bogo::PhaseSums ps = bogo::renorm_phase_rate(m, cuts, c.t);
  out["cutoffs"] = cuts;
  out["t"] = c.t;
  out["lambda_ren"] = ps.lambda_ren;
  out["lambda_ren_verdict"] = bogo::io::to_json(ps.lambda_verdict);
  out["renormalized_phase"] = ps.combined;
  try {
    out["type2_shift"] = bogo::type2_constant(m, cuts);
  } catch (const bogo::PreconditionError& e) {
    out["type2_shift"] = nullptr;
    out["type2_note"] = e.what();
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& c, json& out) {
  const bogo::Generator g = bogo::io::generator_from_json(bogo::io::read_file(c.model_path));
  bogo::require_valid(g);
  const int d = static_cast<int>(g.dim());
  const int sector = c.sector >= 0 ? c.sector : std::max(0, c.cutoff - 4);
  const auto space = bogo::build_space(d, c.cutoff);
  CheckList checks;

  const bogo::SymplecticMap s = bogo::evolve(g, c.t);
  checks.add("symplectic_residual", bogo::check_symplectic(s), 1e-8);
  const bogo::KLOperators kl = bogo::kl_operators(s);
  checks.add("K_norm_below_one", bogo::operator_norm(kl.K), 1.0 - 1e-15);

  const bogo::ImplementerResult nat = bogo::u_nat(space, s);
  checks.add("vacuum_overlap", std::abs(nat.vacuum_overlap - bogo::det_quarter(kl.K)), 1e-12);

  const bogo::Complex ph = bogo::type1_phase(g, c.t);
  checks.add("phase_det_identity", std::abs(ph * ph * bogo::type1_det(g, c.t) - 1.0), 1e-8);

  const bogo::ImplementerResult u1 = bogo::u_type1(space, g, c.t);
  checks.add("cocycle_routes", std::abs(u1.phase - bogo::cocycle_from_L(g, c.t)), 1e-8);

  const bogo::CVector f = random_vector(d, c.f_norm, c.seed);
  out["f"] = bogo::io::to_json(f);
  checks.add("intertwine_residual", bogo::intertwine_residual(space, u1.op, s, f, sector), 1e-4);

  const int oc = c.oracle_cutoff >= 0 ? c.oracle_cutoff : default_oracle_cutoff(d, c.cutoff);
  const bogo::FockOperator prop = bogo::propagator_HI(space, g, c.t, oc);
  checks.add("propagator_residual",
             bogo::sector_norm(*space, prop.matrix() - u1.op.matrix(), sector), 1e-5);

  out["t"] = c.t;
  out["cutoff"] = c.cutoff;
  out["sector"] = sector;
  out["oracle_cutoff"] = oc;
  out["checks"] = checks.items;
  out["ok"] = checks.all;
  return checks.all ? kExitOk : kExitCheckFailed;
}

void emit(const json& report, const std::string& path) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw bogo::InputError("cannot write '" + path + "'");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bogoliubov transformation engine"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("-o,--output", cfg.output, "write the JSON report to this path");
  app.add_option("--seed", cfg.seed, "seed for randomized inputs (BOGO_SEED overrides)");

  const auto model_opt = [&](CLI::App* sub) {
    sub->add_option("--model", cfg.model_path, "finite generator JSON")->required();
  };
  const auto diag_opt = [&](CLI::App* sub) {
    sub->add_option("--diagonal", cfg.diagonal_path, "diagonal model JSON")->required();
  };

  CLI::App* check = app.add_subcommand("check", "validate a generator");
  model_opt(check);
  check->add_option("--tol", cfg.tol, "residual tolerance");

  CLI::App* evolve = app.add_subcommand("evolve", "symplectic group element R(t)");
  model_opt(evolve);
  evolve->add_option("--t", cfg.t, "time");

  CLI::App* implement = app.add_subcommand("implement", "implementer on the truncated Fock space");
  model_opt(implement);
  implement->add_option("--t", cfg.t, "time");
  implement->add_option("--cutoff", cfg.cutoff, "total particle-number cutoff");
  implement->add_option("--sector", cfg.sector, "reporting sector (default cutoff/2)");
  implement->add_option("--f-norm", cfg.f_norm, "norm of the random test vector");
  implement->add_flag("--natural", cfg.natural, "use U_nat instead of U_I(t)");

  CLI::App* infimum = app.add_subcommand("infimum", "spectral infimum of H_I");
  model_opt(infimum);
  infimum->add_option("--brute", cfg.brute_cutoffs, "comma-separated cutoffs for the brute-force oracle");

  CLI::App* classify = app.add_subcommand("classify", "classify a diagonal model");
  diag_opt(classify);

  CLI::App* constants = app.add_subcommand("constants", "renormalization and type II constants");
  diag_opt(constants);
  constants->add_option("--cutoffs", cfg.cutoffs, "comma-separated mode cutoffs");
  constants->add_option("--t", cfg.t, "time for the renormalized phase");

  CLI::App* verify = app.add_subcommand("verify", "end-to-end verification suite for one generator");
  model_opt(verify);
  verify->add_option("--t", cfg.t, "time");
  verify->add_option("--cutoff", cfg.cutoff, "total particle-number cutoff");
  verify->add_option("--sector", cfg.sector, "reporting sector (default cutoff-4)");
  verify->add_option("--oracle-cutoff", cfg.oracle_cutoff, "working cutoff of the propagator oracle");
  verify->add_option("--f-norm", cfg.f_norm, "norm of the random test vector");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  if (const char* env = std::getenv("BOGO_SEED")) {
    try {
      cfg.seed = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      std::cerr << "error: BOGO_SEED must be an unsigned integer\n";
      return kExitInput;
    }
  }
  cfg.command = app.get_subcommands().front()->get_name();

  json report;
  int code = kExitOk;
  try {
    json body;
    if (cfg.command == "check") {
      code = cmd_check(cfg, body);
    } else if (cfg.command == "evolve") {
      code = cmd_evolve(cfg, body);
    } else if (cfg.command == "implement") {
      code = cmd_implement(cfg, body);
    } else if (cfg.command == "infimum") {
      code = cmd_infimum(cfg, body);
    } else if (cfg.command == "classify") {
      code = cmd_classify(cfg, body);
    } else if (cfg.command == "constants") {
      code = cmd_constants(cfg, body);
    } else {
      code = cmd_verify(cfg, body);
    }
    report = body;
    report["command"] = cfg.command;
    report["seed"] = cfg.seed;
  } catch (const bogo::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const bogo::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitInput;
  } catch (const bogo::Error& e) {
    report = json{{"command", cfg.command}, {"error", e.what()}, {"seed", cfg.seed}};
    code = kExitCheckFailed;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  try {
    emit(report, cfg.output);
  } catch (const bogo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return code;
}
