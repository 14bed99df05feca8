// dicke: command-line front end for the Dicke work-extraction library.
//
//   dicke diag       --lambda-rel 0.5
//   dicke cycle      --config sweep.conf --lambda-rel 0.5
//   dicke sweep      --config sweep.conf --out sweep.csv --workers 4
//   dicke negativity --state entangled_dc --beta-eff 1e-9 --lambda-rel 0.3
//   dicke oracle     --cutoff 40 --n-b 1.5
//
// Exit status: 0 success, 1 configuration or I/O error, 2 physics error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dicke/config.hpp"
#include "dicke/cycles.hpp"
#include "dicke/entanglement.hpp"
#include "dicke/errors.hpp"
#include "dicke/oracle.hpp"
#include "dicke/sweep.hpp"
#include "dicke/thermo.hpp"
#include "dicke/units.hpp"

namespace {

using namespace dicke;

struct Overrides {
  std::string config;
  std::optional<std::string> out, points, cycle, state, ta_k, tb_k, beta_eff, log_base, workers, method;
};

void add_config_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "key = value configuration file");
  cmd->add_option("--out", o.out, "CSV output path");
  cmd->add_option("--points", o.points, "number of lambda grid points");
  cmd->add_option("--cycle", o.cycle, "ab | cd | custom");
  cmd->add_option("--state", o.state, "local_thermal | polariton_thermal | entangled_dc");
  cmd->add_option("--ta-k", o.ta_k, "photon (or d-polariton) temperature, K");
  cmd->add_option("--tb-k", o.tb_k, "atom (or c-polariton) temperature, K");
  cmd->add_option("--beta-eff", o.beta_eff, "inverse energy of the entangled state, s/rad");
  cmd->add_option("--log-base", o.log_base, "e | 2");
  cmd->add_option("--workers", o.workers, "sweep worker threads");
  cmd->add_option("--method", o.method, "accumulated | stepwise | both");
}

SweepConfig build_config(const Overrides& o) {
  SweepConfig cfg;
  if (!o.config.empty()) {
    cfg = load_config(o.config);
  }
  const std::pair<const char*, const std::optional<std::string>*> flags[] = {
      {"out", &o.out},         {"points", &o.points},     {"cycle", &o.cycle},
      {"state", &o.state},     {"t_a_k", &o.ta_k},        {"t_b_k", &o.tb_k},
      {"beta_eff", &o.beta_eff}, {"log_base", &o.log_base}, {"workers", &o.workers},
      {"method", &o.method},
  };
  for (const auto& [key, value] : flags) {
    if (*value) {
      apply_setting(cfg, key, **value);
    }
  }
  return cfg.resolved();
}

void print_matrix(const char* name, const Mat4& m) {
  std::printf("%s =\n", name);
  for (int i = 0; i < 4; ++i) {
    std::printf("  % .12e % .12e % .12e % .12e\n", m(i, 0), m(i, 1), m(i, 2), m(i, 3));
  }
}

int cmd_diag(const Overrides& o, double lambda_rel) {
  const SweepConfig cfg = build_config(o);
  const DickeParams a = sweep_protocol(cfg, lambda_rel).points.front().params;
  const OperatingPoint op = make_operating_point(a);
  std::printf("omega      = %.12e rad/s\n", a.omega);
  std::printf("omega0     = %.12e rad/s\n", a.omega0);
  std::printf("lambda     = %.12e rad/s\n", a.lambda);
  std::printf("lambda_cr  = %.12e rad/s\n", critical_coupling(a));
  std::printf("eps_minus  = %.12e rad/s\n", op.diag.eps_minus);
  std::printf("eps_plus   = %.12e rad/s\n", op.diag.eps_plus);
  std::printf("gamma_b    = %.12e\n", op.diag.gamma_b);
  std::printf("E_ground   = %.12e rad/s\n", op.diag.constant_energy());
  print_matrix("M", op.diag.m);
  std::printf("symplectic residual = %.3e\n", symplectic_residual(op.diag.m));
  return 0;
}

int cmd_cycle(const Overrides& o, double lambda_rel) {
  const SweepConfig cfg = build_config(o);
  const CycleProtocol protocol = sweep_protocol(cfg, lambda_rel);
  const OperatingPoint a = make_operating_point(protocol.points.front().params);
  const GaussianState initial = to_polariton_basis(sweep_initial_state(cfg, a), a.diag);
  const WorkMethod method = cfg.method == MethodChoice::stepwise ? WorkMethod::stepwise : WorkMethod::accumulated;
  const WorkBreakdown work = run_cycle(protocol, initial, method);
  const EnergyReport energy = energy_report(initial, a.diag);
  const Ratios r = ratios(work, energy, a.diag, cfg.energy_zero);

  for (std::size_t k = 0; k < work.stroke_works.size(); ++k) {
    std::printf("stroke %zu work      = %.12e\n", k, work.stroke_works[k]);
  }
  std::printf("total work          = %.12e\n", work.total);
  std::printf("excitation energy   = %.12e\n", energy.excitation_energy);
  std::printf("absolute energy     = %.12e\n", energy.absolute_energy);
  std::printf("passive energy      = %.12e\n", energy.passive_energy);
  std::printf("ergotropy           = %.12e\n", energy.ergotropy);
  std::printf("w_over_e            = %s\n", r.w_over_e ? std::to_string(*r.w_over_e).c_str() : "nan");
  std::printf("w_over_ergo         = %s\n", r.w_over_ergo ? std::to_string(*r.w_over_ergo).c_str() : "nan");
  const auto occ = occupations(work.final_state);
  std::printf("final <n_d>, <n_c>  = %.12e %.12e\n", occ[0], occ[1]);
  if (cfg.method == MethodChoice::both) {
    const WorkBreakdown other = run_cycle(protocol, initial, WorkMethod::stepwise);
    std::printf("stepwise total      = %.12e\n", other.total);
  }
  return 0;
}

int cmd_sweep(const Overrides& o) {
  const SweepConfig cfg = build_config(o);
  const auto rows = run_sweep(cfg);
  emit_csv(rows, cfg.out, &cfg);
  std::fprintf(stderr, "wrote %zu rows to %s\n", rows.size(), cfg.out.c_str());
  return 0;
}

int cmd_negativity(const Overrides& o, double lambda_rel) {
  const SweepConfig cfg = build_config(o);
  const OperatingPoint a = make_operating_point(sweep_protocol(cfg, lambda_rel).points.front().params);
  const GaussianState dc = to_polariton_basis(sweep_initial_state(cfg, a), a.diag);
  const GaussianState ab = to_local_basis(dc, a.diag);
  for (const auto& [name, state] : {std::pair{"ab", &ab}, std::pair{"dc", &dc}}) {
    const NegativityReport n = log_negativity(*state, cfg.log_base);
    std::printf("%s: sigma_tilde = %.12e  nu_minus = %.12e  E_N = %.12e\n", name, n.sigma_tilde,
                n.nu_minus, n.e_n);
  }
  return 0;
}

struct OracleArgs {
  double omega = 1.0;
  double omega0 = 0.02;
  double delta_omega_rel = 1.0;
  double lambda_rel = 0.5;
  double tau = 30.0;
  double n_a = 0.0;
  double n_b = 1.0;
  int cutoff = 60;
};

int cmd_oracle(const OracleArgs& o) {
  DickeParams a;
  a.omega = o.omega;
  a.omega0 = o.omega0;
  a.lambda = o.lambda_rel * critical_coupling(a);
  DickeParams b = a;
  b.omega = o.omega * (1.0 + o.delta_omega_rel);
  const CycleProtocol protocol = CycleProtocol::two_stroke(a, b, o.tau);

  GaussianState g;
  g.basis = Basis::local_ab;
  g.point = a;
  g.sigma = thermal_sigma(o.n_a, o.n_b);
  const OperatingPoint op = make_operating_point(a);
  const WorkBreakdown gw = run_cycle(protocol, g, WorkMethod::accumulated);
  const double g_ergo = ergotropy(g, op.diag);

  oracle::FockConfig fc;
  fc.cutoff_per_mode = o.cutoff;
  const oracle::FockDensity rho = oracle::local_occupation_density(o.n_a, o.n_b, fc);
  const oracle::OracleWork ow = oracle::oracle_work(protocol, rho, fc);
  const oracle::FockOperator h = oracle::build_hamiltonian(a, fixed_points(a), fc);
  const double f_ergo = oracle::oracle_ergotropy(rho, h, fc);

  const auto rel = [](double x, double ref) { return std::abs(x - ref) / std::max(std::abs(ref), 1e-300); };
  std::printf("work      gaussian %.12e  fock %.12e  rel %.3e\n", gw.total, ow.total, rel(gw.total, ow.total));
  std::printf("ergotropy gaussian %.12e  fock %.12e  rel %.3e\n", g_ergo, f_ergo, rel(g_ergo, f_ergo));
  std::printf("max leakage %.3e  trace drift %.3e  purity drift %.3e\n", ow.max_leakage,
              ow.max_trace_drift, ow.max_purity_drift);
  const auto levels = oracle::spectrum(h);
  std::printf("lowest gaps  %.12e %.12e  (eps- %.12e  eps+ %.12e)\n", levels[1] - levels[0],
              levels[2] - levels[0], op.diag.eps_minus, op.diag.eps_plus);
  return 0;
}

int exit_code(ErrorCode c) {
  return c == ErrorCode::config || c == ErrorCode::io ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sudden-quench work extraction in the Dicke model (Gaussian engine)"};
  app.require_subcommand(1);

  Overrides o;
  double lambda_rel = 0.5;
  auto* diag = app.add_subcommand("diag", "polariton energies and M at one point");
  auto* cycle = app.add_subcommand("cycle", "one two-stroke cycle with full breakdown");
  auto* sweep = app.add_subcommand("sweep", "lambda sweep written as CSV");
  auto* neg = app.add_subcommand("negativity", "log-negativity of the initial state");
  for (auto* cmd : {diag, cycle, sweep, neg}) {
    add_config_flags(cmd, o);
  }
  for (auto* cmd : {diag, cycle, neg}) {
    cmd->add_option("--lambda-rel", lambda_rel, "lambda / lambda_cr of the first point");
  }

  OracleArgs oa;
  auto* orc = app.add_subcommand("oracle", "Gaussian engine vs truncated Fock space on one cycle");
  orc->add_option("--omega", oa.omega, "cavity frequency, rad/s");
  orc->add_option("--omega0", oa.omega0, "atomic frequency, rad/s");
  orc->add_option("--delta-omega-rel", oa.delta_omega_rel, "cavity quench, fraction of omega");
  orc->add_option("--lambda-rel", oa.lambda_rel, "lambda / lambda_cr");
  orc->add_option("--tau", oa.tau, "dwell at the quenched point, s");
  orc->add_option("--n-a", oa.n_a, "initial photon occupation");
  orc->add_option("--n-b", oa.n_b, "initial atomic occupation");
  orc->add_option("--cutoff", oa.cutoff, "Fock states per mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*diag) return cmd_diag(o, lambda_rel);
    if (*cycle) return cmd_cycle(o, lambda_rel);
    if (*sweep) return cmd_sweep(o);
    if (*neg) return cmd_negativity(o, lambda_rel);
    if (*orc) return cmd_oracle(oa);
  } catch (const Error& e) {
    std::cerr << "dicke: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "dicke: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
