#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "dicke/entanglement.hpp"
#include "dicke/thermo.hpp"

namespace dicke {

enum class CycleKind { ab, cd, custom };
enum class StateKind { local_thermal, polariton_thermal, entangled_dc };
enum class MethodChoice { accumulated, stepwise, both };

/// Settings of one lambda sweep. Frequencies in Hz, temperatures in kelvin.
/// Optional fields have cycle-dependent defaults filled in by `resolved()`.
struct SweepConfig {
  CycleKind cycle = CycleKind::ab;
  double omega_hz = 15e6;
  double omega0_hz = 8.3e3;
  std::optional<double> omega_b_hz;       // wins over delta_omega_rel when set
  std::optional<double> delta_omega_rel;  // ab: 1, cd: 0.1, custom: 0
  std::optional<double> delta_lambda_rel; // ab: 0, cd: -0.1, custom: 0
  double tau_b_s = 0.003;
  std::int64_t n_atoms = 100000;

  StateKind state = StateKind::local_thermal;
  double t_a_k = 0.1;
  double t_b_k = 0.01;
  std::optional<double> beta_eff;  // s/rad; wins over t_eff_k
  double t_eff_k = 1e-4;

  std::optional<double> lambda_rel_min;  // ab: 0.02, cd: 0.12
  std::optional<double> lambda_rel_max;  // 0.98
  int points = 400;

  LogBase log_base = LogBase::natural;
  EnergyZero energy_zero = EnergyZero::excitation;
  MethodChoice method = MethodChoice::accumulated;
  std::string out = "sweep.csv";
  int workers = 1;

  /// Copy with every optional filled in. Throws Error(config) on bad values.
  SweepConfig resolved() const;

  double omega_b_rad() const;  // requires resolved()
  double beta_eff_rad() const;
};

/// Parses `key = value` lines; `#` starts a comment. Unknown keys and bad
/// values throw Error(config) naming the line.
SweepConfig parse_config(std::istream& in, SweepConfig base = {});
SweepConfig load_config(const std::string& path, SweepConfig base = {});

/// Sets one key; `line` is only used in error messages (0 = command line).
void apply_setting(SweepConfig& cfg, const std::string& key, const std::string& value, int line = 0);

/// Resolved configuration as `key = value` lines (no `#`), round-trippable
/// through parse_config. Run-environment keys (out, workers) are omitted.
std::string config_text(const SweepConfig& cfg);

std::string to_string(CycleKind k);
std::string to_string(StateKind k);
std::string to_string(MethodChoice k);

}  // namespace dicke
