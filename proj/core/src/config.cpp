#include "dicke/config.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "dicke/errors.hpp"
#include "dicke/units.hpp"

namespace dicke {
namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  if (line > 0) {
    throw Error(ErrorCode::config, "line " + std::to_string(line) + ": " + msg);
  }
  throw Error(ErrorCode::config, msg);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v, int line) {
  double out = 0.0;
  const char* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end || !std::isfinite(out)) {
    fail(line, "'" + key + "' expects a number, got '" + v + "'");
  }
  return out;
}

std::int64_t parse_int(const std::string& key, const std::string& v, int line) {
  std::int64_t out = 0;
  const char* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    fail(line, "'" + key + "' expects an integer, got '" + v + "'");
  }
  return out;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string to_string(CycleKind k) {
  switch (k) {
    case CycleKind::ab: return "ab";
    case CycleKind::cd: return "cd";
    case CycleKind::custom: return "custom";
  }
  return "?";
}

std::string to_string(StateKind k) {
  switch (k) {
    case StateKind::local_thermal: return "local_thermal";
    case StateKind::polariton_thermal: return "polariton_thermal";
    case StateKind::entangled_dc: return "entangled_dc";
  }
  return "?";
}

std::string to_string(MethodChoice k) {
  switch (k) {
    case MethodChoice::accumulated: return "accumulated";
    case MethodChoice::stepwise: return "stepwise";
    case MethodChoice::both: return "both";
  }
  return "?";
}

void apply_setting(SweepConfig& cfg, const std::string& key, const std::string& value, int line) {
  const auto num = [&] { return parse_double(key, value, line); };
  if (key == "cycle") {
    if (value == "ab") cfg.cycle = CycleKind::ab;
    else if (value == "cd") cfg.cycle = CycleKind::cd;
    else if (value == "custom") cfg.cycle = CycleKind::custom;
    else fail(line, "cycle must be ab, cd or custom, got '" + value + "'");
  } else if (key == "omega_hz") {
    cfg.omega_hz = num();
  } else if (key == "omega0_hz") {
    cfg.omega0_hz = num();
  } else if (key == "omega_b_hz") {
    cfg.omega_b_hz = num();
  } else if (key == "delta_omega_rel") {
    cfg.delta_omega_rel = num();
  } else if (key == "delta_lambda_rel") {
    cfg.delta_lambda_rel = num();
  } else if (key == "tau_b_s") {
    cfg.tau_b_s = num();
  } else if (key == "n_atoms") {
    cfg.n_atoms = parse_int(key, value, line);
  } else if (key == "state") {
    if (value == "local_thermal") cfg.state = StateKind::local_thermal;
    else if (value == "polariton_thermal") cfg.state = StateKind::polariton_thermal;
    else if (value == "entangled_dc") cfg.state = StateKind::entangled_dc;
    else fail(line, "state must be local_thermal, polariton_thermal or entangled_dc, got '" + value + "'");
  } else if (key == "t_a_k") {
    cfg.t_a_k = num();
  } else if (key == "t_b_k") {
    cfg.t_b_k = num();
  } else if (key == "beta_eff") {
    cfg.beta_eff = num();
  } else if (key == "t_eff_k") {
    cfg.t_eff_k = num();
    cfg.beta_eff.reset();
  } else if (key == "lambda_rel_min") {
    cfg.lambda_rel_min = num();
  } else if (key == "lambda_rel_max") {
    cfg.lambda_rel_max = num();
  } else if (key == "points") {
    const auto n = parse_int(key, value, line);
    if (n < 2 || n > 100000000) {
      fail(line, "points must be >= 2, got " + value);
    }
    cfg.points = static_cast<int>(n);
  } else if (key == "log_base") {
    if (value == "e") cfg.log_base = LogBase::natural;
    else if (value == "2") cfg.log_base = LogBase::two;
    else fail(line, "log_base must be e or 2, got '" + value + "'");
  } else if (key == "energy_zero") {
    if (value == "excitation") cfg.energy_zero = EnergyZero::excitation;
    else if (value == "absolute") cfg.energy_zero = EnergyZero::absolute;
    else fail(line, "energy_zero must be excitation or absolute, got '" + value + "'");
  } else if (key == "method") {
    if (value == "accumulated") cfg.method = MethodChoice::accumulated;
    else if (value == "stepwise") cfg.method = MethodChoice::stepwise;
    else if (value == "both") cfg.method = MethodChoice::both;
    else fail(line, "method must be accumulated, stepwise or both, got '" + value + "'");
  } else if (key == "out") {
    if (value.empty()) {
      fail(line, "out must not be empty");
    }
    cfg.out = value;
  } else if (key == "workers") {
    const auto n = parse_int(key, value, line);
    if (n < 1 || n > 1024) {
      fail(line, "workers must be in [1, 1024], got " + value);
    }
    cfg.workers = static_cast<int>(n);
  } else {
    fail(line, "unknown key '" + key + "'");
  }
}

SweepConfig parse_config(std::istream& in, SweepConfig base) {
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) {
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      fail(line, "expected 'key = value', got '" + text + "'");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty() || value.empty()) {
      fail(line, "expected 'key = value', got '" + text + "'");
    }
    apply_setting(base, key, value, line);
  }
  return base;
}

SweepConfig load_config(const std::string& path, SweepConfig base) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::config, "cannot open config file '" + path + "'");
  }
  try {
    return parse_config(in, std::move(base));
  } catch (const Error& e) {
    throw Error(ErrorCode::config, path + ": " + std::string(e.what()).substr(std::string("ConfigError: ").size()));
  }
}

SweepConfig SweepConfig::resolved() const {
  SweepConfig r = *this;
  switch (cycle) {
    case CycleKind::ab:
      if (!r.delta_omega_rel) r.delta_omega_rel = 1.0;
      if (!r.delta_lambda_rel) r.delta_lambda_rel = 0.0;
      if (!r.lambda_rel_min) r.lambda_rel_min = 0.02;
      break;
    case CycleKind::cd:
      if (!r.delta_omega_rel) r.delta_omega_rel = 0.1;
      if (!r.delta_lambda_rel) r.delta_lambda_rel = -0.1;
      if (!r.lambda_rel_min) r.lambda_rel_min = 0.12;
      break;
    case CycleKind::custom:
      if (!r.delta_omega_rel) r.delta_omega_rel = 0.0;
      if (!r.delta_lambda_rel) r.delta_lambda_rel = 0.0;
      if (!r.lambda_rel_min) r.lambda_rel_min = 0.02;
      break;
  }
  if (!r.lambda_rel_max) r.lambda_rel_max = 0.98;
  if (r.omega_b_hz) r.delta_omega_rel = *r.omega_b_hz / r.omega_hz - 1.0;
  if (!r.beta_eff && r.t_eff_k > 0.0) r.beta_eff = units::beta_from_kelvin(r.t_eff_k);

  if (!(r.omega_hz > 0.0) || !(r.omega0_hz > 0.0)) fail(0, "omega_hz and omega0_hz must be > 0");
  if (!(r.omega_hz * (1.0 + *r.delta_omega_rel) > 0.0)) fail(0, "quenched cavity frequency must be > 0");
  if (!(r.tau_b_s >= 0.0)) fail(0, "tau_b_s must be >= 0");
  if (r.n_atoms < 1) fail(0, "n_atoms must be >= 1");
  if (!(r.t_a_k >= 0.0) || !(r.t_b_k >= 0.0)) fail(0, "t_a_k and t_b_k must be >= 0");
  if (r.state == StateKind::entangled_dc && !(r.beta_eff.value_or(0.0) > 0.0)) {
    fail(0, "entangled_dc needs beta_eff > 0 or t_eff_k > 0");
  }
  if (r.points < 2) fail(0, "points must be >= 2");
  if (!(*r.lambda_rel_min >= 0.0) || !(*r.lambda_rel_max >= *r.lambda_rel_min)) {
    fail(0, "need 0 <= lambda_rel_min <= lambda_rel_max");
  }
  return r;
}

double SweepConfig::omega_b_rad() const {
  if (omega_b_hz) {
    return units::hz_to_rad(*omega_b_hz);
  }
  return units::hz_to_rad(omega_hz) * (1.0 + delta_omega_rel.value_or(0.0));
}

double SweepConfig::beta_eff_rad() const {
  if (beta_eff) {
    return *beta_eff;
  }
  return units::beta_from_kelvin(t_eff_k);
}

std::string config_text(const SweepConfig& cfg) {
  const SweepConfig r = cfg.resolved();
  std::ostringstream o;
  o << "cycle = " << to_string(r.cycle) << '\n';
  o << "omega_hz = " << fmt(r.omega_hz) << '\n';
  o << "omega0_hz = " << fmt(r.omega0_hz) << '\n';
  if (r.omega_b_hz) {
    o << "omega_b_hz = " << fmt(*r.omega_b_hz) << '\n';
  } else {
    o << "delta_omega_rel = " << fmt(*r.delta_omega_rel) << '\n';
  }
  o << "delta_lambda_rel = " << fmt(*r.delta_lambda_rel) << '\n';
  o << "tau_b_s = " << fmt(r.tau_b_s) << '\n';
  o << "n_atoms = " << r.n_atoms << '\n';
  o << "state = " << to_string(r.state) << '\n';
  switch (r.state) {
    case StateKind::local_thermal:
    case StateKind::polariton_thermal:
      o << "t_a_k = " << fmt(r.t_a_k) << '\n';
      o << "t_b_k = " << fmt(r.t_b_k) << '\n';
      break;
    case StateKind::entangled_dc:
      o << "beta_eff = " << fmt(*r.beta_eff) << '\n';
      break;
  }
  o << "lambda_rel_min = " << fmt(*r.lambda_rel_min) << '\n';
  o << "lambda_rel_max = " << fmt(*r.lambda_rel_max) << '\n';
  o << "points = " << r.points << '\n';
  o << "log_base = " << (r.log_base == LogBase::natural ? "e" : "2") << '\n';
  o << "energy_zero = " << (r.energy_zero == EnergyZero::excitation ? "excitation" : "absolute") << '\n';
  o << "method = " << to_string(r.method) << '\n';
  return o.str();
}

}  // namespace dicke
