#include "dicke/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "dicke/errors.hpp"
#include "dicke/units.hpp"

namespace dicke {
namespace {

DickeParams point_a(const SweepConfig& cfg, double lambda_rel) {
  DickeParams a;
  a.omega = units::hz_to_rad(cfg.omega_hz);
  a.omega0 = units::hz_to_rad(cfg.omega0_hz);
  a.n_atoms = cfg.n_atoms;
  a.lambda = lambda_rel * critical_coupling(a);
  return a;
}

// Equivalence bound shared with the method-comparison tests.
bool methods_agree(const WorkBreakdown& a, const WorkBreakdown& b) {
  double scale = std::max(std::abs(a.total), std::abs(b.total));
  double strokes = 0.0;
  for (double w : a.stroke_works) {
    strokes += std::abs(w);
  }
  scale = std::max(scale, strokes);
  return std::abs(a.total - b.total) <= 1e-9 * scale;
}

void put(std::ostream& out, const std::optional<double>& v) {
  if (!v || std::isnan(*v)) {
    out << "nan";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", *v);
  out << buf;
}

}  // namespace

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::ok: return "ok";
    case RowStatus::imaginary_spectrum: return "imaginary_spectrum";
    case RowStatus::zero_denominator: return "zero_denominator";
  }
  return "?";
}

std::vector<double> lambda_grid(const SweepConfig& cfg) {
  const double lo = cfg.lambda_rel_min.value();
  const double hi = cfg.lambda_rel_max.value();
  std::vector<double> grid(static_cast<std::size_t>(cfg.points));
  const double step = (hi - lo) / (cfg.points - 1);
  for (int i = 0; i < cfg.points; ++i) {
    grid[i] = i + 1 == cfg.points ? hi : lo + step * i;
  }
  return grid;
}

CycleProtocol sweep_protocol(const SweepConfig& cfg, double lambda_rel) {
  const DickeParams a = point_a(cfg, lambda_rel);
  DickeParams b = a;
  b.omega = cfg.omega_b_rad();
  b.lambda = a.lambda + cfg.delta_lambda_rel.value_or(0.0) * critical_coupling(a);
  return CycleProtocol::two_stroke(a, b, cfg.tau_b_s);
}

GaussianState sweep_initial_state(const SweepConfig& cfg, const OperatingPoint& a) {
  switch (cfg.state) {
    case StateKind::local_thermal:
      return local_thermal_state(a.params, cfg.t_a_k, cfg.t_b_k);
    case StateKind::polariton_thermal:
      return polariton_thermal_state(a.diag, cfg.t_a_k, cfg.t_b_k);
    case StateKind::entangled_dc:
      return entangled_polariton_state(a.diag, cfg.beta_eff_rad());
  }
  throw Error(ErrorCode::config, "unknown state kind");
}

std::vector<double> non_normal_points(const SweepConfig& cfg) {
  std::vector<double> bad;
  for (double x : lambda_grid(cfg)) {
    const CycleProtocol p = sweep_protocol(cfg, x);
    for (const ProtocolPoint& pt : p.points) {
      if (!(pt.params.lambda >= 0.0) || !is_normal_phase(pt.params)) {
        bad.push_back(x);
        break;
      }
    }
  }
  return bad;
}

SweepRow sweep_point(const SweepConfig& cfg, double lambda_rel) {
  SweepRow row;
  row.lambda_rel = lambda_rel;
  try {
    const CycleProtocol protocol = sweep_protocol(cfg, lambda_rel);
    for (const ProtocolPoint& pt : protocol.points) {
      make_operating_point(pt.params);
    }
    const OperatingPoint a = make_operating_point(protocol.points.front().params);
    const GaussianState initial = to_polariton_basis(sweep_initial_state(cfg, a), a.diag);

    WorkBreakdown work;
    if (cfg.method == MethodChoice::stepwise) {
      work = run_cycle(protocol, initial, WorkMethod::stepwise);
    } else {
      work = run_cycle(protocol, initial, WorkMethod::accumulated);
      if (cfg.method == MethodChoice::both) {
        const WorkBreakdown other = run_cycle(protocol, initial, WorkMethod::stepwise);
        if (!methods_agree(work, other)) {
          char buf[160];
          std::snprintf(buf, sizeof buf, "accumulated %.17g vs stepwise %.17g at lambda_rel %.17g",
                        work.total, other.total, lambda_rel);
          throw Error(ErrorCode::method_mismatch, buf);
        }
      }
    }

    const EnergyReport energy = energy_report(initial, a.diag);
    const Ratios r = ratios(work, energy, a.diag, cfg.energy_zero);
    row.work_total = work.total;
    row.energy_initial =
        cfg.energy_zero == EnergyZero::excitation ? energy.excitation_energy : energy.absolute_energy;
    row.ergotropy = energy.ergotropy;
    row.w_over_e = r.w_over_e;
    row.w_over_ergo = r.w_over_ergo;
    row.log_neg_ab = log_negativity(to_local_basis(initial, a.diag), cfg.log_base).e_n;
    row.log_neg_dc = log_negativity(initial, cfg.log_base).e_n;
    row.status = r.w_over_e && r.w_over_ergo ? RowStatus::ok : RowStatus::zero_denominator;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::imaginary_spectrum) {
      throw;
    }
    row = SweepRow{};
    row.lambda_rel = lambda_rel;
    row.status = RowStatus::imaginary_spectrum;
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  const SweepConfig cfg = config.resolved();
  const std::vector<double> grid = lambda_grid(cfg);
  const std::vector<double> bad = non_normal_points(cfg);
  if (!bad.empty()) {
    std::ostringstream msg;
    msg << bad.size() << " grid point(s) leave the normal phase or need lambda < 0; lambda_rel =";
    msg.precision(12);
    for (std::size_t i = 0; i < bad.size() && i < 10; ++i) {
      msg << ' ' << bad[i];
    }
    if (bad.size() > 10) {
      msg << " ...";
    }
    throw Error(ErrorCode::config, msg.str());
  }

  std::vector<SweepRow> rows(grid.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        rows[i] = sweep_point(cfg, grid[i]);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
        next = grid.size();
      }
    }
  };
  const int n_threads = std::max(1, std::min<int>(cfg.workers, static_cast<int>(grid.size())));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows, const SweepConfig* echo) {
  if (echo != nullptr) {
    std::istringstream text(config_text(*echo));
    std::string line;
    while (std::getline(text, line)) {
      out << "# " << line << '\n';
    }
  }
  out << csv_header << '\n';
  for (const SweepRow& r : rows) {
    put(out, r.lambda_rel);
    for (const auto* v : {&r.work_total, &r.energy_initial, &r.ergotropy, &r.w_over_e, &r.w_over_ergo,
                          &r.log_neg_ab, &r.log_neg_dc}) {
      out << ',';
      put(out, *v);
    }
    out << ',' << to_string(r.status) << '\n';
  }
}

void emit_csv(const std::vector<SweepRow>& rows, const std::string& path, const SweepConfig* echo) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::io, "cannot open '" + path + "' for writing");
  }
  write_csv(out, rows, echo);
  out.flush();
  if (!out) {
    throw Error(ErrorCode::io, "write failed for '" + path + "'");
  }
}

}  // namespace dicke
