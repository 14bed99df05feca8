#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dicke/config.hpp"
#include "dicke/cycles.hpp"

namespace dicke {

enum class RowStatus { ok, imaginary_spectrum, zero_denominator };

std::string to_string(RowStatus s);

struct SweepRow {
  double lambda_rel = 0.0;
  std::optional<double> work_total;
  std::optional<double> energy_initial;
  std::optional<double> ergotropy;
  std::optional<double> w_over_e;
  std::optional<double> w_over_ergo;
  std::optional<double> log_neg_ab;
  std::optional<double> log_neg_dc;
  RowStatus status = RowStatus::ok;
};

/// Evenly spaced lambda / lambda_cr(A) values of a resolved config.
std::vector<double> lambda_grid(const SweepConfig& cfg);

/// The two-stroke protocol evaluated at one grid value.
CycleProtocol sweep_protocol(const SweepConfig& cfg, double lambda_rel);

/// Initial state of the sweep at the protocol's first point.
GaussianState sweep_initial_state(const SweepConfig& cfg, const OperatingPoint& a);

/// Grid values whose protocol leaves the normal phase (or needs lambda < 0).
std::vector<double> non_normal_points(const SweepConfig& cfg);

SweepRow sweep_point(const SweepConfig& cfg, double lambda_rel);

/// Runs the whole grid on cfg.workers threads; rows come back in grid order.
/// Throws Error(config) if any grid point is outside the normal phase and
/// Error(method_mismatch) when `both` engines disagree.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

/// Header line, optional `#` echo of the config, one line per row.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows, const SweepConfig* echo = nullptr);

/// Throws Error(io) with the path if the file cannot be written.
void emit_csv(const std::vector<SweepRow>& rows, const std::string& path,
              const SweepConfig* echo = nullptr);

inline constexpr const char* csv_header =
    "lambda_rel,work_total,energy_initial,ergotropy,w_over_e,w_over_ergo,log_neg_ab,log_neg_dc,status";

}  // namespace dicke
