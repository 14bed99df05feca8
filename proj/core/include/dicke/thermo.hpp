#pragma once

#include <optional>

#include "dicke/cycles.hpp"
#include "dicke/gaussian.hpp"
#include "dicke/model.hpp"

namespace dicke {

struct EnergyReport {
  double excitation_energy = 0.0;  // eps- <n_d> + eps+ <n_c>
  double absolute_energy = 0.0;    // excitation + E0 + (eps- + eps+ - omega - omega0~)/2
  double passive_energy = 0.0;
  double ergotropy = 0.0;
};

/// Zero of energy used for the work-energy ratio.
enum class EnergyZero { excitation, absolute };

struct Ratios {
  std::optional<double> w_over_e;
  std::optional<double> w_over_ergo;
};

/// The state is moved to the polariton basis of `d` first if it is a local
/// state; a polariton state of another point raises BasisMismatch.
double excitation_energy(const GaussianState& state, const Diagonalization& d);

/// Lowest energy reachable by Gaussian unitaries: thermal occupations
/// nu_i - 1/2 sorted descending paired with {eps+, eps-} sorted ascending.
double passive_energy(const GaussianState& state, const Diagonalization& d);

double ergotropy(const GaussianState& state, const Diagonalization& d);

EnergyReport energy_report(const GaussianState& state, const Diagonalization& d);

/// Ergotropy at or below this is treated as zero when forming ratios.
double ergotropy_floor(const EnergyReport& energy, const Diagonalization& d);

/// total / energy and total / ergotropy. Degenerate denominators leave the
/// ratio empty instead of throwing.
Ratios ratios(const WorkBreakdown& work, const EnergyReport& energy, const Diagonalization& d,
              EnergyZero zero = EnergyZero::excitation);

}  // namespace dicke
