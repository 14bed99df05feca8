#pragma once

#include <cmath>
#include <numbers>

namespace dicke::units {

// CODATA 2018 exact/recommended values.
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double k_boltzmann = 1.380649e-23;  // J / K
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Ordinary frequency (Hz) to angular frequency (rad/s).
constexpr double hz_to_rad(double hz) noexcept { return two_pi * hz; }

/// Inverse energy (s/rad in hbar = 1 units) of a temperature in kelvin.
inline double beta_from_kelvin(double kelvin) { return hbar / (k_boltzmann * kelvin); }

/// Bose-Einstein occupation of a mode of angular frequency `omega` at `kelvin`.
/// Zero temperature gives exactly zero.
inline double bose_occupation(double omega, double kelvin) {
  if (kelvin == 0.0) {
    return 0.0;
  }
  return 1.0 / std::expm1(hbar * omega / (k_boltzmann * kelvin));
}

}  // namespace dicke::units
