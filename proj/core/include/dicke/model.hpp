#pragma once

#include <cstdint>

#include "dicke/linalg.hpp"

namespace dicke {

/// One point of the Dicke parameter space. Frequencies are angular (rad/s).
struct DickeParams {
  double omega0 = 1.0;  // atomic splitting
  double omega = 1.0;   // cavity / effective mode
  double lambda = 0.0;  // coupling
  std::int64_t n_atoms = 100000;

  /// Throws InvalidParameters unless omega0 > 0, omega > 0, lambda >= 0, n_atoms >= 1.
  void validate() const;

  friend bool operator==(const DickeParams&, const DickeParams&) = default;
};

/// Selects one of the two degenerate superradiant solutions.
enum class Branch { plus, minus };

struct MeanFields {
  double alpha_s = 0.0;  // photon mean field
  double beta_s = 0.0;   // atomic mean field, |beta_s| <= N/2
  Branch branch = Branch::plus;

  bool is_zero() const noexcept { return alpha_s == 0.0 && beta_s == 0.0; }
};

/// Coefficients of the displaced quadratic fluctuation Hamiltonian.
struct EffectiveQuadratic {
  double omega0_tilde = 0.0;
  double mu = 0.0;
  double lambda_tilde = 0.0;
  double e0 = 0.0;  // constant offset, hbar = 1
};

/// Normal-mode structure at one parameter point.
///
/// `m` maps the polariton ladder vector (d, d^dag, c, c^dag) onto the local
/// fluctuation vector (da, da^dag, db, db^dag); `m_inv` is its symplectic
/// inverse K m^T K^T. `params` tags the polariton basis this describes.
struct Diagonalization {
  double eps_minus = 0.0;
  double eps_plus = 0.0;
  double gamma_b = 0.0;
  Mat4 m = Mat4::Identity();
  Mat4 m_inv = Mat4::Identity();

  DickeParams params;
  double omega = 0.0;
  double omega0_tilde = 0.0;
  double e0 = 0.0;

  /// E0 + (eps- + eps+ - omega - omega0_tilde)/2: the ground-state energy.
  double constant_energy() const noexcept {
    return e0 + 0.5 * (eps_minus + eps_plus - omega - omega0_tilde);
  }
};

double critical_coupling(const DickeParams& p);

bool is_normal_phase(const DickeParams& p);

MeanFields fixed_points(const DickeParams& p, Branch branch = Branch::plus);

EffectiveQuadratic effective_quadratic(const DickeParams& p, const MeanFields& mf);

/// Throws ImaginarySpectrum when either squared polariton energy is negative
/// (or the renormalized atomic frequency is not positive).
Diagonalization diagonalize(const EffectiveQuadratic& eq, const DickeParams& p);

/// Everything the cycle and energy code needs about one Hamiltonian.
struct OperatingPoint {
  DickeParams params;
  MeanFields mean_fields;
  EffectiveQuadratic quadratic;
  Diagonalization diag;

  /// Ladder-basis displacement (alpha, alpha, beta, beta) of the fixed point.
  CVec4 mean_field_vector() const;
};

OperatingPoint make_operating_point(const DickeParams& p, Branch branch = Branch::plus);

}  // namespace dicke
