#pragma once

#include <array>

#include "dicke/linalg.hpp"
#include "dicke/model.hpp"

namespace dicke {

enum class Basis { local_ab, polariton_dc };

/// Two-mode Gaussian state in ladder form.
///
/// `disp` holds <x_i> for the ladder vector of `basis` (entries 1 and 3 are the
/// conjugates of 0 and 2); `sigma` is the centred symmetrized second moment
/// 1/2 <{x_i - <x_i>, x_j - <x_j>}>. A polariton-basis state is tied to the
/// parameter point whose M defines d and c; a local-basis state uses `point`
/// only for its local mode frequencies.
struct GaussianState {
  Basis basis = Basis::polariton_dc;
  DickeParams point;
  CVec4 disp = CVec4::Zero();
  CMat4 sigma = CMat4::Zero();
};

/// Real covariance of the quadratures (P_x, P_y, A_x, A_y) or the d/c analogues.
struct QuadratureCovariance {
  Mat4 s = Mat4::Zero();

  Mat2 p() const { return s.topLeftCorner<2, 2>(); }
  Mat2 a() const { return s.bottomRightCorner<2, 2>(); }
  Mat2 x() const { return s.topRightCorner<2, 2>(); }
};

struct SymplecticSpectrum {
  double nu_max = 0.5;
  double nu_min = 0.5;
};

/// Covariance of two independent thermal modes with occupations n1, n2.
CMat4 thermal_sigma(double n1, double n2);

GaussianState vacuum_state(Basis basis, const DickeParams& point);

/// Product of thermal states of the local Hamiltonians omega da^dag da and
/// omega0 db^dag db. Throws NegativeTemperature.
GaussianState local_thermal_state(const DickeParams& p, double t_a_kelvin, double t_b_kelvin);

/// Independent thermal states of the two polaritons: d at t_d (energy eps-),
/// c at t_c (energy eps+).
GaussianState polariton_thermal_state(const Diagonalization& d, double t_d_kelvin,
                                      double t_c_kelvin);

/// Same as above with the occupations given directly.
GaussianState polariton_occupation_state(const Diagonalization& d, double n_d, double n_c);

/// Pure two-mode squeezed polariton state sum_n q^n |n>_d |n>_c (normalized)
/// with q = exp(-beta_eff (eps+ + eps-) / 4). `beta_eff` is an inverse energy
/// in s/rad. Throws NonNormalizable unless beta_eff > 0.
GaussianState entangled_polariton_state(const Diagonalization& d, double beta_eff);

/// Two-mode squeezed state with Schmidt ratio q in [0, 1) on the given basis.
GaussianState two_mode_squeezed_state(Basis basis, const DickeParams& point, double q);

/// sigma' = T sigma T^T, disp' = T (disp + shift). Throws NonSymplecticMatrix
/// if T fails the symplectic condition.
GaussianState apply_symplectic(const GaussianState& state, const CMat4& transform, Basis new_basis,
                               const DickeParams& new_point, const CVec4& shift = CVec4::Zero());

/// Local -> polariton basis of `d` (M^-1) and back (M).
GaussianState to_polariton_basis(const GaussianState& state, const Diagonalization& d);
GaussianState to_local_basis(const GaussianState& state, const Diagonalization& d);

QuadratureCovariance quadrature_covariance(const GaussianState& state);

SymplecticSpectrum symplectic_eigenvalues(const QuadratureCovariance& q);
SymplecticSpectrum symplectic_eigenvalues(const GaussianState& state);

/// <first mode number>, <second mode number> in the state's own basis:
/// sigma_21 + Lambda_21 + |disp_1|^2 and sigma_43 + Lambda_43 + |disp_3|^2.
std::array<double, 2> occupations(const GaussianState& state);

/// Tolerance used by the physicality check for a covariance of this size.
double physicality_tolerance(const QuadratureCovariance& q);

bool is_physical(const GaussianState& state);

/// Throws UnphysicalCovariance if any symplectic eigenvalue is below 1/2.
void require_physical(const GaussianState& state);

}  // namespace dicke
