#include "dicke/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dicke/errors.hpp"
#include "dicke/units.hpp"

namespace dicke {
namespace {

// Rows give P_x, P_y, A_x, A_y in terms of (a, a^dag, b, b^dag).
CMat4 quadrature_map() {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i{0.0, 1.0};
  CMat4 l = CMat4::Zero();
  l(0, 0) = r;
  l(0, 1) = r;
  l(1, 0) = -i * r;
  l(1, 1) = i * r;
  l(2, 2) = r;
  l(2, 3) = r;
  l(3, 2) = -i * r;
  l(3, 3) = i * r;
  return l;
}

void require_temperature(double kelvin, const char* name) {
  if (!(kelvin >= 0.0)) {
    std::ostringstream msg;
    msg << name << " = " << kelvin << " K";
    throw Error(ErrorCode::negative_temperature, msg.str());
  }
}

}  // namespace

CMat4 thermal_sigma(double n1, double n2) {
  CMat4 s = CMat4::Zero();
  s(0, 1) = s(1, 0) = n1 + 0.5;
  s(2, 3) = s(3, 2) = n2 + 0.5;
  return s;
}

GaussianState vacuum_state(Basis basis, const DickeParams& point) {
  return GaussianState{basis, point, CVec4::Zero(), thermal_sigma(0.0, 0.0)};
}

GaussianState local_thermal_state(const DickeParams& p, double t_a_kelvin, double t_b_kelvin) {
  p.validate();
  require_temperature(t_a_kelvin, "t_a");
  require_temperature(t_b_kelvin, "t_b");
  const double n_a = units::bose_occupation(p.omega, t_a_kelvin);
  const double n_b = units::bose_occupation(p.omega0, t_b_kelvin);
  return GaussianState{Basis::local_ab, p, CVec4::Zero(), thermal_sigma(n_a, n_b)};
}

GaussianState polariton_thermal_state(const Diagonalization& d, double t_d_kelvin,
                                      double t_c_kelvin) {
  require_temperature(t_d_kelvin, "t_d");
  require_temperature(t_c_kelvin, "t_c");
  return polariton_occupation_state(d, units::bose_occupation(d.eps_minus, t_d_kelvin),
                                    units::bose_occupation(d.eps_plus, t_c_kelvin));
}

GaussianState polariton_occupation_state(const Diagonalization& d, double n_d, double n_c) {
  if (!(n_d >= 0.0) || !(n_c >= 0.0)) {
    throw Error(ErrorCode::unphysical_covariance, "negative thermal occupation");
  }
  return GaussianState{Basis::polariton_dc, d.params, CVec4::Zero(), thermal_sigma(n_d, n_c)};
}

GaussianState two_mode_squeezed_state(Basis basis, const DickeParams& point, double q) {
  if (!(q >= 0.0 && q < 1.0)) {
    throw Error(ErrorCode::non_normalizable, "two-mode squeezing ratio must lie in [0, 1)");
  }
  const double denom = 1.0 - q * q;
  const double n = q * q / denom;
  const double corr = q / denom;
  GaussianState st{basis, point, CVec4::Zero(), thermal_sigma(n, n)};
  // <d c> = <d^dag c^dag> = q / (1 - q^2); <d c^dag> = 0.
  st.sigma(0, 2) = st.sigma(2, 0) = corr;
  st.sigma(1, 3) = st.sigma(3, 1) = corr;
  return st;
}

GaussianState entangled_polariton_state(const Diagonalization& d, double beta_eff) {
  if (!(beta_eff > 0.0)) {
    throw Error(ErrorCode::non_normalizable, "beta_eff must be positive");
  }
  const double q = std::exp(-beta_eff * (d.eps_plus + d.eps_minus) / 4.0);
  return two_mode_squeezed_state(Basis::polariton_dc, d.params, q);
}

GaussianState apply_symplectic(const GaussianState& state, const CMat4& transform, Basis new_basis,
                               const DickeParams& new_point, const CVec4& shift) {
  const double residual = symplectic_residual(transform);
  const double scale = std::max(1.0, max_abs(transform) * max_abs(transform));
  if (!(residual <= 1e-9 * scale)) {
    std::ostringstream msg;
    msg << "||T K T^T - K|| = " << residual;
    throw Error(ErrorCode::non_symplectic_matrix, msg.str());
  }
  GaussianState out;
  out.basis = new_basis;
  out.point = new_point;
  out.disp = transform * (state.disp + shift);
  out.sigma = transform * state.sigma * transform.transpose();
  return out;
}

GaussianState to_polariton_basis(const GaussianState& state, const Diagonalization& d) {
  if (state.basis == Basis::polariton_dc) {
    if (state.point == d.params) {
      return state;
    }
    throw Error(ErrorCode::basis_mismatch, "state is in the polariton basis of another point");
  }
  return apply_symplectic(state, d.m_inv.cast<Complex>(), Basis::polariton_dc, d.params);
}

GaussianState to_local_basis(const GaussianState& state, const Diagonalization& d) {
  if (state.basis == Basis::local_ab) {
    return state;
  }
  if (!(state.point == d.params)) {
    throw Error(ErrorCode::basis_mismatch, "polariton state does not belong to this diagonalization");
  }
  return apply_symplectic(state, d.m.cast<Complex>(), Basis::local_ab, d.params);
}

QuadratureCovariance quadrature_covariance(const GaussianState& state) {
  static const CMat4 l = quadrature_map();
  const CMat4 s = l * state.sigma * l.transpose();
  QuadratureCovariance q;
  q.s = s.unaryExpr([](const Complex& z) { return z.real(); });
  q.s = 0.5 * (q.s + q.s.transpose()).eval();
  return q;
}

SymplecticSpectrum symplectic_eigenvalues(const QuadratureCovariance& q) {
  SymplecticSpectrum spec;
  const Eigen::LLT<Mat4> llt(q.s);
  if (llt.info() == Eigen::Success) {
    // With S = L L^T the eigenvalues of i L^T Omega L are +-nu. det S and the
    // block invariants lose ~eps * |S|^2 to cancellation; this does not.
    Mat4 omega = Mat4::Zero();
    omega(0, 1) = omega(2, 3) = 1.0;
    omega(1, 0) = omega(3, 2) = -1.0;
    const Mat4 l = llt.matrixL();
    const CMat4 h = Complex(0.0, 1.0) * (l.transpose() * omega * l).cast<Complex>();
    const Eigen::SelfAdjointEigenSolver<CMat4> es(h, Eigen::EigenvaluesOnly);
    spec.nu_max = es.eigenvalues()(3);
    spec.nu_min = es.eigenvalues()(2);
    return spec;
  }
  // Not positive definite, so certainly unphysical; the invariants still give
  // a meaningful size for the error message.
  const double delta = q.p().determinant() + q.a().determinant() + 2.0 * q.x().determinant();
  const double det_s = q.s.determinant();
  const double disc = std::max(0.0, delta * delta - 4.0 * det_s);
  const double big_sq = 0.5 * (delta + std::sqrt(disc));
  spec.nu_max = std::sqrt(std::max(0.0, big_sq));
  spec.nu_min = big_sq > 0.0 ? std::sqrt(std::max(0.0, det_s / big_sq)) : 0.0;
  return spec;
}

SymplecticSpectrum symplectic_eigenvalues(const GaussianState& state) {
  return symplectic_eigenvalues(quadrature_covariance(state));
}

std::array<double, 2> occupations(const GaussianState& state) {
  const Mat4 lambda = ordering_correction();
  const double n1 = state.sigma(1, 0).real() + lambda(1, 0) + std::norm(state.disp(0));
  const double n2 = state.sigma(3, 2).real() + lambda(3, 2) + std::norm(state.disp(2));
  return {n1, n2};
}

double physicality_tolerance(const QuadratureCovariance& q) {
  const double scale = max_abs(q.s);
  return 1e-10 + 1e-13 * scale * scale;
}

bool is_physical(const GaussianState& state) {
  const QuadratureCovariance q = quadrature_covariance(state);
  return symplectic_eigenvalues(q).nu_min >= 0.5 - physicality_tolerance(q);
}

void require_physical(const GaussianState& state) {
  const QuadratureCovariance q = quadrature_covariance(state);
  const SymplecticSpectrum spec = symplectic_eigenvalues(q);
  if (!(spec.nu_min >= 0.5 - physicality_tolerance(q))) {
    std::ostringstream msg;
    msg << "smallest symplectic eigenvalue " << spec.nu_min << " < 1/2";
    throw Error(ErrorCode::unphysical_covariance, msg.str());
  }
}

}  // namespace dicke
