#pragma once

#include <complex>

#include <Eigen/Dense>

namespace dicke {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;
using CMat4 = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4d;
using CVec4 = Eigen::Vector4cd;

/// Commutators [x_i, x_j] of a ladder vector (a, a^dag, b, b^dag).
inline Mat4 commutation_kernel() {
  Mat4 k = Mat4::Zero();
  k(0, 1) = 1.0;
  k(1, 0) = -1.0;
  k(2, 3) = 1.0;
  k(3, 2) = -1.0;
  return k;
}

/// Lambda = K/2: <x_i x_j> = sigma_ij + Lambda_ij for a symmetrized covariance.
inline Mat4 ordering_correction() { return 0.5 * commutation_kernel(); }

/// Max-abs entry, used for all "infinity norm" checks in this project.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

/// Residual ||m K m^T - K||_max of the symplectic condition.
template <typename Derived>
double symplectic_residual(const Eigen::MatrixBase<Derived>& m) {
  const CMat4 k = commutation_kernel().cast<Complex>();
  const CMat4 mc = m.template cast<Complex>();
  return max_abs(mc * k * mc.transpose() - k);
}

}  // namespace dicke
