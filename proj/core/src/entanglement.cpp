#include "dicke/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dicke/errors.hpp"

namespace dicke {
namespace {

double det2(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

}  // namespace

NegativityReport log_negativity(const QuadratureCovariance& s, LogBase base) {
  const QuadratureCovariance& q = s;
  const double tol = physicality_tolerance(q);
  const SymplecticSpectrum spec = symplectic_eigenvalues(q);
  if (!(spec.nu_min >= 0.5 - tol)) {
    std::ostringstream msg;
    msg << "smallest symplectic eigenvalue " << spec.nu_min << " < 1/2";
    throw Error(ErrorCode::unphysical_covariance, msg.str());
  }

  NegativityReport r;
  r.sigma_tilde = det2(q.p()) + det2(q.a()) - 2.0 * det2(q.x());
  if (q.x().isZero(0.0)) {
    // Product state: partial transposition maps it to another physical state.
    r.nu_minus = std::sqrt(std::min(det2(q.p()), det2(q.a())));
    r.e_n = 0.0;
    return r;
  }
  const double det_s = q.s.determinant();
  double disc = r.sigma_tilde * r.sigma_tilde - 4.0 * det_s;
  if (disc < 0.0) {
    if (disc < -1e-9 * r.sigma_tilde * r.sigma_tilde - tol) {
      std::ostringstream msg;
      msg << "Sigma~^2 - 4 det S = " << disc;
      throw Error(ErrorCode::complex_nu_minus, msg.str());
    }
    disc = 0.0;
  }
  QuadratureCovariance transposed = q;
  transposed.s.row(3) *= -1.0;
  transposed.s.col(3) *= -1.0;
  r.nu_minus = symplectic_eigenvalues(transposed).nu_min;
  if (!(r.nu_minus > 0.0)) {
    throw Error(ErrorCode::complex_nu_minus, "nu_minus is not positive");
  }
  const double ln = -std::log(2.0 * r.nu_minus);
  const double value = base == LogBase::natural ? ln : ln / std::numbers::ln2;
  r.e_n = std::max(0.0, value);
  return r;
}

NegativityReport log_negativity(const GaussianState& state, LogBase base) {
  return log_negativity(quadrature_covariance(state), base);
}

}  // namespace dicke
