#pragma once

#include "dicke/gaussian.hpp"

namespace dicke {

enum class LogBase { natural, two };

struct NegativityReport {
  double sigma_tilde = 0.0;  // det P + det A - 2 det X
  double nu_minus = 0.5;     // smallest partially transposed symplectic eigenvalue
  double e_n = 0.0;          // max(0, -log(2 nu_minus))
};

/// Logarithmic negativity across the two modes of the quadrature covariance.
/// Throws UnphysicalCovariance or ComplexNuMinus.
NegativityReport log_negativity(const QuadratureCovariance& s, LogBase base = LogBase::natural);

/// Negativity of `state` in the partition of its own basis.
NegativityReport log_negativity(const GaussianState& state, LogBase base = LogBase::natural);

}  // namespace dicke
