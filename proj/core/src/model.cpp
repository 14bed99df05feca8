#include "dicke/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dicke/errors.hpp"

namespace dicke {

void DickeParams::validate() const {
  if (!(omega0 > 0.0) || !(omega > 0.0) || !(lambda >= 0.0) || n_atoms < 1 ||
      !std::isfinite(omega0) || !std::isfinite(omega) || !std::isfinite(lambda)) {
    std::ostringstream msg;
    msg << "need omega0 > 0, omega > 0, lambda >= 0, n_atoms >= 1 (got omega0=" << omega0
        << ", omega=" << omega << ", lambda=" << lambda << ", n_atoms=" << n_atoms << ")";
    throw Error(ErrorCode::invalid_parameters, msg.str());
  }
}

double critical_coupling(const DickeParams& p) {
  p.validate();
  return std::sqrt(p.omega * p.omega0) / 2.0;
}

bool is_normal_phase(const DickeParams& p) { return p.lambda < critical_coupling(p); }

MeanFields fixed_points(const DickeParams& p, Branch branch) {
  const double lambda_cr = critical_coupling(p);
  MeanFields mf;
  mf.branch = branch;
  if (p.lambda <= lambda_cr) {
    return mf;
  }
  const double ratio = lambda_cr / p.lambda;
  const double order = std::sqrt(1.0 - ratio * ratio * ratio * ratio);
  const double n = static_cast<double>(p.n_atoms);
  const double sign = branch == Branch::plus ? 1.0 : -1.0;
  // alpha_s and beta_s carry opposite signs on each branch.
  mf.alpha_s = -sign * (p.lambda * std::sqrt(n) / p.omega) * order;
  mf.beta_s = sign * (n / 2.0) * order;
  return mf;
}

EffectiveQuadratic effective_quadratic(const DickeParams& p, const MeanFields& mf) {
  p.validate();
  const double n = static_cast<double>(p.n_atoms);
  if (std::abs(mf.beta_s) >= n) {
    throw Error(ErrorCode::singular_mean_field, "|beta_s| >= N makes sqrt(1 - beta_s^2/N^2) vanish");
  }
  EffectiveQuadratic eq;
  if (mf.is_zero()) {
    eq.omega0_tilde = p.omega0;
    eq.mu = 0.0;
    eq.lambda_tilde = p.lambda;
    eq.e0 = -p.omega0 * n / 2.0;
    return eq;
  }
  const double b2 = mf.beta_s * mf.beta_s;
  const double root = std::sqrt(1.0 - b2 / (n * n));
  const double ab = mf.alpha_s * mf.beta_s;
  const double scale = p.lambda * ab / (std::pow(n, 1.5) * root);
  eq.omega0_tilde = p.omega0 - 2.0 * scale;
  eq.mu = scale * (1.0 + b2 / (2.0 * (n * n - b2)));
  eq.lambda_tilde = p.lambda * (1.0 - 2.0 * b2 / (n * n)) / root;
  eq.e0 = p.omega * mf.alpha_s * mf.alpha_s + p.omega0 * (b2 / n - n / 2.0) +
          4.0 * p.lambda * ab / std::sqrt(n) * root;
  return eq;
}

Diagonalization diagonalize(const EffectiveQuadratic& eq, const DickeParams& p) {
  p.validate();
  const double w = p.omega;
  const double w0t = eq.omega0_tilde;
  if (!(w0t > 0.0)) {
    throw Error(ErrorCode::imaginary_spectrum, "renormalized atomic frequency is not positive");
  }
  // Potential matrix of the mass-renormalized coordinates x (photon), y (atom):
  // diag(w^2, w0t^2 - 4 mu w0t) with off-diagonal 2 kappa.
  const double soft_sq = w0t * w0t - 4.0 * eq.mu * w0t;
  const double kappa = eq.lambda_tilde * std::sqrt(w * w0t);
  const double z = soft_sq - w * w;
  const double trace = soft_sq + w * w;
  const double radical = std::sqrt(z * z + 16.0 * kappa * kappa);

  // Product of the two squared energies, factored so that it is exactly zero
  // at the critical coupling of the normal phase.
  const double g = w * (w0t - 4.0 * eq.mu);
  double product = 0.0;
  if (g >= 0.0) {
    const double sg = std::sqrt(g);
    product = w * w0t * (sg - 2.0 * eq.lambda_tilde) * (sg + 2.0 * eq.lambda_tilde);
  } else {
    product = w * w0t * (g - 4.0 * eq.lambda_tilde * eq.lambda_tilde);
  }
  const double larger = 0.5 * (trace + radical);
  if (!(larger > 0.0) || product < 0.0) {
    std::ostringstream msg;
    msg << "negative squared polariton energy at lambda=" << p.lambda << " (lambda_cr="
        << critical_coupling(p) << ")";
    throw Error(ErrorCode::imaginary_spectrum, msg.str());
  }
  const double smaller = product / larger;

  // sign(0) = +1.
  const bool z_nonneg = z >= 0.0;
  const double eps_plus_sq = z_nonneg ? larger : smaller;
  const double eps_minus_sq = z_nonneg ? smaller : larger;

  Diagonalization d;
  d.eps_plus = std::sqrt(eps_plus_sq);
  d.eps_minus = std::sqrt(eps_minus_sq);
  if (!(d.eps_minus > 0.0)) {
    throw Error(ErrorCode::imaginary_spectrum, "eps_minus vanishes");
  }
  if (kappa == 0.0) {
    d.gamma_b = 0.0;
  } else if (z == 0.0) {
    d.gamma_b = std::numbers::pi / 4.0;
  } else {
    d.gamma_b = 0.5 * std::atan(4.0 * kappa / z);
  }
  d.params = p;
  d.omega = w;
  d.omega0_tilde = w0t;
  d.e0 = eq.e0;

  const double c = std::cos(d.gamma_b);
  const double s = std::sin(d.gamma_b);
  const double em = d.eps_minus;
  const double ep = d.eps_plus;

  // At the critical point eps_plus = 0 and the soft-mode columns diverge;
  // M is left non-finite there (the spectrum itself is still reported).
  auto pair = [](double prefactor, double outer, double eps) {
    const double a = std::sqrt(outer / eps);
    const double b = std::sqrt(eps / outer);
    return std::pair{0.5 * prefactor * (a + b), 0.5 * prefactor * (a - b)};
  };
  const auto [a_p, a_m] = pair(c, w, em);
  const auto [b_p, b_m] = pair(s, w, ep);
  const auto [c_p, c_m] = pair(-s, w0t, em);
  const auto [d_p, d_m] = pair(c, w0t, ep);

  d.m << a_p, a_m, b_p, b_m,
         a_m, a_p, b_m, b_p,
         c_p, c_m, d_p, d_m,
         c_m, c_p, d_m, d_p;
  const Mat4 k = commutation_kernel();
  d.m_inv = k * d.m.transpose() * k.transpose();
  return d;
}

CVec4 OperatingPoint::mean_field_vector() const {
  return CVec4(mean_fields.alpha_s, mean_fields.alpha_s, mean_fields.beta_s, mean_fields.beta_s);
}

OperatingPoint make_operating_point(const DickeParams& p, Branch branch) {
  OperatingPoint op;
  op.params = p;
  op.mean_fields = fixed_points(p, branch);
  op.quadratic = effective_quadratic(p, op.mean_fields);
  op.diag = diagonalize(op.quadratic, p);
  return op;
}

}  // namespace dicke
