#include "dicke/thermo.hpp"

#include <algorithm>

namespace dicke {

double excitation_energy(const GaussianState& state, const Diagonalization& d) {
  const auto n = occupations(to_polariton_basis(state, d));
  return d.eps_minus * n[0] + d.eps_plus * n[1];
}

double passive_energy(const GaussianState& state, const Diagonalization& d) {
  const QuadratureCovariance q = quadrature_covariance(to_polariton_basis(state, d));
  const SymplecticSpectrum nu = symplectic_eigenvalues(q);
  // nu is only resolved to ~eps * |S|; anything closer to 1/2 is a pure mode.
  const double resolution = 1e-13 * (1.0 + max_abs(q.s));
  const auto occupation = [&](double v) { return v - 0.5 > resolution ? v - 0.5 : 0.0; };
  const double n_hi = occupation(nu.nu_max);
  const double n_lo = occupation(nu.nu_min);
  const double e_lo = std::min(d.eps_minus, d.eps_plus);
  const double e_hi = std::max(d.eps_minus, d.eps_plus);
  return n_hi * e_lo + n_lo * e_hi;
}

double ergotropy(const GaussianState& state, const Diagonalization& d) {
  return excitation_energy(state, d) - passive_energy(state, d);
}

EnergyReport energy_report(const GaussianState& state, const Diagonalization& d) {
  EnergyReport r;
  r.excitation_energy = excitation_energy(state, d);
  r.absolute_energy = r.excitation_energy + d.constant_energy();
  r.passive_energy = passive_energy(state, d);
  r.ergotropy = r.excitation_energy - r.passive_energy;
  return r;
}

double ergotropy_floor(const EnergyReport& energy, const Diagonalization& d) {
  return 1e-12 * std::max(energy.excitation_energy, d.eps_minus);
}

Ratios ratios(const WorkBreakdown& work, const EnergyReport& energy, const Diagonalization& d,
              EnergyZero zero) {
  Ratios out;
  const double denom = zero == EnergyZero::excitation ? energy.excitation_energy : energy.absolute_energy;
  if (denom > 0.0) {
    out.w_over_e = work.total / denom;
  }
  if (energy.ergotropy > ergotropy_floor(energy, d)) {
    out.w_over_ergo = work.total / energy.ergotropy;
  }
  return out;
}

}  // namespace dicke
