#include <cmath>

#include <gtest/gtest.h>

#include "dicke/errors.hpp"
#include "dicke/thermo.hpp"
#include "dicke/units.hpp"
#include "generators.hpp"

namespace dicke {
namespace {

DickeParams working_point(double lambda_rel) {
  DickeParams p;
  p.omega = units::hz_to_rad(15e6);
  p.omega0 = units::hz_to_rad(8.3e3);
  p.lambda = lambda_rel * critical_coupling(p);
  return p;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

TEST(Energy, VacuumAndPolaritonThermal) {
  const Diagonalization d = make_operating_point(working_point(0.4)).diag;
  EXPECT_EQ(excitation_energy(vacuum_state(Basis::polariton_dc, d.params), d), 0.0);
  const GaussianState th = polariton_occupation_state(d, 2.0, 5.0);
  EXPECT_DOUBLE_EQ(excitation_energy(th, d), d.eps_minus * 2.0 + d.eps_plus * 5.0);
  const EnergyReport r = energy_report(th, d);
  EXPECT_DOUBLE_EQ(r.absolute_energy, r.excitation_energy + d.constant_energy());
}

TEST(Energy, LocalThermalWorkingPointReference) {
  // 40-digit evaluation of the same transform and pairing.
  const DickeParams p = working_point(0.5);
  const Diagonalization d = make_operating_point(p).diag;
  const EnergyReport r = energy_report(local_thermal_state(p, 0.1, 0.01), d);
  EXPECT_LT(rel(r.excitation_energy, 14354147379.258776), 1e-12);
  EXPECT_LT(rel(r.passive_energy, 14178747841.089004), 1e-12);
  EXPECT_LT(rel(r.ergotropy, 175399538.16977276), 1e-7);
  EXPECT_GT(r.ergotropy, 0.0);
}

TEST(Energy, LocalThermalPassiveEnergyPairsHotAtomsWithSoftMode) {
  // n_b > n_a at the working temperatures, so passive = eps+ n_b + eps- n_a.
  for (double lr : {0.1, 0.5, 0.9}) {
    const DickeParams p = working_point(lr);
    const Diagonalization d = make_operating_point(p).diag;
    const GaussianState s = local_thermal_state(p, 0.1, 0.01);
    const auto n = occupations(s);
    ASSERT_GT(n[1], n[0]);
    const double closed = d.eps_plus * n[1] + d.eps_minus * n[0];
    EXPECT_LT(rel(passive_energy(s, d), closed), 1e-9);
  }
}

TEST(Energy, BasisMismatch) {
  const Diagonalization d1 = make_operating_point(working_point(0.2)).diag;
  const Diagonalization d2 = make_operating_point(working_point(0.3)).diag;
  try {
    excitation_energy(vacuum_state(Basis::polariton_dc, d1.params), d2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::basis_mismatch);
  }
}

TEST(Ergotropy, PolaritonThermalIsPassive) {
  const Diagonalization d = make_operating_point(working_point(0.6)).diag;
  const GaussianState th = polariton_thermal_state(d, 0.02, 0.02);
  const EnergyReport r = energy_report(th, d);
  EXPECT_LE(std::abs(r.ergotropy), 1e-12 * r.excitation_energy);
  EXPECT_LE(std::abs(r.passive_energy - r.excitation_energy), 1e-12 * r.excitation_energy);
}

TEST(Ergotropy, PureStatesStoreOnlyErgotropy) {
  testing::Draw draw(31);
  for (int i = 0; i < 200; ++i) {
    const Diagonalization d = make_operating_point(draw.normal_point()).diag;
    const GaussianState s = entangled_polariton_state(d, draw.log_uniform(0.05, 10.0));
    const EnergyReport r = energy_report(s, d);
    EXPECT_LE(std::abs(r.passive_energy), 1e-10 * std::max(r.excitation_energy, 1e-300));
    EXPECT_LE(std::abs(r.ergotropy - r.excitation_energy), 1e-10 * r.excitation_energy);
  }
}

TEST(Ergotropy, NonNegativeAndSortedPairingIsOptimal) {
  testing::Draw draw(32);
  for (int i = 0; i < 1000; ++i) {
    const Diagonalization d = make_operating_point(draw.normal_point()).diag;
    const GaussianState s = draw.generic_state(d);
    const EnergyReport r = energy_report(s, d);
    EXPECT_GE(r.ergotropy, -1e-12 * std::max(1.0, r.excitation_energy));
    EXPECT_GE(r.passive_energy, 0.0);
    const auto nu = symplectic_eigenvalues(s);
    const double a = nu.nu_max - 0.5;
    const double b = nu.nu_min - 0.5;
    const double swapped_1 = a * d.eps_minus + b * d.eps_plus;
    const double swapped_2 = a * d.eps_plus + b * d.eps_minus;
    EXPECT_LE(r.passive_energy, std::min(swapped_1, swapped_2) + 1e-12 * (swapped_1 + swapped_2 + 1.0));
  }
}

TEST(Ratios, PureStateRatiosCoincide) {
  const DickeParams a = working_point(0.5);
  DickeParams b = a;
  b.omega *= 2.0;
  const OperatingPoint op = make_operating_point(a);
  const GaussianState s = entangled_polariton_state(op.diag, units::beta_from_kelvin(1e-4));
  const WorkBreakdown w = run_cycle(CycleProtocol::two_stroke(a, b, 0.003), s);
  const Ratios r = ratios(w, energy_report(s, op.diag), op.diag);
  ASSERT_TRUE(r.w_over_e && r.w_over_ergo);
  EXPECT_NEAR(*r.w_over_e, *r.w_over_ergo, 1e-10 * std::abs(*r.w_over_e));
  // 40-digit reference for the same cycle.
  EXPECT_LT(rel(w.total, -124997.05966069330), 1e-7);
  EXPECT_LT(rel(energy_report(s, op.diag).excitation_energy, 2645660.0164457462), 1e-12);
}

TEST(Ratios, DegenerateDenominatorsAreAbsent) {
  const Diagonalization d = make_operating_point(working_point(0.3)).diag;
  const GaussianState th = polariton_occupation_state(d, 1.0, 3.0);
  WorkBreakdown w;
  w.total = 5.0;
  const Ratios r = ratios(w, energy_report(th, d), d);
  EXPECT_TRUE(r.w_over_e.has_value());
  EXPECT_FALSE(r.w_over_ergo.has_value());

  const Ratios v = ratios(w, energy_report(vacuum_state(Basis::polariton_dc, d.params), d), d);
  EXPECT_FALSE(v.w_over_e.has_value());
  EXPECT_FALSE(v.w_over_ergo.has_value());

  // The absolute zero puts -omega0 N / 2 into the denominator.
  const Ratios abs = ratios(w, energy_report(th, d), d, EnergyZero::absolute);
  EXPECT_FALSE(abs.w_over_e.has_value());
}

TEST(Ratios, WorkNeverExceedsErgotropy) {
  testing::Draw draw(33);
  for (int i = 0; i < 500; ++i) {
    const CycleProtocol c = draw.protocol();
    const OperatingPoint a = make_operating_point(c.points.front().params);
    const GaussianState s = draw.generic_state(a.diag);
    const WorkBreakdown w = run_cycle(c, s);
    const EnergyReport e = energy_report(s, a.diag);
    const double scale = std::max({testing::stroke_scale(w), e.excitation_energy, a.diag.eps_minus});
    EXPECT_GE(w.total, -e.ergotropy - 1e-9 * scale);
  }
}

}  // namespace
}  // namespace dicke
