#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "dicke/errors.hpp"
#include "dicke/model.hpp"
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

DickeParams unit_point(double lambda, std::int64_t n = 100000) {
  DickeParams p;
  p.omega = 1.0;
  p.omega0 = 1.0;
  p.lambda = lambda;
  p.n_atoms = n;
  return p;
}

TEST(CriticalCoupling, Formula) {
  EXPECT_DOUBLE_EQ(critical_coupling(unit_point(0.0)), 0.5);
  // sqrt(15e6 * 8.3e3) / 2 in Hz, evaluated at 30 digits.
  EXPECT_NEAR(critical_coupling(working_point(0.0)) / units::two_pi, 176422.7876437735, 1e-7);
  DickeParams p = unit_point(0.0);
  p.omega0 = 0.3;
  const double base = critical_coupling(p);
  p.omega *= 4.0;
  EXPECT_DOUBLE_EQ(critical_coupling(p), 2.0 * base);
}

TEST(CriticalCoupling, RejectsInvalidParameters) {
  DickeParams p = unit_point(0.0);
  p.omega = 0.0;
  EXPECT_THROW(critical_coupling(p), Error);
  p = unit_point(-0.1);
  try {
    p.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_parameters);
  }
  p = unit_point(0.1);
  p.n_atoms = 0;
  EXPECT_THROW(p.validate(), Error);
}

TEST(FixedPoints, NormalPhaseIsZero) {
  EXPECT_TRUE(fixed_points(unit_point(0.25)).is_zero());
  EXPECT_TRUE(fixed_points(unit_point(0.5)).is_zero());
  EXPECT_TRUE(is_normal_phase(unit_point(0.4999)));
  EXPECT_FALSE(is_normal_phase(unit_point(0.5)));
}

TEST(FixedPoints, SuperradiantValues) {
  const DickeParams p = unit_point(std::sqrt(2.0) * 0.5, 10);
  const MeanFields plus = fixed_points(p, Branch::plus);
  const MeanFields minus = fixed_points(p, Branch::minus);
  EXPECT_NEAR(plus.beta_s, 5.0 * std::sqrt(0.75), 1e-14);
  EXPECT_NEAR(plus.alpha_s, -1.9364916731037084, 1e-14);
  EXPECT_DOUBLE_EQ(minus.beta_s, -plus.beta_s);
  EXPECT_DOUBLE_EQ(minus.alpha_s, -plus.alpha_s);
  EXPECT_LE(std::abs(plus.beta_s), p.n_atoms / 2.0);
}

TEST(EffectiveQuadratic, NormalPhaseIsBare) {
  const DickeParams p = unit_point(0.3, 1234);
  const EffectiveQuadratic eq = effective_quadratic(p, fixed_points(p));
  EXPECT_EQ(eq.omega0_tilde, p.omega0);
  EXPECT_EQ(eq.mu, 0.0);
  EXPECT_EQ(eq.lambda_tilde, p.lambda);
  EXPECT_EQ(eq.e0, -p.omega0 * 1234 / 2.0);
}

TEST(EffectiveQuadratic, SuperradiantReferenceTuple) {
  // Independent 30-digit evaluation of the displaced-Hamiltonian coefficients.
  const DickeParams p = unit_point(std::sqrt(2.0) * 0.5, 10);
  for (Branch b : {Branch::plus, Branch::minus}) {
    const EffectiveQuadratic eq = effective_quadratic(p, fixed_points(p, b));
    EXPECT_NEAR(eq.omega0_tilde, 1.4160251471689218, 1e-13);
    EXPECT_NEAR(eq.mu, -0.23201402438266795, 1e-13);
    EXPECT_NEAR(eq.lambda_tilde, 0.49029033784546008, 1e-13);
    EXPECT_NEAR(eq.e0, -6.135408641494980, 1e-12);
  }
  const Diagonalization d = diagonalize(effective_quadratic(p, fixed_points(p)), p);
  EXPECT_NEAR(d.eps_plus * d.eps_plus, 3.804730250473524, 1e-12);
  EXPECT_NEAR(d.eps_minus * d.eps_minus, 0.5145477390281275, 1e-12);
}

TEST(EffectiveQuadratic, SingularMeanFieldRejected) {
  const DickeParams p = unit_point(0.9, 10);
  MeanFields mf;
  mf.alpha_s = 1.0;
  mf.beta_s = 10.0;
  try {
    effective_quadratic(p, mf);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::singular_mean_field);
  }
}

TEST(Diagonalize, DecoupledLimit) {
  DickeParams p = unit_point(0.0);
  p.omega = 2.7;
  p.omega0 = 0.4;
  const Diagonalization d = diagonalize(effective_quadratic(p, fixed_points(p)), p);
  EXPECT_NEAR(d.eps_minus, p.omega, 1e-12 * p.omega);
  EXPECT_NEAR(d.eps_plus, p.omega0, 1e-12 * p.omega0);
  EXPECT_EQ(d.gamma_b, 0.0);
  EXPECT_LT(max_abs(d.m - Mat4::Identity()), 1e-12);
}

TEST(Diagonalize, SoftModeNearCriticality) {
  const OperatingPoint op = make_operating_point(working_point(0.999));
  const double ratio = op.diag.eps_plus / op.params.omega0;
  EXPECT_NEAR(ratio, 0.044710170981268850, 1e-12);
  EXPECT_NEAR(ratio, std::sqrt(1.0 - 0.999 * 0.999), 1e-3 * ratio);
}

TEST(Diagonalize, SoftModeVanishesAtCriticality) {
  DickeParams p = working_point(0.0);
  p.lambda = critical_coupling(p);
  const Diagonalization d = diagonalize(effective_quadratic(p, fixed_points(p)), p);
  EXPECT_LE(d.eps_plus, 1e-8 * p.omega0);
  EXPECT_GT(d.eps_minus, 0.0);
}

TEST(Diagonalize, SoftModeDecreasesWithCoupling) {
  double prev = INFINITY;
  for (int i = 0; i <= 200; ++i) {
    const OperatingPoint op = make_operating_point(working_point(0.995 * i / 200.0));
    EXPECT_LT(op.diag.eps_plus, prev);
    prev = op.diag.eps_plus;
  }
}

TEST(Diagonalize, ImaginarySpectrumPastTheNormalBranch) {
  DickeParams p = unit_point(0.0);
  p.omega0 = 0.5;
  p.lambda = 1.01 * critical_coupling(p);
  // Normal-branch coefficients used beyond lambda_cr.
  try {
    diagonalize(effective_quadratic(p, MeanFields{}), p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::imaginary_spectrum);
  }
}

TEST(Diagonalize, SuperradiantPointHasRealSpectrum) {
  const DickeParams p = unit_point(0.8, 1000);
  const OperatingPoint op = make_operating_point(p);
  EXPECT_GT(op.diag.eps_plus, 0.0);
  EXPECT_GT(op.diag.eps_minus, 0.0);
  EXPECT_LT(symplectic_residual(op.diag.m), 1e-10);
}

TEST(Diagonalize, ExactSpectrumCheckedAgainstCharacteristicPolynomial) {
  // eps^2 are the eigenvalues of the mass-weighted potential matrix
  // [[w^2, 2k], [2k, w0t^2 - 4 mu w0t]].
  testing::Draw draw(11);
  for (int i = 0; i < 200; ++i) {
    const DickeParams p = draw.normal_point();
    const OperatingPoint op = make_operating_point(p);
    const double a = p.omega * p.omega;
    const double c = p.omega0 * p.omega0;
    const double k = 2.0 * p.lambda * std::sqrt(p.omega * p.omega0);
    for (double e : {op.diag.eps_minus, op.diag.eps_plus}) {
      const double x = e * e;
      const double residual = (a - x) * (c - x) - k * k;
      EXPECT_LE(std::abs(residual), 1e-10 * (a + c) * (a + c)) << "point " << i;
    }
  }
}

TEST(Diagonalize, SymplecticityOverRandomPoints) {
  testing::Draw draw(1);
  for (int i = 0; i < 1000; ++i) {
    const OperatingPoint op = make_operating_point(draw.normal_point(0.999));
    EXPECT_LT(symplectic_residual(op.diag.m), 1e-10);
    EXPECT_LT(max_abs(op.diag.m_inv * op.diag.m - Mat4::Identity()), 1e-10);
  }
}

TEST(Diagonalize, NormalPhaseIndependentOfAtomNumber) {
  testing::Draw draw(2);
  for (int i = 0; i < 50; ++i) {
    DickeParams a = draw.normal_point();
    DickeParams b = a;
    a.n_atoms = 2;
    b.n_atoms = 1000000;
    const OperatingPoint oa = make_operating_point(a);
    const OperatingPoint ob = make_operating_point(b);
    EXPECT_EQ(oa.diag.eps_minus, ob.diag.eps_minus);
    EXPECT_EQ(oa.diag.eps_plus, ob.diag.eps_plus);
    EXPECT_EQ(oa.diag.gamma_b, ob.diag.gamma_b);
    EXPECT_EQ(oa.diag.m, ob.diag.m);
    EXPECT_NE(oa.diag.e0, ob.diag.e0);
  }
}

TEST(Diagonalize, AngleBranch) {
  testing::Draw draw(3);
  for (int i = 0; i < 200; ++i) {
    const OperatingPoint op = make_operating_point(draw.normal_point());
    EXPECT_GT(op.diag.gamma_b, -std::numbers::pi / 4.0);
    EXPECT_LE(op.diag.gamma_b, std::numbers::pi / 4.0);
  }
  // Resonant point: z = 0 gives the maximal angle.
  DickeParams p = unit_point(0.2);
  const OperatingPoint op = make_operating_point(p);
  EXPECT_DOUBLE_EQ(op.diag.gamma_b, std::numbers::pi / 4.0);
}

TEST(Diagonalize, GroundEnergyConstant) {
  const DickeParams p = unit_point(0.0, 10);
  const OperatingPoint op = make_operating_point(p);
  EXPECT_DOUBLE_EQ(op.diag.constant_energy(), -5.0);
}

}  // namespace
}  // namespace dicke
