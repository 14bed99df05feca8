#pragma once

// Seeded random draws shared by the property tests and the acceptance suite.
// Frequencies are dimensionless (omega ~ 1) so tolerances read directly.

#include <cmath>
#include <random>
#include <vector>

#include "dicke/cycles.hpp"
#include "dicke/gaussian.hpp"
#include "dicke/model.hpp"

namespace dicke::testing {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Normal-phase point with lambda / lambda_cr in [0, max_rel].
  DickeParams normal_point(double max_rel = 0.97) {
    DickeParams p;
    p.omega = log_uniform(0.3, 3.0);
    p.omega0 = log_uniform(0.01, 3.0);
    p.n_atoms = integer(1, 1000000);
    p.lambda = uniform(0.0, max_rel) * critical_coupling(p);
    return p;
  }

  /// Closed protocol with `strokes` quenches: p0 -> p1 -> ... -> p0. The
  /// quenches move (omega, lambda) only; omega0 and N belong to the atoms.
  CycleProtocol protocol(int strokes, bool zero_dwell = false) {
    CycleProtocol c;
    const DickeParams first = normal_point();
    c.points.push_back({first, 0.0});
    for (int k = 1; k < strokes; ++k) {
      DickeParams p = first;
      p.omega = log_uniform(0.3, 3.0);
      p.lambda = uniform(0.0, 0.97) * critical_coupling(p);
      const double dwell = zero_dwell ? 0.0 : uniform(0.0, 20.0);
      c.points.push_back({p, dwell});
    }
    c.points.push_back({first, 0.0});
    return c;
  }

  CycleProtocol protocol() { return protocol(integer(2, 6)); }

  /// Random symplectic ladder transform: local squeezes, rotations and a
  /// beam splitter.
  CMat4 symplectic() {
    CMat4 t = CMat4::Identity();
    for (int rep = 0; rep < 2; ++rep) {
      CMat4 s = CMat4::Zero();
      for (int m = 0; m < 2; ++m) {
        const double r = uniform(-1.0, 1.0);
        const Complex ph = std::polar(1.0, uniform(0.0, 6.283185307179586));
        s(2 * m, 2 * m) = std::cosh(r) * ph;
        s(2 * m, 2 * m + 1) = std::sinh(r) * std::conj(ph);
        s(2 * m + 1, 2 * m + 1) = std::conj(s(2 * m, 2 * m));
        s(2 * m + 1, 2 * m) = std::conj(s(2 * m, 2 * m + 1));
      }
      const double th = uniform(0.0, 3.141592653589793);
      CMat4 bs = CMat4::Zero();
      bs(0, 0) = bs(1, 1) = bs(2, 2) = bs(3, 3) = std::cos(th);
      bs(0, 2) = bs(1, 3) = std::sin(th);
      bs(2, 0) = bs(3, 1) = -std::sin(th);
      t = bs * s * t;
    }
    return t;
  }

  /// Arbitrary physical Gaussian state in the polariton basis of `d`.
  GaussianState generic_state(const Diagonalization& d) {
    const GaussianState thermal = polariton_occupation_state(d, uniform(0.0, 3.0), uniform(0.0, 3.0));
    GaussianState s = apply_symplectic(thermal, symplectic(), Basis::polariton_dc, d.params);
    return s;
  }

  /// Product of polariton thermal states with the larger occupation on the
  /// lower-energy polariton (Gaussian passive).
  GaussianState passive_state(const Diagonalization& d) {
    const double n_hi = uniform(0.0, 4.0);
    const double n_lo = uniform(0.0, n_hi);
    const bool minus_is_lower = d.eps_minus <= d.eps_plus;
    return polariton_occupation_state(d, minus_is_lower ? n_hi : n_lo, minus_is_lower ? n_lo : n_hi);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Absolute work scale of a cycle: sum of |stroke work|.
inline double stroke_scale(const WorkBreakdown& w) {
  double s = 0.0;
  for (double x : w.stroke_works) {
    s += std::abs(x);
  }
  return s;
}

}  // namespace dicke::testing
