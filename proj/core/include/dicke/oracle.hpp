#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "dicke/cycles.hpp"
#include "dicke/model.hpp"

namespace dicke::oracle {

struct FockConfig {
  int cutoff_per_mode = 60;          // Fock states 0 .. cutoff-1 per mode
  double leakage_tolerance = 1e-6;   // max population allowed in the top two layers
};

/// Two-mode truncated Fock space. The quadratic normal-phase Hamiltonian only
/// changes n_a + n_b by 0 or 2, so every operator used here is block diagonal
/// in the two parity sectors; `sector(p)` lists the (n_a, n_b) of sector p in
/// storage order.
class FockSpace {
 public:
  struct Level {
    int n_a;
    int n_b;
  };

  explicit FockSpace(int cutoff);

  int cutoff() const noexcept { return cutoff_; }
  const std::vector<Level>& sector(int parity) const { return sectors_[parity]; }
  int position(int n_a, int n_b) const { return position_[n_a * cutoff_ + n_b]; }

 private:
  int cutoff_;
  std::array<std::vector<Level>, 2> sectors_;
  std::vector<int> position_;
};

/// Real symmetric operator stored per parity sector.
struct FockOperator {
  int cutoff = 0;
  std::array<Eigen::MatrixXd, 2> blocks;

  /// Full matrix over the (n_a, n_b) product basis, index n_a * cutoff + n_b.
  Eigen::MatrixXd dense() const;
};

struct FockDensity {
  int cutoff = 0;
  std::array<Eigen::MatrixXcd, 2> blocks;

  double trace() const;
  double purity() const;
  /// Population in Fock layers n_a >= cutoff-2 or n_b >= cutoff-2.
  double leakage() const;
};

struct FockEigensystem {
  int cutoff = 0;
  std::array<Eigen::VectorXd, 2> values;   // ascending within each sector
  std::array<Eigen::MatrixXd, 2> vectors;  // columns; empty when not requested
};

/// omega da^dag da + w0~ db^dag db + 2 l~ P_x A_x - 2 mu A_x^2 + E0 on the
/// truncated space; its exact spectrum is eps- n + eps+ m + constant_energy().
FockOperator build_hamiltonian(const DickeParams& p, const MeanFields& mf, const FockConfig& cfg);

FockEigensystem eigensystem(const FockOperator& h, bool with_vectors = true);

/// All eigenvalues, ascending.
std::vector<double> spectrum(const FockOperator& h);

/// Density matrix of the product of thermal states of omega da^dag da and
/// omega0 db^dag db, renormalized on the truncated space.
FockDensity local_thermal_density(const DickeParams& p, double t_a_kelvin, double t_b_kelvin,
                                  const FockConfig& cfg);

/// Same, with the two occupations given directly.
FockDensity local_occupation_density(double n_a, double n_b, const FockConfig& cfg);

/// Gibbs state exp(-beta H)/Z with beta in s/rad.
FockDensity gibbs_density(const FockEigensystem& eig, double beta);

/// Pure state |k> of the k-th lowest eigenvector overall.
FockDensity eigenstate_density(const FockEigensystem& eig, int k);

double expectation(const FockDensity& rho, const FockOperator& op);

/// Throws CutoffTooSmall if the top-layer population exceeds the tolerance.
void certify(const FockDensity& rho, const FockConfig& cfg);

/// rho -> exp(-iHt) rho exp(iHt) using the eigensystem of H.
FockDensity evolve(const FockDensity& rho, const FockEigensystem& eig, double t_s);

struct OracleWork {
  std::vector<double> stroke_works;
  double total = 0.0;
  double max_leakage = 0.0;
  double max_trace_drift = 0.0;   // |Tr rho - Tr rho0| over all strokes
  double max_purity_drift = 0.0;  // |Tr rho^2 - Tr rho0^2|
  FockDensity final_state;
};

/// Brute-force counterpart of run_cycle: each quench contributes
/// Tr[rho (H_next - H_current)], each dwell is an exact unitary step.
OracleWork oracle_work(const CycleProtocol& protocol, const FockDensity& rho0, const FockConfig& cfg);

/// <H> - sum_j r_j e_j with state eigenvalues descending and energies ascending.
double oracle_ergotropy(const FockDensity& rho, const FockOperator& h, const FockConfig& cfg);

}  // namespace dicke::oracle
