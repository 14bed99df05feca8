#include "dicke/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>


#include "dicke/errors.hpp"
#include "dicke/units.hpp"

namespace dicke::oracle {
namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// v^T x v for real x.
MatrixXd congruence_t(const MatrixXd& v, const MatrixXd& x) {
  MatrixXd tmp;
  tmp.noalias() = x * v;
  MatrixXd out;
  out.noalias() = v.transpose() * tmp;
  return out;
}

// v x v^T for real x.
MatrixXd congruence(const MatrixXd& v, const MatrixXd& x) {
  MatrixXd tmp;
  tmp.noalias() = x * v.transpose();
  MatrixXd out;
  out.noalias() = v * tmp;
  return out;
}

void symmetric_eigen(MatrixXd& a, VectorXd& w, bool with_vectors) {
  if (a.rows() == 0) {
    w.resize(0);
    return;
  }
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(a, with_vectors ? Eigen::ComputeEigenvectors
                                                             : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigensolver did not converge");
  }
  w = es.eigenvalues();
  if (with_vectors) {
    a = es.eigenvectors();
  }
}

VectorXd hermitian_eigenvalues(const MatrixXcd& a) {
  if (a.rows() == 0) {
    return {};
  }
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("hermitian eigensolver did not converge");
  }
  return es.eigenvalues();
}

// Element-wise copies; the .real()/.imag() views of a complex matrix are not
// safe inside BLAS-style product kernels.
MatrixXd real_part(const MatrixXcd& m) {
  return m.unaryExpr([](const Complex& z) { return z.real(); });
}

MatrixXd imag_part(const MatrixXcd& m) {
  return m.unaryExpr([](const Complex& z) { return z.imag(); });
}

const FockSpace& space_for(int cutoff) {
  thread_local std::map<int, FockSpace> cache;
  auto it = cache.find(cutoff);
  if (it == cache.end()) {
    it = cache.emplace(cutoff, FockSpace(cutoff)).first;
  }
  return it->second;
}

void require_cutoff(const FockConfig& cfg) {
  if (cfg.cutoff_per_mode < 2) {
    throw Error(ErrorCode::cutoff_too_small, "cutoff_per_mode must be at least 2");
  }
}

FockDensity diagonal_density(int cutoff, const std::function<double(int, int)>& weight) {
  const FockSpace& space = space_for(cutoff);
  FockDensity rho;
  rho.cutoff = cutoff;
  double total = 0.0;
  for (int p = 0; p < 2; ++p) {
    const auto& levels = space.sector(p);
    rho.blocks[p] = MatrixXcd::Zero(static_cast<int>(levels.size()), static_cast<int>(levels.size()));
    for (std::size_t i = 0; i < levels.size(); ++i) {
      const double w = weight(levels[i].n_a, levels[i].n_b);
      rho.blocks[p](i, i) = w;
      total += w;
    }
  }
  for (auto& b : rho.blocks) {
    b /= total;
  }
  return rho;
}

double geometric_weight(double n, int k) {
  if (n == 0.0) {
    return k == 0 ? 1.0 : 0.0;
  }
  const double x = n / (1.0 + n);
  return std::pow(x, k) / (1.0 + n);
}

}  // namespace

FockSpace::FockSpace(int cutoff) : cutoff_(cutoff), position_(static_cast<std::size_t>(cutoff) * cutoff) {
  for (int na = 0; na < cutoff; ++na) {
    for (int nb = 0; nb < cutoff; ++nb) {
      auto& sec = sectors_[(na + nb) % 2];
      position_[na * cutoff + nb] = static_cast<int>(sec.size());
      sec.push_back({na, nb});
    }
  }
}

MatrixXd FockOperator::dense() const {
  const FockSpace& space = space_for(cutoff);
  const int dim = cutoff * cutoff;
  MatrixXd out = MatrixXd::Zero(dim, dim);
  for (int p = 0; p < 2; ++p) {
    const auto& levels = space.sector(p);
    for (std::size_t i = 0; i < levels.size(); ++i) {
      for (std::size_t j = 0; j < levels.size(); ++j) {
        out(levels[i].n_a * cutoff + levels[i].n_b, levels[j].n_a * cutoff + levels[j].n_b) = blocks[p](i, j);
      }
    }
  }
  return out;
}

double FockDensity::trace() const {
  return blocks[0].trace().real() + blocks[1].trace().real();
}

double FockDensity::purity() const {
  return blocks[0].squaredNorm() + blocks[1].squaredNorm();
}

double FockDensity::leakage() const {
  const FockSpace& space = space_for(cutoff);
  double pop = 0.0;
  for (int p = 0; p < 2; ++p) {
    const auto& levels = space.sector(p);
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (levels[i].n_a >= cutoff - 2 || levels[i].n_b >= cutoff - 2) {
        pop += blocks[p](i, i).real();
      }
    }
  }
  return pop;
}

FockOperator build_hamiltonian(const DickeParams& p, const MeanFields& mf, const FockConfig& cfg) {
  require_cutoff(cfg);
  const EffectiveQuadratic eq = effective_quadratic(p, mf);
  const int c = cfg.cutoff_per_mode;
  const FockSpace& space = space_for(c);
  FockOperator h;
  h.cutoff = c;
  for (int par = 0; par < 2; ++par) {
    const auto& levels = space.sector(par);
    const int n = static_cast<int>(levels.size());
    MatrixXd& m = h.blocks[par];
    m = MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      const int na = levels[i].n_a;
      const int nb = levels[i].n_b;
      // omega na + w0~ nb - mu (b + b^dag)^2 + E0, with (b + b^dag)^2 = b^2 + b^dag^2 + 2 nb + 1.
      m(i, i) += p.omega * na + eq.omega0_tilde * nb - eq.mu * (2.0 * nb + 1.0) + eq.e0;
      if (nb + 2 < c) {
        const int j = space.position(na, nb + 2);
        const double v = -eq.mu * std::sqrt((nb + 1.0) * (nb + 2.0));
        m(j, i) += v;
        m(i, j) += v;
      }
      // 2 l~ P_x A_x = l~ (a + a^dag)(b + b^dag): raise a, raise/lower b.
      if (na + 1 < c) {
        const double ra = std::sqrt(na + 1.0);
        if (nb + 1 < c) {
          const int j = space.position(na + 1, nb + 1);
          const double v = eq.lambda_tilde * ra * std::sqrt(nb + 1.0);
          m(j, i) += v;
          m(i, j) += v;
        }
        if (nb > 0) {
          const int j = space.position(na + 1, nb - 1);
          const double v = eq.lambda_tilde * ra * std::sqrt(static_cast<double>(nb));
          m(j, i) += v;
          m(i, j) += v;
        }
      }
    }
  }
  return h;
}

FockEigensystem eigensystem(const FockOperator& h, bool with_vectors) {
  FockEigensystem eig;
  eig.cutoff = h.cutoff;
  for (int p = 0; p < 2; ++p) {
    MatrixXd a = h.blocks[p];
    symmetric_eigen(a, eig.values[p], with_vectors);
    if (with_vectors) {
      eig.vectors[p] = std::move(a);
    }
  }
  return eig;
}

std::vector<double> spectrum(const FockOperator& h) {
  const FockEigensystem eig = eigensystem(h, false);
  std::vector<double> all(eig.values[0].data(), eig.values[0].data() + eig.values[0].size());
  all.insert(all.end(), eig.values[1].data(), eig.values[1].data() + eig.values[1].size());
  std::sort(all.begin(), all.end());
  return all;
}

FockDensity local_occupation_density(double n_a, double n_b, const FockConfig& cfg) {
  require_cutoff(cfg);
  if (!(n_a >= 0.0) || !(n_b >= 0.0)) {
    throw Error(ErrorCode::unphysical_covariance, "negative occupation");
  }
  return diagonal_density(cfg.cutoff_per_mode, [&](int na, int nb) {
    return geometric_weight(n_a, na) * geometric_weight(n_b, nb);
  });
}

FockDensity local_thermal_density(const DickeParams& p, double t_a_kelvin, double t_b_kelvin,
                                  const FockConfig& cfg) {
  if (!(t_a_kelvin >= 0.0) || !(t_b_kelvin >= 0.0)) {
    throw Error(ErrorCode::negative_temperature, "temperatures must be >= 0");
  }
  return local_occupation_density(units::bose_occupation(p.omega, t_a_kelvin),
                                  units::bose_occupation(p.omega0, t_b_kelvin), cfg);
}

FockDensity gibbs_density(const FockEigensystem& eig, double beta) {
  const double e_min = std::min(eig.values[0].minCoeff(), eig.values[1].minCoeff());
  FockDensity rho;
  rho.cutoff = eig.cutoff;
  double z = 0.0;
  std::array<VectorXd, 2> w;
  for (int p = 0; p < 2; ++p) {
    w[p] = (-beta * (eig.values[p].array() - e_min)).exp().matrix();
    z += w[p].sum();
  }
  for (int p = 0; p < 2; ++p) {
    const MatrixXd block = congruence(eig.vectors[p], (w[p] / z).asDiagonal().toDenseMatrix());
    rho.blocks[p] = block.cast<Complex>();
  }
  return rho;
}

FockDensity eigenstate_density(const FockEigensystem& eig, int k) {
  std::vector<std::pair<double, std::pair<int, int>>> levels;
  for (int p = 0; p < 2; ++p) {
    for (int i = 0; i < eig.values[p].size(); ++i) {
      levels.push_back({eig.values[p](i), {p, i}});
    }
  }
  std::sort(levels.begin(), levels.end());
  const auto [p, i] = levels.at(static_cast<std::size_t>(k)).second;
  FockDensity rho;
  rho.cutoff = eig.cutoff;
  for (int s = 0; s < 2; ++s) {
    const int n = static_cast<int>(eig.values[s].size());
    rho.blocks[s] = MatrixXcd::Zero(n, n);
  }
  const VectorXd v = eig.vectors[p].col(i);
  rho.blocks[p] = (v * v.transpose()).cast<Complex>();
  return rho;
}

double expectation(const FockDensity& rho, const FockOperator& op) {
  double acc = 0.0;
  for (int p = 0; p < 2; ++p) {
    acc += real_part(rho.blocks[p]).cwiseProduct(op.blocks[p]).sum();
  }
  return acc;
}

void certify(const FockDensity& rho, const FockConfig& cfg) {
  const double leak = rho.leakage();
  if (!(leak <= cfg.leakage_tolerance)) {
    std::ostringstream msg;
    msg << "top-layer population " << leak << " exceeds " << cfg.leakage_tolerance << " at cutoff "
        << cfg.cutoff_per_mode;
    throw Error(ErrorCode::cutoff_too_small, msg.str());
  }
}

FockDensity evolve(const FockDensity& rho, const FockEigensystem& eig, double t_s) {
  if (!(t_s >= 0.0)) {
    throw Error(ErrorCode::negative_dwell, "evolution time must be >= 0");
  }
  if (t_s == 0.0) {
    return rho;
  }
  const double e_min = std::min(eig.values[0].minCoeff(), eig.values[1].minCoeff());
  FockDensity out;
  out.cutoff = rho.cutoff;
  for (int p = 0; p < 2; ++p) {
    const MatrixXd& v = eig.vectors[p];
    const int n = static_cast<int>(v.rows());
    if (n == 0) {
      out.blocks[p] = rho.blocks[p];
      continue;
    }
    const MatrixXd re = real_part(rho.blocks[p]);
    const MatrixXd im = imag_part(rho.blocks[p]);
    const bool has_imag = im.cwiseAbs().maxCoeff() > 0.0;
    const MatrixXd e_re = congruence_t(v, re);
    const MatrixXd e_im = has_imag ? congruence_t(v, im) : MatrixXd::Zero(n, n);

    Eigen::VectorXcd phase(n);
    for (int j = 0; j < n; ++j) {
      phase(j) = std::polar(1.0, -(eig.values[p](j) - e_min) * t_s);
    }
    MatrixXd r_re(n, n);
    MatrixXd r_im(n, n);
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        const Complex f = phase(j) * std::conj(phase(k));
        const Complex x = Complex(e_re(j, k), e_im(j, k)) * f;
        r_re(j, k) = x.real();
        r_im(j, k) = x.imag();
      }
    }
    const MatrixXd back_re = congruence(v, r_re);
    const MatrixXd back_im = congruence(v, r_im);
    out.blocks[p] = back_re.binaryExpr(back_im, [](double x, double y) { return Complex(x, y); });
  }
  return out;
}

OracleWork oracle_work(const CycleProtocol& protocol, const FockDensity& rho0, const FockConfig& cfg) {
  require_cutoff(cfg);
  if (rho0.cutoff != cfg.cutoff_per_mode) {
    throw Error(ErrorCode::cutoff_too_small, "density matrix cutoff differs from the configuration");
  }
  protocol.validate();
  certify(rho0, cfg);

  std::vector<FockOperator> hams;
  hams.reserve(protocol.points.size());
  for (const ProtocolPoint& pt : protocol.points) {
    hams.push_back(build_hamiltonian(pt.params, fixed_points(pt.params), cfg));
  }

  OracleWork out;
  const double trace0 = rho0.trace();
  const double purity0 = rho0.purity();
  out.max_leakage = rho0.leakage();
  FockDensity rho = rho0;
  for (std::size_t k = 0; k + 1 < protocol.points.size(); ++k) {
    const double dwell = protocol.points[k].dwell_s;
    if (dwell > 0.0) {
      rho = evolve(rho, eigensystem(hams[k]), dwell);
      out.max_trace_drift = std::max(out.max_trace_drift, std::abs(rho.trace() - trace0));
      out.max_purity_drift = std::max(out.max_purity_drift, std::abs(rho.purity() - purity0));
      out.max_leakage = std::max(out.max_leakage, rho.leakage());
      certify(rho, cfg);
    }
    FockOperator diff;
    diff.cutoff = cfg.cutoff_per_mode;
    for (int p = 0; p < 2; ++p) {
      diff.blocks[p] = hams[k + 1].blocks[p] - hams[k].blocks[p];
    }
    out.stroke_works.push_back(expectation(rho, diff));
  }
  for (double w : out.stroke_works) {
    out.total += w;
  }
  out.final_state = std::move(rho);
  return out;
}

double oracle_ergotropy(const FockDensity& rho, const FockOperator& h, const FockConfig& cfg) {
  certify(rho, cfg);
  std::vector<double> r;
  for (int p = 0; p < 2; ++p) {
    const bool real = imag_part(rho.blocks[p]).cwiseAbs().maxCoeff() == 0.0;
    VectorXd w;
    if (real) {
      MatrixXd a = real_part(rho.blocks[p]);
      symmetric_eigen(a, w, false);
    } else {
      w = hermitian_eigenvalues(rho.blocks[p]);
    }
    r.insert(r.end(), w.data(), w.data() + w.size());
  }
  std::sort(r.begin(), r.end(), std::greater<>());
  const std::vector<double> e = spectrum(h);
  double passive = 0.0;
  for (std::size_t j = 0; j < r.size(); ++j) {
    passive += r[j] * e[j];
  }
  return expectation(rho, h) - passive;
}

}  // namespace dicke::oracle
