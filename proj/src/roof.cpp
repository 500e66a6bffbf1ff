#include "corrtensor/roof.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "corrtensor/random.hpp"

namespace ct {

namespace {

constexpr Index kDimCap = 16;
constexpr Real kRankCut = 1e-12;
constexpr Real kNegligibleWeight = 1e-14;

void require(bool ok, const char* what) {
  if (!ok) throw ContractViolation(what);
}

struct Spectral {
  Eigen::MatrixXcd scaled_vectors;  // dim x rank, columns sqrt(lambda_j) e_j
  int rank = 0;
};

Spectral spectral_ensemble(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix);
  const auto& vals = es.eigenvalues();
  Spectral s;
  std::vector<int> cols;
  for (Index i = 0; i < vals.size(); ++i) {
    if (vals[i] > kRankCut) cols.push_back(static_cast<int>(i));
  }
  s.rank = static_cast<int>(cols.size());
  s.scaled_vectors.resize(rho.matrix.rows(), s.rank);
  for (int i = 0; i < s.rank; ++i) {
    s.scaled_vectors.col(i) =
        std::sqrt(vals[cols[i]]) * es.eigenvectors().col(cols[i]);
  }
  return s;
}

Eigen::MatrixXcd thin_q(const Eigen::MatrixXcd& g) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  return qr.householderQ() * Eigen::MatrixXcd::Identity(g.rows(), g.cols());
}

struct Objective {
  const Spectral* spectral;
  int num_qubits;
  int order_cap;

  // ensemble from an m x rank parameter matrix (orthonormalized inside)
  Decomposition ensemble(const Eigen::MatrixXcd& params) const {
    const Eigen::MatrixXcd v = thin_q(params);
    // column i of scaled_vectors * v_row_i^T; build all m at once
    const Eigen::MatrixXcd states = spectral->scaled_vectors * v.transpose();
    Decomposition d;
    for (Index i = 0; i < states.cols(); ++i) {
      const Real p = states.col(i).squaredNorm();
      d.weights.push_back(p);
      if (p > kNegligibleWeight) {
        d.states.push_back(
            PureState{num_qubits, states.col(i) / std::sqrt(p)});
      } else {
        // placeholder for a vanishing branch; never scored
        Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(states.rows());
        basis[0] = 1.0;
        d.states.push_back(PureState{num_qubits, std::move(basis)});
      }
    }
    return d;
  }

  Real operator()(const Eigen::MatrixXcd& params) const {
    const Decomposition d = ensemble(params);
    Real acc = 0.0;
    MeasureOptions opts;
    opts.order_cap = order_cap;
    for (int i = 0; i < d.size(); ++i) {
      if (d.weights[i] > kNegligibleWeight)
        acc += d.weights[i] * e_t(d.states[i], opts).e_t;
    }
    return acc;
  }
};

}  // namespace

Real average_e_t(const Decomposition& d, int order_cap) {
  Real acc = 0.0;
  MeasureOptions opts;
  opts.order_cap = order_cap;
  for (int i = 0; i < d.size(); ++i) {
    if (d.weights[i] > kNegligibleWeight)
      acc += d.weights[i] * e_t(d.states[i], opts).e_t;
  }
  return acc;
}

DensityMatrix mix(const Decomposition& d) {
  require(d.size() > 0 && d.states.size() == d.weights.size(),
          "mix: malformed decomposition");
  const Index dim = d.states.front().dim();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < d.size(); ++i) {
    rho.noalias() += d.weights[i] * (d.states[i].amplitudes *
                                     d.states[i].amplitudes.adjoint());
  }
  std::vector<int> labels(d.states.front().num_qubits);
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i) + 1;
  return DensityMatrix::from_matrix(std::move(labels), std::move(rho));
}

RoofEstimate roof_estimate(const DensityMatrix& rho, const RoofConfig& config) {
  require(rho.matrix.rows() <= kDimCap,
          "roof_estimate: dimension above the 2^4 cap");
  const Spectral spectral = spectral_ensemble(rho);
  require(spectral.rank >= 1, "roof_estimate: zero-rank density matrix");

  const int m = config.ensemble_size > 0 ? config.ensemble_size
                                         : 2 * spectral.rank;
  require(m >= spectral.rank,
          "roof_estimate: ensemble size below the rank of rho");

  Objective objective{&spectral, rho.num_qubits(), config.order_cap};

  RoofEstimate best;
  best.value = std::numeric_limits<Real>::infinity();
  bool any_converged = false;

  for (int restart = 0; restart < std::max(1, config.restarts); ++restart) {
    Eigen::MatrixXcd params(m, spectral.rank);
    if (restart == 0) {
      // spectral starting point: the identity embedding reproduces the
      // eigendecomposition itself
      params.setZero();
      for (int j = 0; j < spectral.rank; ++j) params(j, j) = 1.0;
    } else {
      Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(restart)));
      std::normal_distribution<Real> dist(0.0, 1.0);
      for (Index r = 0; r < params.rows(); ++r) {
        for (Index c = 0; c < params.cols(); ++c) {
          const Real re = dist(rng);
          const Real im = dist(rng);
          params(r, c) = Complex{re, im};
        }
      }
    }

    Real value = objective(params);
    Real step = config.initial_step;
    bool converged = false;
    for (int sweep = 0; sweep < config.max_sweeps; ++sweep) {
      bool improved = false;
      for (Index r = 0; r < params.rows(); ++r) {
        for (Index c = 0; c < params.cols(); ++c) {
          for (const Complex delta :
               {Complex{step, 0.0}, Complex{-step, 0.0}, Complex{0.0, step},
                Complex{0.0, -step}}) {
            params(r, c) += delta;
            const Real trial = objective(params);
            if (trial < value - 1e-15) {
              value = trial;
              improved = true;
            } else {
              params(r, c) -= delta;
            }
          }
        }
      }
      if (!improved) {
        step *= 0.5;
        if (step < config.min_step) {
          converged = true;
          break;
        }
      }
    }

    any_converged = any_converged || converged;
    if (value < best.value) {
      best.value = value;
      best.decomposition = objective.ensemble(params);
    }
    best.restarts_used = restart + 1;
  }
  best.converged = any_converged;
  return best;
}

std::pair<Real, Real> convexity_check(const std::vector<DensityMatrix>& rhos,
                                      const std::vector<Real>& weights,
                                      const RoofConfig& config) {
  require(!rhos.empty() && rhos.size() == weights.size(),
          "convexity_check: need matching states and weights");
  const Index dim = rhos.front().matrix.rows();
  Real wsum = 0.0;
  for (Real w : weights) {
    require(w >= 0.0, "convexity_check: weights must be nonnegative");
    wsum += w;
  }
  require(std::abs(wsum - 1.0) <= 1e-10,
          "convexity_check: weights must sum to 1");

  Eigen::MatrixXcd mixture = Eigen::MatrixXcd::Zero(dim, dim);
  Real lhs = 0.0;
  RoofConfig per = config;
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    require(rhos[i].matrix.rows() == dim,
            "convexity_check: dimension mismatch");
    per.seed = derive_seed(config.seed, 1000 + i);
    lhs += weights[i] * roof_estimate(rhos[i], per).value;
    mixture += weights[i] * rhos[i].matrix;
  }
  per.seed = derive_seed(config.seed, 2000);
  const Real rhs =
      roof_estimate(DensityMatrix::from_matrix(rhos.front().qubit_labels,
                                               std::move(mixture)),
                    per)
          .value;
  return {lhs, rhs};
}

}  // namespace ct
