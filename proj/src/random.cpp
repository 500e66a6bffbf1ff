#include "corrtensor/random.hpp"

#include <cmath>

namespace ct {

namespace {

Complex gaussian(Rng& rng) {
  std::normal_distribution<Real> dist(0.0, 1.0);
  const Real re = dist(rng);
  const Real im = dist(rng);
  return {re, im};
}

}  // namespace

PureState haar_random_state(int num_qubits, Rng& rng) {
  Eigen::VectorXcd a(Index{1} << num_qubits);
  for (Index i = 0; i < a.size(); ++i) a[i] = gaussian(rng);
  return PureState::normalized(num_qubits, std::move(a));
}

PureState random_product_state(int num_qubits, Rng& rng) {
  PureState out = haar_random_state(1, rng);
  for (int k = 2; k <= num_qubits; ++k)
    out = tensor_product(out, haar_random_state(1, rng));
  return out;
}

Eigen::Matrix2cd random_unitary2(Rng& rng) {
  Eigen::Matrix2cd g;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) g(r, c) = gaussian(rng);
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
  Eigen::Matrix2cd q = qr.householderQ();
  Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix column phases so the distribution is Haar
  for (int c = 0; c < 2; ++c) {
    const Complex d = r(c, c);
    q.col(c) *= d / std::abs(d);
  }
  return q;
}

Eigen::Matrix3d random_orthogonal3(Rng& rng) {
  std::normal_distribution<Real> dist(0.0, 1.0);
  Eigen::Matrix3d g;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) g(r, c) = dist(rng);
  Eigen::HouseholderQR<Eigen::Matrix3d> qr(g);
  Eigen::Matrix3d q = qr.householderQ();
  Eigen::Matrix3d r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < 3; ++c) {
    if (r(c, c) < 0) q.col(c) = -q.col(c);
  }
  return q;
}

std::pair<LocalOperator, LocalOperator> random_kraus_pair(int qubit, Rng& rng,
                                                          bool conjugated) {
  std::uniform_real_distribution<Real> unit(0.0, 1.0);
  const Real a = unit(rng);
  const Real b = unit(rng);
  Eigen::Matrix2cd d1 = Eigen::Matrix2cd::Zero();
  Eigen::Matrix2cd d2 = Eigen::Matrix2cd::Zero();
  d1(0, 0) = a;
  d1(1, 1) = b;
  d2(0, 0) = std::sqrt(1.0 - a * a);
  d2(1, 1) = std::sqrt(1.0 - b * b);
  if (conjugated) {
    const Eigen::Matrix2cd v = random_unitary2(rng);
    d1 = v.adjoint() * d1 * v;
    d2 = v.adjoint() * d2 * v;
  }
  return {LocalOperator::kraus(qubit, d1), LocalOperator::kraus(qubit, d2)};
}

DensityMatrix random_density_matrix(int num_qubits, int rank, Rng& rng) {
  if (rank < 1) throw ContractViolation("random_density_matrix: rank >= 1");
  const Index dim = Index{1} << num_qubits;
  std::uniform_real_distribution<Real> unit(0.0, 1.0);
  std::vector<Real> w(rank);
  Real total = 0.0;
  for (Real& x : w) {
    x = -std::log(1.0 - unit(rng));  // exponential draws -> flat simplex
    total += x;
  }
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < rank; ++i) {
    const PureState psi = haar_random_state(num_qubits, rng);
    rho.noalias() += (w[i] / total) * (psi.amplitudes * psi.amplitudes.adjoint());
  }
  std::vector<int> labels(num_qubits);
  for (int i = 0; i < num_qubits; ++i) labels[i] = i + 1;
  return DensityMatrix::from_matrix(std::move(labels), std::move(rho));
}

}  // namespace ct
