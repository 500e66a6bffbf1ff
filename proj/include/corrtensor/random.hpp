#pragma once

#include <random>
#include <utility>

#include "corrtensor/state.hpp"

namespace ct {

using Rng = std::mt19937_64;

/// Haar-distributed pure state (normalized complex Gaussian amplitudes).
PureState haar_random_state(int num_qubits, Rng& rng);

/// Tensor product of independent Haar single-qubit states.
PureState random_product_state(int num_qubits, Rng& rng);

/// Haar-distributed 2x2 unitary (QR of a complex Gaussian with phase fix).
Eigen::Matrix2cd random_unitary2(Rng& rng);

/// Haar-distributed real 3x3 rotation (QR of a Gaussian with sign fix).
Eigen::Matrix3d random_orthogonal3(Rng& rng);

/// Complete two-element Kraus set on one qubit built from a diagonal pair
/// diag(a, b) / diag(sqrt(1-a^2), sqrt(1-b^2)). With `conjugated` set, both
/// elements are conjugated by a shared random unitary V (L = V^dag D V),
/// which keeps every element normal while leaving the diagonal family.
std::pair<LocalOperator, LocalOperator> random_kraus_pair(
    int qubit, Rng& rng, bool conjugated = false);

/// Random rank-r mixture of Haar pure states with a Dirichlet-ish weight
/// draw; labels 1..N.
DensityMatrix random_density_matrix(int num_qubits, int rank, Rng& rng);

}  // namespace ct
