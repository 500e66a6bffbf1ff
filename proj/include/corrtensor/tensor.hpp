#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "corrtensor/common.hpp"
#include "corrtensor/state.hpp"

namespace ct {

using BlochVector = Eigen::Vector3d;

/// Real order-M array over index alphabet {1,2,3}^M holding correlation
/// values for the labeled qubits. Entries are stored flat in lexicographic
/// order with the LAST mode varying fastest:
///   linear(a_1..a_M) = sum_i (a_i - 1) * 3^(M - i).
struct CorrTensor {
  std::vector<int> qubit_labels;
  Eigen::VectorXd entries;

  int order() const { return static_cast<int>(qubit_labels.size()); }
  Index size() const { return entries.size(); }

  Real at(std::span<const int> alphas) const;
  Real& at(std::span<const int> alphas);

  static CorrTensor zero(std::vector<int> qubit_labels);
};

/// Order-N array over {0,1,2,3}^N: index 0 is the identity. The (0,...,0)
/// entry is 1 for a unit-trace state; the all-nonzero block is the full
/// correlation tensor; blocks with one nonzero index are Bloch vectors.
/// Same flat layout as CorrTensor with mode dimension 4.
struct ExtendedTensor {
  int num_qubits = 0;
  Eigen::VectorXd entries;

  Index size() const { return entries.size(); }
  Real at(std::span<const int> indices) const;
};

/// Per-multiset representation of the full correlation tensor of a
/// permutation-symmetric state: one value per count vector (n1, n2, n3)
/// with n1 + n2 + n3 = N, i.e. (N+1)(N+2)/2 representatives.
struct SymmetricCorrTensor {
  int num_qubits = 0;
  /// values[r] for the multiset with rank r in enumeration order
  /// n1 = 0..N outer, n2 = 0..N-n1 inner.
  std::vector<Real> values;

  Index representative_count() const {
    return static_cast<Index>(values.size());
  }
  Real value(int n1, int n2) const;
  /// Number of index tuples sharing the multiset: N! / (n1! n2! n3!).
  static Real multiplicity(int num_qubits, int n1, int n2);

  Real norm() const;
  /// Dense expansion; requires N <= order_cap.
  CorrTensor materialize(int order_cap = kDefaultOrderCap) const;
};

/// Bloch vector of the single-qubit reduced state: s_a = Tr(rho_k sigma_a).
BlochVector bloch_vector(const PureState& state, int qubit);
BlochVector bloch_vector(const DensityMatrix& state, int qubit);

/// Correlation tensor over `subset` (nonempty, 1-based). Entry (a_1..a_M)
/// is the expectation of the string carrying sigma_{a_i} on subset qubit i
/// and identity elsewhere. Dense size 3^M; M above order_cap is refused.
CorrTensor correlation_tensor(const PureState& state, std::vector<int> subset,
                              int order_cap = kDefaultOrderCap);
CorrTensor correlation_tensor(const DensityMatrix& state,
                              std::vector<int> subset,
                              int order_cap = kDefaultOrderCap);
/// Full-tensor convenience: subset = all qubits of the state.
CorrTensor correlation_tensor(const PureState& state,
                              int order_cap = kDefaultOrderCap);
CorrTensor correlation_tensor(const DensityMatrix& state,
                              int order_cap = kDefaultOrderCap);

ExtendedTensor extended_tensor(const PureState& state,
                               int extended_cap = kDefaultExtendedCap);

/// Hilbert-Schmidt (Euclidean) norm, accumulated with pairwise summation in
/// canonical index order.
Real tensor_norm(const CorrTensor& t);
Real tensor_norm(const ExtendedTensor& t);

/// Mode-k unfolding (k is 1-based): 3 x 3^(M-1). Row r holds entries with
/// a_k = r + 1; the column index ranks the remaining indices
/// (a_1..a_{k-1}, a_{k+1}..a_M) lexicographically, last fastest.
Eigen::MatrixXd matrix_unfolding(const CorrTensor& t, int mode);
/// Inverse of matrix_unfolding for the same mode and labels.
CorrTensor refold(const Eigen::MatrixXd& unfolded, int mode,
                  std::vector<int> qubit_labels);

/// k-mode product: the mode-k unfolding of the result equals
/// m * matrix_unfolding(t, mode).
CorrTensor k_mode_product(const CorrTensor& t, const Eigen::Matrix3d& m,
                          int mode);

/// Outer product; order adds, norms multiply. The right operand's labels are
/// shifted past the left operand's largest label.
CorrTensor outer_product(const CorrTensor& a, const CorrTensor& b);

/// Order-1 tensor wrapping a Bloch vector.
CorrTensor to_tensor(const BlochVector& s, int label);

/// Sampled transposition test: 2N random index swaps must leave every
/// amplitude unchanged within `tolerance`.
bool is_permutation_symmetric(const PureState& state,
                              Real tolerance = tol::symmetry,
                              std::uint64_t seed = 0x5eedULL);

/// Fast path for permutation-symmetric states: evaluates one representative
/// Pauli string per index multiset and relies on permutation invariance for
/// the rest. Throws NotSymmetricError when the sampled check fails.
SymmetricCorrTensor symmetric_correlation_tensor(
    const PureState& state, Real symmetry_tolerance = tol::symmetry);

}  // namespace ct
