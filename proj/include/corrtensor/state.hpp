#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "corrtensor/common.hpp"

namespace ct {

/// N-qubit pure state. Qubit 1 is the leftmost tensor factor, i.e. the most
/// significant bit of the basis index. Immutable after construction.
struct PureState {
  int num_qubits = 0;
  Eigen::VectorXcd amplitudes;

  /// Validates length 2^n and unit norm (within tol::state_norm).
  static PureState from_amplitudes(int num_qubits, Eigen::VectorXcd amplitudes);
  /// Same, but rescales to unit norm first (rejects the zero vector).
  static PureState normalized(int num_qubits, Eigen::VectorXcd amplitudes);

  Index dim() const { return amplitudes.size(); }
};

/// Density operator on an ordered subset of qubits. qubit_labels are the
/// original 1-based indices, ascending; the first label is the most
/// significant bit of the matrix index.
struct DensityMatrix {
  std::vector<int> qubit_labels;
  Eigen::MatrixXcd matrix;

  /// Validates Hermiticity, unit trace and positive semidefiniteness
  /// (within tol::hermitian / tol::trace / tol::psd).
  static DensityMatrix from_matrix(std::vector<int> qubit_labels,
                                   Eigen::MatrixXcd matrix);

  int num_qubits() const { return static_cast<int>(qubit_labels.size()); }
};

/// Tensor product of single-qubit Pauli operators; labels[k] in {0,1,2,3}
/// meaning {I, sigma_x, sigma_y, sigma_z} on qubit k+1.
struct PauliString {
  std::vector<std::uint8_t> labels;

  static PauliString from_labels(std::vector<int> labels);
  int length() const { return static_cast<int>(labels.size()); }
};

/// A 2x2 operator acting on one designated qubit.
struct LocalOperator {
  enum class Kind { unitary, kraus };

  int qubit = 1;
  Eigen::Matrix2cd matrix;
  Kind kind = Kind::unitary;

  /// Requires U U^dag = I within tol::unitary.
  static LocalOperator unitary(int qubit, const Eigen::Matrix2cd& m);
  /// Requires [L, L^dag] = 0 within tol::kraus_normality. Completeness of a
  /// set is checked where sets are consumed.
  static LocalOperator kraus(int qubit, const Eigen::Matrix2cd& m);
};

/// Kraus element applied to a pure state. When the outcome probability is
/// at or below tol::zero_probability there is no post state.
struct KrausOutcome {
  Real probability = 0.0;
  std::optional<PureState> post_state;
};

/// Tr(rho sigma_p) for a pure or reduced state. The raw inner product must
/// be real up to tol::imag_residue (Pauli strings are Hermitian); the
/// imaginary residue is checked and discarded.
Real pauli_expectation(const PureState& state, const PauliString& p);
Real pauli_expectation(const DensityMatrix& state, const PauliString& p);

PureState apply_local_unitary(const PureState& state, const LocalOperator& op);
KrausOutcome apply_kraus(const PureState& state, const LocalOperator& element);

/// Reduced density matrix over `keep` (1-based labels, any order; result is
/// sorted ascending). Keeping every qubit converts the input to a density
/// matrix.
DensityMatrix partial_trace(const PureState& state, std::vector<int> keep);
DensityMatrix partial_trace(const DensityMatrix& state, std::vector<int> keep);

DensityMatrix to_density_matrix(const PureState& state);
PureState tensor_product(const PureState& a, const PureState& b);
Complex inner_product(const PureState& a, const PureState& b);

/// Checks completeness sum L_i^dag L_i = I within tol::kraus_completeness.
bool is_complete_kraus_set(const std::vector<LocalOperator>& elements);

}  // namespace ct
