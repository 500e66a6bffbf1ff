#include "corrtensor/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace ct {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ContractViolation(what);
}

std::uint64_t bit_of_qubit(int num_qubits, int qubit) {
  return std::uint64_t{1} << (num_qubits - qubit);
}

// i^k for k mod 4
Complex i_power(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

struct StringMasks {
  std::uint64_t flip = 0;  // X and Y support
  std::uint64_t yz = 0;    // Y and Z support (sign bits)
  int n_y = 0;
};

StringMasks masks_for(const PauliString& p, int num_qubits) {
  StringMasks m;
  for (int k = 1; k <= num_qubits; ++k) {
    const std::uint64_t bit = bit_of_qubit(num_qubits, k);
    switch (p.labels[k - 1]) {
      case 1: m.flip |= bit; break;
      case 2: m.flip |= bit; m.yz |= bit; ++m.n_y; break;
      case 3: m.yz |= bit; break;
      default: break;
    }
  }
  return m;
}

Real check_real(Complex value, const char* what) {
  if (std::abs(value.imag()) >= tol::imag_residue) {
    throw NumericalIntegrityError(std::string(what) +
                                  ": imaginary residue above tolerance");
  }
  return value.real();
}

}  // namespace

PureState PureState::from_amplitudes(int num_qubits, Eigen::VectorXcd amplitudes) {
  require(num_qubits >= 1, "PureState: need at least one qubit");
  require(amplitudes.size() == (Index{1} << num_qubits),
          "PureState: amplitude length must be 2^num_qubits");
  const Real norm2 = amplitudes.squaredNorm();
  require(std::abs(norm2 - 1.0) <= tol::state_norm,
          "PureState: amplitudes must be normalized");
  return PureState{num_qubits, std::move(amplitudes)};
}

PureState PureState::normalized(int num_qubits, Eigen::VectorXcd amplitudes) {
  require(num_qubits >= 1, "PureState: need at least one qubit");
  require(amplitudes.size() == (Index{1} << num_qubits),
          "PureState: amplitude length must be 2^num_qubits");
  const Real norm = amplitudes.norm();
  require(norm > 0.0, "PureState: cannot normalize the zero vector");
  return PureState{num_qubits, amplitudes / norm};
}

DensityMatrix DensityMatrix::from_matrix(std::vector<int> qubit_labels,
                                         Eigen::MatrixXcd matrix) {
  require(!qubit_labels.empty(), "DensityMatrix: empty qubit set");
  std::vector<int> sorted = qubit_labels;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "DensityMatrix: duplicate qubit label");
  require(sorted == qubit_labels, "DensityMatrix: labels must be ascending");
  const Index dim = Index{1} << qubit_labels.size();
  require(matrix.rows() == dim && matrix.cols() == dim,
          "DensityMatrix: matrix must be 2^M x 2^M");
  require((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() <= tol::hermitian,
          "DensityMatrix: matrix must be Hermitian");
  require(std::abs(matrix.trace() - Complex{1.0, 0.0}) <= tol::trace,
          "DensityMatrix: trace must be 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix,
                                                     Eigen::EigenvaluesOnly);
  require(es.eigenvalues().minCoeff() >= -tol::psd,
          "DensityMatrix: matrix must be positive semidefinite");
  return DensityMatrix{std::move(qubit_labels), std::move(matrix)};
}

PauliString PauliString::from_labels(std::vector<int> labels) {
  PauliString p;
  p.labels.reserve(labels.size());
  for (int l : labels) {
    require(l >= 0 && l <= 3, "PauliString: labels must lie in {0,1,2,3}");
    p.labels.push_back(static_cast<std::uint8_t>(l));
  }
  return p;
}

LocalOperator LocalOperator::unitary(int qubit, const Eigen::Matrix2cd& m) {
  require(qubit >= 1, "LocalOperator: qubit index must be >= 1");
  require((m * m.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <=
              tol::unitary,
          "LocalOperator: matrix is not unitary");
  return LocalOperator{qubit, m, Kind::unitary};
}

LocalOperator LocalOperator::kraus(int qubit, const Eigen::Matrix2cd& m) {
  require(qubit >= 1, "LocalOperator: qubit index must be >= 1");
  require((m * m.adjoint() - m.adjoint() * m).cwiseAbs().maxCoeff() <=
              tol::kraus_normality,
          "LocalOperator: Kraus element must be normal");
  return LocalOperator{qubit, m, Kind::kraus};
}

Real pauli_expectation(const PureState& state, const PauliString& p) {
  require(p.length() == state.num_qubits,
          "pauli_expectation: string length must match qubit count");
  const StringMasks m = masks_for(p, state.num_qubits);
  const auto& a = state.amplitudes;
  Complex acc{0.0, 0.0};
  for (Index x = 0; x < a.size(); ++x) {
    const Real sign =
        (std::popcount(static_cast<std::uint64_t>(x) & m.yz) & 1) ? -1.0 : 1.0;
    acc += sign * std::conj(a[static_cast<Index>(
                      static_cast<std::uint64_t>(x) ^ m.flip)]) *
           a[x];
  }
  return check_real(i_power(m.n_y) * acc, "pauli_expectation");
}

Real pauli_expectation(const DensityMatrix& state, const PauliString& p) {
  require(p.length() == state.num_qubits(),
          "pauli_expectation: string length must match qubit count");
  const StringMasks m = masks_for(p, state.num_qubits());
  const auto& rho = state.matrix;
  Complex acc{0.0, 0.0};
  for (Index x = 0; x < rho.rows(); ++x) {
    const Real sign =
        (std::popcount(static_cast<std::uint64_t>(x) & m.yz) & 1) ? -1.0 : 1.0;
    acc += sign * rho(static_cast<Index>(static_cast<std::uint64_t>(x) ^ m.flip), x);
  }
  return check_real(i_power(m.n_y) * acc, "pauli_expectation");
}

namespace {

// Shared single-qubit update: out = (M on `qubit`) |state>.
Eigen::VectorXcd apply_one_qubit(const PureState& state, int qubit,
                                 const Eigen::Matrix2cd& m) {
  require(qubit >= 1 && qubit <= state.num_qubits,
          "local operator: qubit index out of range");
  const std::uint64_t bit = bit_of_qubit(state.num_qubits, qubit);
  const auto& a = state.amplitudes;
  Eigen::VectorXcd out(a.size());
  for (Index x = 0; x < a.size(); ++x) {
    if (static_cast<std::uint64_t>(x) & bit) continue;
    const Index x0 = x;
    const Index x1 = static_cast<Index>(static_cast<std::uint64_t>(x) | bit);
    out[x0] = m(0, 0) * a[x0] + m(0, 1) * a[x1];
    out[x1] = m(1, 0) * a[x0] + m(1, 1) * a[x1];
  }
  return out;
}

}  // namespace

PureState apply_local_unitary(const PureState& state, const LocalOperator& op) {
  require(op.kind == LocalOperator::Kind::unitary,
          "apply_local_unitary: operator kind must be unitary");
  PureState out;
  out.num_qubits = state.num_qubits;
  out.amplitudes = apply_one_qubit(state, op.qubit, op.matrix);
  // Unitarity keeps the norm; renormalize to absorb rounding.
  out.amplitudes /= out.amplitudes.norm();
  return out;
}

KrausOutcome apply_kraus(const PureState& state, const LocalOperator& element) {
  require(element.kind == LocalOperator::Kind::kraus,
          "apply_kraus: operator kind must be kraus");
  Eigen::VectorXcd v = apply_one_qubit(state, element.qubit, element.matrix);
  const Real probability = v.squaredNorm();
  KrausOutcome outcome;
  outcome.probability = probability;
  if (probability > tol::zero_probability) {
    outcome.post_state =
        PureState{state.num_qubits, v / std::sqrt(probability)};
  }
  return outcome;
}

namespace {

std::vector<int> sorted_keep(const std::vector<int>& keep, int num_qubits) {
  require(!keep.empty(), "partial_trace: keep set must be nonempty");
  std::vector<int> s = keep;
  std::sort(s.begin(), s.end());
  require(std::adjacent_find(s.begin(), s.end()) == s.end(),
          "partial_trace: duplicate qubit in keep set");
  require(s.front() >= 1 && s.back() <= num_qubits,
          "partial_trace: keep set out of range");
  return s;
}

}  // namespace

DensityMatrix partial_trace(const PureState& state, std::vector<int> keep) {
  const std::vector<int> kept = sorted_keep(keep, state.num_qubits);
  const int n = state.num_qubits;
  const int m = static_cast<int>(kept.size());

  std::vector<std::uint64_t> kept_bits(m);
  for (int i = 0; i < m; ++i) kept_bits[i] = bit_of_qubit(n, kept[i]);
  std::vector<std::uint64_t> traced_bits;
  for (int q = 1; q <= n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q))
      traced_bits.push_back(bit_of_qubit(n, q));
  }

  const Index dim_k = Index{1} << m;
  const Index dim_t = Index{1} << traced_bits.size();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim_k, dim_k);
  Eigen::VectorXcd col(dim_k);
  for (Index t = 0; t < dim_t; ++t) {
    std::uint64_t traced_part = 0;
    for (std::size_t i = 0; i < traced_bits.size(); ++i) {
      if (t & (Index{1} << (traced_bits.size() - 1 - i))) traced_part |= traced_bits[i];
    }
    for (Index a = 0; a < dim_k; ++a) {
      std::uint64_t idx = traced_part;
      for (int i = 0; i < m; ++i) {
        if (a & (Index{1} << (m - 1 - i))) idx |= kept_bits[i];
      }
      col[a] = state.amplitudes[static_cast<Index>(idx)];
    }
    rho.noalias() += col * col.adjoint();
  }
  DensityMatrix out;
  out.qubit_labels = kept;
  out.matrix = std::move(rho);
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& state, std::vector<int> keep) {
  require(!keep.empty(), "partial_trace: keep set must be nonempty");
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  require(std::adjacent_find(kept.begin(), kept.end()) == kept.end(),
          "partial_trace: duplicate qubit in keep set");
  for (int q : kept) {
    require(std::binary_search(state.qubit_labels.begin(),
                               state.qubit_labels.end(), q),
            "partial_trace: keep set must be a subset of the state's qubits");
  }

  const int n = state.num_qubits();
  // positions (0-based, MSB-first) of kept / traced qubits inside this matrix
  std::vector<int> kept_pos, traced_pos;
  for (int i = 0; i < n; ++i) {
    if (std::binary_search(kept.begin(), kept.end(), state.qubit_labels[i]))
      kept_pos.push_back(i);
    else
      traced_pos.push_back(i);
  }

  const Index dim_k = Index{1} << kept_pos.size();
  const Index dim_t = Index{1} << traced_pos.size();
  auto scatter = [&](Index a, Index t) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < kept_pos.size(); ++i) {
      if (a & (Index{1} << (kept_pos.size() - 1 - i)))
        idx |= std::uint64_t{1} << (n - 1 - kept_pos[i]);
    }
    for (std::size_t i = 0; i < traced_pos.size(); ++i) {
      if (t & (Index{1} << (traced_pos.size() - 1 - i)))
        idx |= std::uint64_t{1} << (n - 1 - traced_pos[i]);
    }
    return static_cast<Index>(idx);
  };

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim_k, dim_k);
  for (Index a = 0; a < dim_k; ++a) {
    for (Index b = 0; b < dim_k; ++b) {
      Complex acc{0.0, 0.0};
      for (Index t = 0; t < dim_t; ++t) {
        acc += state.matrix(scatter(a, t), scatter(b, t));
      }
      rho(a, b) = acc;
    }
  }
  DensityMatrix out;
  out.qubit_labels = kept;
  out.matrix = std::move(rho);
  return out;
}

DensityMatrix to_density_matrix(const PureState& state) {
  DensityMatrix out;
  out.qubit_labels.resize(state.num_qubits);
  for (int i = 0; i < state.num_qubits; ++i) out.qubit_labels[i] = i + 1;
  out.matrix = state.amplitudes * state.amplitudes.adjoint();
  return out;
}

PureState tensor_product(const PureState& a, const PureState& b) {
  PureState out;
  out.num_qubits = a.num_qubits + b.num_qubits;
  out.amplitudes.resize(a.dim() * b.dim());
  for (Index i = 0; i < a.dim(); ++i)
    out.amplitudes.segment(i * b.dim(), b.dim()) = a.amplitudes[i] * b.amplitudes;
  return out;
}

Complex inner_product(const PureState& a, const PureState& b) {
  require(a.num_qubits == b.num_qubits,
          "inner_product: qubit counts must match");
  return a.amplitudes.dot(b.amplitudes);
}

bool is_complete_kraus_set(const std::vector<LocalOperator>& elements) {
  if (elements.empty()) return false;
  Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
  for (const auto& e : elements) sum += e.matrix.adjoint() * e.matrix;
  return (sum - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <=
         tol::kraus_completeness;
}

}  // namespace ct
