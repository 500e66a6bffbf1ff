#include "corrtensor/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ct {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ContractViolation(what);
}

Index pow_index(Index base, int exp) {
  Index v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

void check_order_cap(int order, int cap, const char* what) {
  if (order > cap) {
    throw ResourceLimitError(std::string(what) + ": order " +
                             std::to_string(order) + " exceeds cap " +
                             std::to_string(cap));
  }
}

std::vector<int> full_subset(int n) {
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = i + 1;
  return s;
}

std::vector<int> checked_subset(std::vector<int> subset, int num_qubits) {
  require(!subset.empty(), "correlation_tensor: subset must be nonempty");
  std::vector<int> s = std::move(subset);
  std::sort(s.begin(), s.end());
  require(std::adjacent_find(s.begin(), s.end()) == s.end(),
          "correlation_tensor: duplicate qubit in subset");
  require(s.front() >= 1 && s.back() <= num_qubits,
          "correlation_tensor: subset out of range");
  return s;
}

// Decodes flat index -> digits (0-based) for mode dimension `dim`.
void decode(Index flat, int order, Index dim, std::span<int> digits) {
  for (int i = order - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(flat % dim);
    flat /= dim;
  }
}

template <typename StateT>
CorrTensor build_corr(const StateT& state, int num_qubits,
                      const std::vector<int>& subset_pos1based, int order_cap) {
  const int m = static_cast<int>(subset_pos1based.size());
  check_order_cap(m, order_cap, "correlation_tensor");
  CorrTensor t;
  t.qubit_labels = subset_pos1based;
  const Index size = pow_index(3, m);
  t.entries.resize(size);
  std::vector<int> digits(m);
  std::vector<int> labels(num_qubits, 0);
  for (Index flat = 0; flat < size; ++flat) {
    decode(flat, m, 3, digits);
    for (int i = 0; i < m; ++i) labels[subset_pos1based[i] - 1] = digits[i] + 1;
    t.entries[flat] = pauli_expectation(state, PauliString::from_labels(labels));
    for (int i = 0; i < m; ++i) labels[subset_pos1based[i] - 1] = 0;
  }
  return t;
}

}  // namespace

Real CorrTensor::at(std::span<const int> alphas) const {
  return const_cast<CorrTensor*>(this)->at(alphas);
}

Real& CorrTensor::at(std::span<const int> alphas) {
  require(static_cast<int>(alphas.size()) == order(),
          "CorrTensor::at: wrong index arity");
  Index flat = 0;
  for (int a : alphas) {
    require(a >= 1 && a <= 3, "CorrTensor::at: index out of range");
    flat = flat * 3 + (a - 1);
  }
  return entries[flat];
}

CorrTensor CorrTensor::zero(std::vector<int> qubit_labels) {
  CorrTensor t;
  t.entries = Eigen::VectorXd::Zero(pow_index(3, static_cast<int>(qubit_labels.size())));
  t.qubit_labels = std::move(qubit_labels);
  return t;
}

Real ExtendedTensor::at(std::span<const int> indices) const {
  require(static_cast<int>(indices.size()) == num_qubits,
          "ExtendedTensor::at: wrong index arity");
  Index flat = 0;
  for (int a : indices) {
    require(a >= 0 && a <= 3, "ExtendedTensor::at: index out of range");
    flat = flat * 4 + a;
  }
  return entries[flat];
}

BlochVector bloch_vector(const PureState& state, int qubit) {
  require(qubit >= 1 && qubit <= state.num_qubits,
          "bloch_vector: qubit index out of range");
  BlochVector s;
  std::vector<int> labels(state.num_qubits, 0);
  for (int a = 1; a <= 3; ++a) {
    labels[qubit - 1] = a;
    s[a - 1] = pauli_expectation(state, PauliString::from_labels(labels));
  }
  return s;
}

BlochVector bloch_vector(const DensityMatrix& state, int qubit) {
  const auto it = std::find(state.qubit_labels.begin(),
                            state.qubit_labels.end(), qubit);
  require(it != state.qubit_labels.end(),
          "bloch_vector: qubit not present in density matrix");
  const int pos = static_cast<int>(it - state.qubit_labels.begin());
  BlochVector s;
  std::vector<int> labels(state.num_qubits(), 0);
  for (int a = 1; a <= 3; ++a) {
    labels[pos] = a;
    s[a - 1] = pauli_expectation(state, PauliString::from_labels(labels));
  }
  return s;
}

CorrTensor correlation_tensor(const PureState& state, std::vector<int> subset,
                              int order_cap) {
  return build_corr(state, state.num_qubits,
                    checked_subset(std::move(subset), state.num_qubits),
                    order_cap);
}

CorrTensor correlation_tensor(const DensityMatrix& state,
                              std::vector<int> subset, int order_cap) {
  // subset holds the state's own labels; map to positions inside the matrix
  require(!subset.empty(), "correlation_tensor: subset must be nonempty");
  std::vector<int> positions;
  positions.reserve(subset.size());
  std::vector<int> sorted = std::move(subset);
  std::sort(sorted.begin(), sorted.end());
  for (int q : sorted) {
    const auto it = std::find(state.qubit_labels.begin(),
                              state.qubit_labels.end(), q);
    require(it != state.qubit_labels.end(),
            "correlation_tensor: subset qubit not in density matrix");
    positions.push_back(static_cast<int>(it - state.qubit_labels.begin()) + 1);
  }
  CorrTensor t = build_corr(state, state.num_qubits(), positions, order_cap);
  t.qubit_labels = sorted;
  return t;
}

CorrTensor correlation_tensor(const PureState& state, int order_cap) {
  return correlation_tensor(state, full_subset(state.num_qubits), order_cap);
}

CorrTensor correlation_tensor(const DensityMatrix& state, int order_cap) {
  return correlation_tensor(state, state.qubit_labels, order_cap);
}

ExtendedTensor extended_tensor(const PureState& state, int extended_cap) {
  check_order_cap(state.num_qubits, extended_cap, "extended_tensor");
  ExtendedTensor t;
  t.num_qubits = state.num_qubits;
  const Index size = pow_index(4, state.num_qubits);
  t.entries.resize(size);
  t.entries[0] = 1.0;  // identity string on a unit-trace state
  std::vector<int> labels(state.num_qubits);
  for (Index flat = 1; flat < size; ++flat) {
    decode(flat, state.num_qubits, 4, labels);
    t.entries[flat] =
        pauli_expectation(state, PauliString::from_labels(labels));
  }
  return t;
}

namespace {

Real norm_of(const Eigen::VectorXd& entries) {
  Eigen::VectorXd squares = entries.array().square();
  return std::sqrt(
      pairwise_sum(std::span<const Real>(squares.data(), squares.size())));
}

}  // namespace

Real tensor_norm(const CorrTensor& t) { return norm_of(t.entries); }
Real tensor_norm(const ExtendedTensor& t) { return norm_of(t.entries); }

Eigen::MatrixXd matrix_unfolding(const CorrTensor& t, int mode) {
  const int m = t.order();
  require(mode >= 1 && mode <= m, "matrix_unfolding: mode out of range");
  const Index cols = pow_index(3, m - 1);
  Eigen::MatrixXd out(3, cols);
  const Index inner = pow_index(3, m - mode);       // stride of the mode digit
  const Index col_inner = inner;                    // trailing block size
  for (Index flat = 0; flat < t.size(); ++flat) {
    const Index digit = (flat / inner) % 3;
    const Index prefix = flat / (inner * 3);
    const Index suffix = flat % inner;
    out(digit, prefix * col_inner + suffix) = t.entries[flat];
  }
  return out;
}

CorrTensor refold(const Eigen::MatrixXd& unfolded, int mode,
                  std::vector<int> qubit_labels) {
  const int m = static_cast<int>(qubit_labels.size());
  require(mode >= 1 && mode <= m, "refold: mode out of range");
  require(unfolded.rows() == 3 && unfolded.cols() == pow_index(3, m - 1),
          "refold: matrix shape does not match order");
  CorrTensor t = CorrTensor::zero(std::move(qubit_labels));
  const Index inner = pow_index(3, m - mode);
  for (Index flat = 0; flat < t.size(); ++flat) {
    const Index digit = (flat / inner) % 3;
    const Index prefix = flat / (inner * 3);
    const Index suffix = flat % inner;
    t.entries[flat] = unfolded(digit, prefix * inner + suffix);
  }
  return t;
}

CorrTensor k_mode_product(const CorrTensor& t, const Eigen::Matrix3d& m,
                          int mode) {
  const int order = t.order();
  require(mode >= 1 && mode <= order, "k_mode_product: mode out of range");
  CorrTensor out = CorrTensor::zero(t.qubit_labels);
  const Index inner = pow_index(3, order - mode);
  const Index outer = t.size() / (inner * 3);
  for (Index pre = 0; pre < outer; ++pre) {
    for (Index suf = 0; suf < inner; ++suf) {
      const Index base = pre * inner * 3 + suf;
      for (int r = 0; r < 3; ++r) {
        Real acc = 0.0;
        for (int c = 0; c < 3; ++c) acc += m(r, c) * t.entries[base + c * inner];
        out.entries[base + r * inner] = acc;
      }
    }
  }
  return out;
}

CorrTensor outer_product(const CorrTensor& a, const CorrTensor& b) {
  CorrTensor out;
  out.qubit_labels = a.qubit_labels;
  const int shift = a.qubit_labels.empty()
                        ? 0
                        : *std::max_element(a.qubit_labels.begin(),
                                            a.qubit_labels.end());
  for (int l : b.qubit_labels) out.qubit_labels.push_back(l + shift);
  out.entries.resize(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i)
    out.entries.segment(i * b.size(), b.size()) = a.entries[i] * b.entries;
  return out;
}

CorrTensor to_tensor(const BlochVector& s, int label) {
  CorrTensor t;
  t.qubit_labels = {label};
  t.entries = s;
  return t;
}

bool is_permutation_symmetric(const PureState& state, Real tolerance,
                              std::uint64_t seed) {
  if (state.num_qubits == 1) return true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, state.num_qubits);
  const auto& a = state.amplitudes;
  const int n = state.num_qubits;
  for (int trial = 0; trial < 2 * n; ++trial) {
    int p = pick(rng);
    int q = pick(rng);
    while (q == p) q = pick(rng);
    const std::uint64_t bp = std::uint64_t{1} << (n - p);
    const std::uint64_t bq = std::uint64_t{1} << (n - q);
    for (Index x = 0; x < a.size(); ++x) {
      const bool hp = x & bp;
      const bool hq = x & bq;
      if (hp == hq) continue;
      const Index y = static_cast<Index>(static_cast<std::uint64_t>(x) ^ bp ^ bq);
      if (std::abs(a[x] - a[y]) > tolerance) return false;
    }
  }
  return true;
}

Real SymmetricCorrTensor::value(int n1, int n2) const {
  const int n = num_qubits;
  require(n1 >= 0 && n2 >= 0 && n1 + n2 <= n,
          "SymmetricCorrTensor::value: bad count vector");
  // rank of (n1, n2) in the enumeration n1 = 0..N outer, n2 = 0..N-n1 inner
  Index rank = 0;
  for (int i = 0; i < n1; ++i) rank += n - i + 1;
  rank += n2;
  return values[static_cast<std::size_t>(rank)];
}

Real SymmetricCorrTensor::multiplicity(int num_qubits, int n1, int n2) {
  return binomial(num_qubits, n1) * binomial(num_qubits - n1, n2);
}

Real SymmetricCorrTensor::norm() const {
  std::vector<Real> terms;
  terms.reserve(values.size());
  std::size_t r = 0;
  for (int n1 = 0; n1 <= num_qubits; ++n1) {
    for (int n2 = 0; n2 <= num_qubits - n1; ++n2, ++r) {
      terms.push_back(multiplicity(num_qubits, n1, n2) * values[r] * values[r]);
    }
  }
  return std::sqrt(pairwise_sum(terms));
}

CorrTensor SymmetricCorrTensor::materialize(int order_cap) const {
  check_order_cap(num_qubits, order_cap, "SymmetricCorrTensor::materialize");
  CorrTensor t = CorrTensor::zero(full_subset(num_qubits));
  std::vector<int> digits(num_qubits);
  for (Index flat = 0; flat < t.size(); ++flat) {
    decode(flat, num_qubits, 3, digits);
    int n1 = 0, n2 = 0;
    for (int d : digits) {
      n1 += (d == 0);
      n2 += (d == 1);
    }
    t.entries[flat] = value(n1, n2);
  }
  return t;
}

SymmetricCorrTensor symmetric_correlation_tensor(const PureState& state,
                                                 Real symmetry_tolerance) {
  if (!is_permutation_symmetric(state, symmetry_tolerance)) {
    throw NotSymmetricError(
        "symmetric_correlation_tensor: state failed the sampled "
        "permutation-symmetry check");
  }
  const int n = state.num_qubits;
  SymmetricCorrTensor t;
  t.num_qubits = n;
  t.values.reserve(static_cast<std::size_t>((n + 1) * (n + 2) / 2));
  std::vector<int> labels(n);
  for (int n1 = 0; n1 <= n; ++n1) {
    for (int n2 = 0; n2 <= n - n1; ++n2) {
      int i = 0;
      for (int k = 0; k < n1; ++k) labels[i++] = 1;
      for (int k = 0; k < n2; ++k) labels[i++] = 2;
      while (i < n) labels[i++] = 3;
      t.values.push_back(
          pauli_expectation(state, PauliString::from_labels(labels)));
    }
  }
  return t;
}

}  // namespace ct
