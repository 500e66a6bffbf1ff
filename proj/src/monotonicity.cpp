#include "corrtensor/monotonicity.hpp"

namespace ct {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ContractViolation(what);
}

}  // namespace

std::pair<Real, Real> lu_invariance_check(
    const PureState& state, const std::vector<LocalOperator>& unitaries,
    int order_cap) {
  require(static_cast<int>(unitaries.size()) == state.num_qubits,
          "lu_invariance_check: need one unitary per qubit");
  PureState rotated = state;
  for (const auto& u : unitaries) rotated = apply_local_unitary(rotated, u);
  const Real before = tensor_norm(correlation_tensor(state, order_cap));
  const Real after = tensor_norm(correlation_tensor(rotated, order_cap));
  return {before, after};
}

PovmExperimentReport povm_experiment(const PureState& state,
                                     const std::vector<LocalOperator>& kraus_set,
                                     int order_cap) {
  require(!kraus_set.empty(), "povm_experiment: empty Kraus set");
  const int qubit = kraus_set.front().qubit;
  for (const auto& e : kraus_set) {
    require(e.kind == LocalOperator::Kind::kraus,
            "povm_experiment: all elements must be Kraus operators");
    require(e.qubit == qubit,
            "povm_experiment: all elements must act on the same qubit");
  }
  require(is_complete_kraus_set(kraus_set),
          "povm_experiment: Kraus set is not complete");

  MeasureOptions opts;
  opts.order_cap = order_cap;
  PovmExperimentReport report;
  report.input_e_t = e_t(state, opts).e_t;
  for (const auto& element : kraus_set) {
    const KrausOutcome outcome = apply_kraus(state, element);
    PovmOutcome row;
    row.probability = outcome.probability;
    row.e_t = outcome.post_state ? e_t(*outcome.post_state, opts).e_t : 0.0;
    report.expected_e_t += row.probability * row.e_t;
    report.outcomes.push_back(row);
  }
  report.gap = report.input_e_t - report.expected_e_t;
  return report;
}

std::pair<Real, Real> trace_out_comparison(const PureState& state, int qubit,
                                           int order_cap) {
  require(state.num_qubits >= 2,
          "trace_out_comparison: need at least two qubits");
  require(qubit >= 1 && qubit <= state.num_qubits,
          "trace_out_comparison: qubit index out of range");
  std::vector<int> keep;
  for (int q = 1; q <= state.num_qubits; ++q) {
    if (q != qubit) keep.push_back(q);
  }
  const Real norm_full = tensor_norm(correlation_tensor(state, order_cap));
  const DensityMatrix reduced = partial_trace(state, keep);
  const Real norm_reduced = tensor_norm(correlation_tensor(reduced, order_cap));
  return {norm_full, norm_reduced};
}

}  // namespace ct
