#pragma once

#include <utility>
#include <vector>

#include "corrtensor/measure.hpp"
#include "corrtensor/state.hpp"

namespace ct {

/// One measurement branch of a local POVM experiment.
struct PovmOutcome {
  Real probability = 0.0;
  Real e_t = 0.0;  ///< measure of the normalized residual pure state
};

/// Expected-entanglement bookkeeping for a complete local Kraus set. The
/// monotonicity statement under test is gap >= 0 (up to tolerance).
struct PovmExperimentReport {
  Real input_e_t = 0.0;
  std::vector<PovmOutcome> outcomes;
  Real expected_e_t = 0.0;  ///< sum p_k * e_t_k
  Real gap = 0.0;           ///< input_e_t - expected_e_t
};

/// Tensor norms before/after a per-qubit unitary layer (one operator per
/// qubit, in qubit order). Equality within tolerance is the invariance
/// property under test.
std::pair<Real, Real> lu_invariance_check(
    const PureState& state, const std::vector<LocalOperator>& unitaries,
    int order_cap = kDefaultOrderCap);

/// Applies a complete Kraus set on a single qubit and reports the expected
/// residual measure. All elements must act on the same qubit and satisfy
/// completeness within tol::kraus_completeness. Outcomes whose probability
/// is at or below tol::zero_probability contribute probability only.
PovmExperimentReport povm_experiment(const PureState& state,
                                     const std::vector<LocalOperator>& kraus_set,
                                     int order_cap = kDefaultOrderCap);

/// (norm of the full tensor, norm of the (N-1)-qubit tensor after tracing
/// out `qubit`). The second never exceeds the first for any state.
std::pair<Real, Real> trace_out_comparison(const PureState& state, int qubit,
                                           int order_cap = kDefaultOrderCap);

}  // namespace ct
