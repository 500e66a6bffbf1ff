#pragma once

#include <optional>

#include "corrtensor/common.hpp"
#include "corrtensor/state.hpp"
#include "corrtensor/tensor.hpp"

namespace ct {

/// Result of evaluating the correlation-tensor measure on one state.
struct MeasureReport {
  Real norm = 0.0;      ///< ||T^(N)||
  Real e_t = 0.0;       ///< norm - 1
  Real e_t_log = 0.0;   ///< log2(norm)
  std::optional<Real> normalized;  ///< e_t / r_n(N) when requested
  int n_qubits = 0;
  Real elapsed_ms = 0.0;
};

struct MeasureOptions {
  bool normalize = false;        ///< fill MeasureReport::normalized
  bool symmetric = false;        ///< use the per-multiset fast path
  int order_cap = kDefaultOrderCap;
  Real symmetry_tolerance = tol::symmetry;
};

/// ||T^(N)|| - 1 of a pure state via the full correlation tensor (or the
/// symmetric fast path when options.symmetric is set).
MeasureReport e_t(const PureState& state, const MeasureOptions& options = {});

/// Same quantity for a (possibly mixed) density matrix over its own qubits.
/// This is NOT the convex-roof extension; reduced mixed states can score
/// below zero.
MeasureReport e_t(const DensityMatrix& state,
                  const MeasureOptions& options = {});

/// Measure of the balanced maximally entangled superposition of the all-zeros
/// and all-ones basis states, used as the normalization constant:
/// sqrt(1 + (1 + (-1)^N)^2 / 4 + sum_{k>=1} C(N, 2k)) - 1. Requires N >= 2.
Real r_n(int whole_register_qubits);

/// Closed form for sqrt(p)|0..0> + sqrt(1-p)|1..1>, N >= 2, 0 <= p <= 1.
Real ghz_closed_form(Real p, int num_qubits);

/// Closed form for the uniform single-excitation superposition, N >= 3:
/// sqrt(1 + 4(N-1)/N) - 1.
Real w_closed_form(int num_qubits);

/// Closed form for sqrt(s)|GHZ> + sqrt(1-s) e^{i phi}|W> on three qubits:
/// sqrt(4 s^2 + 6 s (1-s) + (11/3)(1-s)^2) - 1. Phase independent.
Real wghz_closed_form(Real s);

/// Closed form for a general two-qubit state a1|00>+a2|01>+a3|10>+a4|11>:
/// sqrt(1 + 8 (|a2 a3| - |a1 a4|)^2) - 1. Requires unit norm.
Real two_qubit_closed_form(Complex a1, Complex a2, Complex a3, Complex a4);

/// Concurrence route for sqrt(p)|00> + sqrt(1-p)|11>:
/// C = 2 sqrt(p(1-p)), returns sqrt(1 + 2 C^2) - 1.
Real concurrence_relation(Real p);

/// Squared tensor norm of the uniform weight-s superposition evaluated from
/// a fixed even-index summation formula (advisory: known to drift from the
/// exact value once terms with four or more x and y indices contribute,
/// i.e. s >= 4; see heisenberg_formula_report). Requires even N, 0 <= s <= N.
Real heisenberg_norm_formula(int num_qubits, int s);

/// Exact squared tensor norm of the uniform weight-s superposition via the
/// per-multiset combinatorial evaluation; scales to N in the hundreds.
/// Agrees with the dense tensor wherever the latter is feasible.
Real dicke_norm_squared(int num_qubits, int s);

/// Side-by-side evaluation of the advisory formula against the exact
/// combinatorial value, with a mismatch marker instead of a failure.
struct FormulaComparison {
  Real formula = 0.0;
  Real reference = 0.0;
  bool matches = false;
};
FormulaComparison heisenberg_formula_report(int num_qubits, int s,
                                            Real relative_tolerance = 1e-9);

}  // namespace ct
