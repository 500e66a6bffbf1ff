#include "corrtensor/grover.hpp"

#include <cmath>

namespace ct {

GroverTrace grover_run(int num_qubits, std::uint64_t target, int iterations,
                       int order_cap) {
  if (num_qubits < 1) throw ContractViolation("grover_run: need qubits >= 1");
  const Index dim = Index{1} << num_qubits;
  if (target >= static_cast<std::uint64_t>(dim))
    throw ContractViolation("grover_run: target out of range");
  if (num_qubits > order_cap)
    throw ResourceLimitError("grover_run: qubit count exceeds the tensor cap");
  if (iterations < 0)
    throw ContractViolation("grover_run: iterations must be >= 0");

  GroverTrace trace;
  trace.n_qubits = num_qubits;
  trace.target = target;
  trace.rows.reserve(static_cast<std::size_t>(iterations) + 1);

  Eigen::VectorXcd a =
      Eigen::VectorXcd::Constant(dim, Complex{1.0 / std::sqrt(Real(dim)), 0.0});
  MeasureOptions opts;
  opts.order_cap = order_cap;

  const auto record = [&](int iteration) {
    const PureState psi{num_qubits, a};
    GroverRow row;
    row.iteration = iteration;
    row.e_t = e_t(psi, opts).e_t;
    row.success_prob = std::norm(a[static_cast<Index>(target)]);
    trace.rows.push_back(row);
  };

  record(0);
  for (int it = 1; it <= iterations; ++it) {
    a[static_cast<Index>(target)] = -a[static_cast<Index>(target)];
    const Complex mean = a.mean();
    a = (2.0 * mean - a.array()).matrix();
    // reflections are norm preserving; absorb rounding drift
    a /= a.norm();
    record(it);
  }
  return trace;
}

}  // namespace ct
