#pragma once

#include <cstdint>
#include <vector>

#include "corrtensor/measure.hpp"
#include "corrtensor/state.hpp"

namespace ct {

struct GroverRow {
  int iteration = 0;
  Real e_t = 0.0;
  Real success_prob = 0.0;
};

/// Per-iteration measure and success probability of a search run.
/// Row 0 is the uniform superposition (a product state).
struct GroverTrace {
  int n_qubits = 0;
  std::uint64_t target = 0;
  std::vector<GroverRow> rows;
};

/// Runs `iterations` steps of G = (2|u><u| - I) U_target on H^n |0..0>,
/// where U_target flips the sign of the target amplitude and |u> is the
/// uniform superposition; the reflection is applied as a rank-1 update.
/// Records rows 0..iterations.
GroverTrace grover_run(int num_qubits, std::uint64_t target, int iterations,
                       int order_cap = kDefaultOrderCap);

}  // namespace ct
