#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "corrtensor/state.hpp"

namespace ct {

/// sqrt(p)|0..0> + sqrt(1-p)|1..1>, N >= 2.
PureState ghz_state(Real p, int num_qubits);

/// (1/sqrt(N)) sum_j |0..1_j..0>, N >= 3.
PureState w_state(int num_qubits);

/// Bit-flipped variant: (1/sqrt(N)) sum_j |1..0_j..1>, N >= 3.
PureState w_tilde_state(int num_qubits);

/// sqrt(s) |W> + sqrt(1-s) e^{i phi} |Wtilde>; disjoint supports keep the
/// normalization exact.
PureState w_superposition(Real s, Real phi, int num_qubits);

/// sqrt(s) |GHZ> + sqrt(1-s) e^{i phi} |W> on three qubits.
PureState ghz_w_superposition(Real s, Real phi);

/// Translation-eigenstate variant of the single-excitation superposition:
/// (1/sqrt(N)) sum_{j=0}^{N-1} e^{i k j} |0..1_j..0> with k = 2 pi m / N,
/// 0 <= m <= N-1. m = 0 reproduces w_state exactly.
PureState heisenberg_eigenstate(int num_qubits, int m);

/// Uniform superposition of all C(N,s) weight-s basis states, 0 <= s <= N,
/// enumerated in increasing basis index.
PureState dicke_state(int num_qubits, int s);

/// The four-qubit benchmark state
/// (1/sqrt(6))(|0000>+|0011>+|0101>+|0110>+|1010>+|1111>).
PureState bai_state();

/// Three-qubit state in canonical five-parameter form:
/// l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>,
/// l_i >= 0 and sum l_i^2 = 1.
PureState schmidt3_state(const std::array<Real, 5>& lambda, Real phi);

/// CLI-facing registry. Families are addressed by name with a flat
/// parameter map; missing parameters take documented defaults.
struct FamilyInfo {
  std::string name;
  std::string synopsis;
  std::vector<std::string> parameters;
  std::function<PureState(const std::map<std::string, Real>&)> make;
};

const std::vector<FamilyInfo>& family_registry();

/// Throws UnknownFamilyError for unregistered names; parameter errors
/// surface as ContractViolation from the constructors.
PureState make_family_state(const std::string& name,
                            const std::map<std::string, Real>& params);

}  // namespace ct
