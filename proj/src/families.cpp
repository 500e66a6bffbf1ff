#include "corrtensor/families.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace ct {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ContractViolation(what);
}

Index basis_with_one_at(int num_qubits, int j) {
  // j counts from 0; qubit j+1 carries the excitation
  return Index{1} << (num_qubits - 1 - j);
}

Real param_or(const std::map<std::string, Real>& params, const std::string& key,
              Real fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

int int_param(const std::map<std::string, Real>& params, const std::string& key,
              Real fallback) {
  const Real v = param_or(params, key, fallback);
  const Real r = std::round(v);
  require(std::abs(v - r) < 1e-9, "family parameter must be an integer");
  return static_cast<int>(r);
}

}  // namespace

PureState ghz_state(Real p, int n) {
  require(p >= 0.0 && p <= 1.0, "ghz_state: p must lie in [0,1]");
  require(n >= 2, "ghz_state: need at least two qubits");
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(Index{1} << n);
  a[0] = std::sqrt(p);
  a[a.size() - 1] = std::sqrt(1.0 - p);
  return PureState::from_amplitudes(n, std::move(a));
}

PureState w_state(int n) {
  require(n >= 3, "w_state: need at least three qubits");
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(Index{1} << n);
  const Real amp = 1.0 / std::sqrt(static_cast<Real>(n));
  for (int j = 0; j < n; ++j) a[basis_with_one_at(n, j)] = amp;
  return PureState::from_amplitudes(n, std::move(a));
}

PureState w_tilde_state(int n) {
  require(n >= 3, "w_tilde_state: need at least three qubits");
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(Index{1} << n);
  const Real amp = 1.0 / std::sqrt(static_cast<Real>(n));
  const Index all_ones = (Index{1} << n) - 1;
  for (int j = 0; j < n; ++j) a[all_ones ^ basis_with_one_at(n, j)] = amp;
  return PureState::from_amplitudes(n, std::move(a));
}

PureState w_superposition(Real s, Real phi, int n) {
  require(s >= 0.0 && s <= 1.0, "w_superposition: s must lie in [0,1]");
  const PureState w = w_state(n);
  const PureState wt = w_tilde_state(n);
  const Complex phase = std::polar(1.0, phi);
  Eigen::VectorXcd a =
      std::sqrt(s) * w.amplitudes + std::sqrt(1.0 - s) * phase * wt.amplitudes;
  return PureState::from_amplitudes(n, std::move(a));
}

PureState ghz_w_superposition(Real s, Real phi) {
  require(s >= 0.0 && s <= 1.0, "ghz_w_superposition: s must lie in [0,1]");
  const PureState g = ghz_state(0.5, 3);
  const PureState w = w_state(3);
  const Complex phase = std::polar(1.0, phi);
  Eigen::VectorXcd a =
      std::sqrt(s) * g.amplitudes + std::sqrt(1.0 - s) * phase * w.amplitudes;
  return PureState::from_amplitudes(3, std::move(a));
}

PureState heisenberg_eigenstate(int n, int m) {
  require(n >= 2, "heisenberg_eigenstate: need at least two qubits");
  require(m >= 0 && m < n, "heisenberg_eigenstate: m must lie in [0, N-1]");
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(Index{1} << n);
  const Real k = 2.0 * std::numbers::pi * m / n;
  const Real amp = 1.0 / std::sqrt(static_cast<Real>(n));
  for (int j = 0; j < n; ++j)
    a[basis_with_one_at(n, j)] = amp * std::polar(1.0, k * j);
  return PureState::from_amplitudes(n, std::move(a));
}

PureState dicke_state(int n, int s) {
  require(n >= 1, "dicke_state: need at least one qubit");
  require(s >= 0 && s <= n, "dicke_state: s must lie in [0,N]");
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(Index{1} << n);
  const Real amp = 1.0 / std::sqrt(binomial(n, s));
  for (Index x = 0; x < a.size(); ++x) {
    if (std::popcount(static_cast<std::uint64_t>(x)) == s) a[x] = amp;
  }
  return PureState::normalized(n, std::move(a));
}

PureState bai_state() {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(16);
  const Real amp = 1.0 / std::sqrt(6.0);
  for (Index x : {0b0000, 0b0011, 0b0101, 0b0110, 0b1010, 0b1111}) a[x] = amp;
  return PureState::from_amplitudes(4, std::move(a));
}

PureState schmidt3_state(const std::array<Real, 5>& lambda, Real phi) {
  Real norm2 = 0.0;
  for (Real l : lambda) {
    require(l >= 0.0, "schmidt3_state: coefficients must be nonnegative");
    norm2 += l * l;
  }
  require(std::abs(norm2 - 1.0) <= 1e-10,
          "schmidt3_state: coefficients must have unit square sum");
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(8);
  a[0b000] = lambda[0];
  a[0b100] = lambda[1] * std::polar(1.0, phi);
  a[0b101] = lambda[2];
  a[0b110] = lambda[3];
  a[0b111] = lambda[4];
  return PureState::normalized(3, std::move(a));
}

const std::vector<FamilyInfo>& family_registry() {
  static const std::vector<FamilyInfo> registry = {
      {"ghz",
       "sqrt(p)|0..0> + sqrt(1-p)|1..1>",
       {"p", "qubits"},
       [](const auto& ps) {
         return ghz_state(param_or(ps, "p", 0.5), int_param(ps, "qubits", 3));
       }},
      {"w",
       "uniform single-excitation superposition",
       {"qubits"},
       [](const auto& ps) { return w_state(int_param(ps, "qubits", 3)); }},
      {"wtilde",
       "uniform single-hole superposition",
       {"qubits"},
       [](const auto& ps) { return w_tilde_state(int_param(ps, "qubits", 3)); }},
      {"wsup",
       "sqrt(s)|W> + sqrt(1-s) e^{i phi}|Wtilde>",
       {"s", "phi", "qubits"},
       [](const auto& ps) {
         return w_superposition(param_or(ps, "s", 0.5), param_or(ps, "phi", 0.0),
                                int_param(ps, "qubits", 3));
       }},
      {"ghzw",
       "sqrt(s)|GHZ> + sqrt(1-s) e^{i phi}|W> on 3 qubits",
       {"s", "phi"},
       [](const auto& ps) {
         return ghz_w_superposition(param_or(ps, "s", 0.5),
                                    param_or(ps, "phi", 0.0));
       }},
      {"heis-k",
       "single-excitation translation eigenstate, wave number 2 pi m / N",
       {"qubits", "m"},
       [](const auto& ps) {
         return heisenberg_eigenstate(int_param(ps, "qubits", 3),
                                      int_param(ps, "m", 0));
       }},
      {"dicke",
       "uniform weight-s superposition",
       {"qubits", "s"},
       [](const auto& ps) {
         return dicke_state(int_param(ps, "qubits", 4), int_param(ps, "s", 2));
       }},
      {"bai",
       "four-qubit benchmark state (6 equal terms)",
       {},
       [](const auto&) { return bai_state(); }},
      {"schmidt3",
       "three-qubit canonical form l0..l4 with phase phi",
       {"l0", "l1", "l2", "l3", "l4", "phi"},
       [](const auto& ps) {
         return schmidt3_state({param_or(ps, "l0", 1.0), param_or(ps, "l1", 0.0),
                                param_or(ps, "l2", 0.0), param_or(ps, "l3", 0.0),
                                param_or(ps, "l4", 0.0)},
                               param_or(ps, "phi", 0.0));
       }},
  };
  return registry;
}

PureState make_family_state(const std::string& name,
                            const std::map<std::string, Real>& params) {
  for (const auto& info : family_registry()) {
    if (info.name == name) return info.make(params);
  }
  throw UnknownFamilyError("unknown state family: " + name);
}

}  // namespace ct
