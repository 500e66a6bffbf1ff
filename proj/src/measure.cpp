#include "corrtensor/measure.hpp"

#include <chrono>
#include <cmath>

namespace ct {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ContractViolation(what);
}

MeasureReport report_from_norm(Real norm, int n_qubits, bool normalize,
                               Real elapsed_ms) {
  MeasureReport r;
  r.norm = norm;
  r.e_t = norm - 1.0;
  r.e_t_log = std::log2(norm);
  r.n_qubits = n_qubits;
  r.elapsed_ms = elapsed_ms;
  if (normalize) r.normalized = r.e_t / r_n(n_qubits);
  return r;
}

using Clock = std::chrono::steady_clock;

Real ms_since(Clock::time_point start) {
  return std::chrono::duration<Real, std::milli>(Clock::now() - start).count();
}

}  // namespace

MeasureReport e_t(const PureState& state, const MeasureOptions& options) {
  const auto start = Clock::now();
  Real norm;
  if (options.symmetric) {
    norm = symmetric_correlation_tensor(state, options.symmetry_tolerance)
               .norm();
  } else {
    norm = tensor_norm(correlation_tensor(state, options.order_cap));
  }
  return report_from_norm(norm, state.num_qubits, options.normalize,
                          ms_since(start));
}

MeasureReport e_t(const DensityMatrix& state, const MeasureOptions& options) {
  const auto start = Clock::now();
  const Real norm = tensor_norm(correlation_tensor(state, options.order_cap));
  return report_from_norm(norm, state.num_qubits(), options.normalize,
                          ms_since(start));
}

Real r_n(int n) {
  require(n >= 2, "r_n: need at least two qubits");
  Real sum = 1.0 + 0.25 * (1.0 + ((n % 2 == 0) ? 1.0 : -1.0)) *
                       (1.0 + ((n % 2 == 0) ? 1.0 : -1.0));
  for (int k = 1; 2 * k <= n; ++k) sum += binomial(n, 2 * k);
  return std::sqrt(sum) - 1.0;
}

Real ghz_closed_form(Real p, int n) {
  require(p >= 0.0 && p <= 1.0, "ghz_closed_form: p must lie in [0,1]");
  require(n >= 2, "ghz_closed_form: need at least two qubits");
  const Real off = 4.0 * p * (1.0 - p);
  const Real diag = p + ((n % 2 == 0) ? 1.0 : -1.0) * (1.0 - p);
  Real even_sum = 0.0;
  for (int k = 1; 2 * k <= n; ++k) even_sum += binomial(n, 2 * k);
  return std::sqrt(off + diag * diag + off * even_sum) - 1.0;
}

Real w_closed_form(int n) {
  require(n >= 3, "w_closed_form: need at least three qubits");
  return std::sqrt(1.0 + 4.0 * (n - 1.0) / n) - 1.0;
}

Real wghz_closed_form(Real s) {
  require(s >= 0.0 && s <= 1.0, "wghz_closed_form: s must lie in [0,1]");
  const Real u = 1.0 - s;
  return std::sqrt(4.0 * s * s + 6.0 * s * u + (11.0 / 3.0) * u * u) - 1.0;
}

Real two_qubit_closed_form(Complex a1, Complex a2, Complex a3, Complex a4) {
  const Real norm2 =
      std::norm(a1) + std::norm(a2) + std::norm(a3) + std::norm(a4);
  require(std::abs(norm2 - 1.0) <= 1e-10,
          "two_qubit_closed_form: amplitudes must be normalized");
  const Real d = std::abs(a2 * a3) - std::abs(a1 * a4);
  return std::sqrt(1.0 + 8.0 * d * d) - 1.0;
}

Real concurrence_relation(Real p) {
  require(p >= 0.0 && p <= 1.0, "concurrence_relation: p must lie in [0,1]");
  const Real c = 2.0 * std::sqrt(p * (1.0 - p));
  return std::sqrt(1.0 + 2.0 * c * c) - 1.0;
}

Real heisenberg_norm_formula(int n, int s) {
  require(n >= 2 && n % 2 == 0, "heisenberg_norm_formula: N must be even");
  require(s >= 0 && s <= n, "heisenberg_norm_formula: s must lie in [0,N]");
  const Real c_ns = binomial(n, s);
  Real sum = 0.0;
  for (int x = 0; x <= n; x += 2) {
    for (int y = 0; x + y <= n; y += 2) {
      const int f = x + y;
      if (f < 2 || f > 2 * s) continue;
      const Real placements = binomial(n - f, s - f / 2);
      if (placements == 0.0) continue;
      const Real bracket = 2.0 * binomial(x, x / 2) * binomial(y, y / 2) -
                           binomial(f, f / 2);
      sum += bracket * bracket * placements * placements * binomial(n, x) *
             binomial(n - x, y);
    }
  }
  return 1.0 + sum / (c_ns * c_ns);
}

namespace {

// Coefficient of u^((x+y)/2) in (1+u)^x (1-u)^y, exact in 128-bit integers
// (magnitudes stay below C(100,50) for x + y <= 100).
__int128 flip_coefficient(int x, int y) {
  const int h = (x + y) / 2;
  __int128 total = 0;
  for (int j = std::max(0, h - y); j <= std::min(x, h); ++j) {
    __int128 term = 1;
    {
      __int128 v = 1;
      for (int i = 1; i <= j; ++i) v = v * (x - j + i) / i;
      term = v;
    }
    {
      const int k = h - j;
      __int128 v = 1;
      for (int i = 1; i <= k; ++i) v = v * (y - k + i) / i;
      term *= v;
    }
    total += ((h - j) % 2 == 0) ? term : -term;
  }
  return total;
}

}  // namespace

Real dicke_norm_squared(int n, int s) {
  require(n >= 1, "dicke_norm_squared: need at least one qubit");
  require(s >= 0 && s <= n, "dicke_norm_squared: s must lie in [0,N]");
  const Real log_cns = log_binomial(n, s);
  std::vector<Real> terms;
  for (int x = 0; x <= n; ++x) {
    for (int y = 0; x + y <= n; ++y) {
      const int f = x + y;
      if (f % 2 != 0) continue;  // odd flip counts cannot preserve weight
      const int rest = s - f / 2;
      if (rest < 0 || rest > n - f) continue;
      const __int128 coeff = flip_coefficient(x, y);
      if (coeff == 0) continue;
      // |t|^2 * multiplicity, assembled in logs to keep N ~ 100 in range
      const Real log_t2 = 2.0 * (std::log(std::abs(static_cast<Real>(coeff))) +
                                 log_binomial(n - f, rest) - log_cns);
      const Real log_mult = log_binomial(n, x) + log_binomial(n - x, y);
      terms.push_back(std::exp(log_t2 + log_mult));
    }
  }
  return pairwise_sum(terms);
}

FormulaComparison heisenberg_formula_report(int n, int s,
                                            Real relative_tolerance) {
  FormulaComparison cmp;
  cmp.formula = heisenberg_norm_formula(n, s);
  cmp.reference = dicke_norm_squared(n, s);
  cmp.matches = std::abs(cmp.formula - cmp.reference) <=
                relative_tolerance * std::max(1.0, std::abs(cmp.reference));
  return cmp;
}

}  // namespace ct
