#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace ct {

using Real = double;
using Complex = std::complex<Real>;
using Index = std::int64_t;

/// Contract tolerances shared across modules.
namespace tol {
inline constexpr Real state_norm = 1e-12;
inline constexpr Real hermitian = 1e-10;
inline constexpr Real trace = 1e-10;
inline constexpr Real psd = 1e-10;
inline constexpr Real unitary = 1e-10;
inline constexpr Real kraus_completeness = 1e-10;
inline constexpr Real kraus_normality = 1e-10;
inline constexpr Real imag_residue = 1e-9;
inline constexpr Real zero_probability = 1e-12;
inline constexpr Real symmetry = 1e-10;
}  // namespace tol

/// Largest tensor order for which a dense 3^M entry array is built.
inline constexpr int kDefaultOrderCap = 12;
/// Largest qubit count for which the dense 4^N extended tensor is built.
inline constexpr int kDefaultExtendedCap = 10;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// A documented precondition was violated by the caller.
struct ContractViolation : Error {
  using Error::Error;
};
/// A quantity that must be real (up to tolerance) came out complex.
struct NumericalIntegrityError : Error {
  using Error::Error;
};
/// Requested computation exceeds a configured size cap.
struct ResourceLimitError : Error {
  using Error::Error;
};
/// State failed the permutation-symmetry check required by a fast path.
struct NotSymmetricError : Error {
  using Error::Error;
};
struct UnknownFamilyError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

/// Deterministic pairwise (cascade) summation over a fixed index order.
Real pairwise_sum(std::span<const Real> xs);

/// Exact binomial coefficient rounded to double; zero outside 0 <= k <= n.
/// Exact integer arithmetic is used internally up to n = 128 so that values
/// like C(100,50) ~ 1e29 carry full double precision.
Real binomial(int n, int k);

/// log C(n,k) via lgamma; requires 0 <= k <= n.
Real log_binomial(int n, int k);

/// Derive a per-task seed from a master seed (splitmix64 step).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace ct
