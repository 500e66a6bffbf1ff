#include "corrtensor/common.hpp"

#include <cmath>
#include <vector>

namespace ct {

namespace {

Real pairwise_sum_impl(const Real* xs, std::size_t n) {
  if (n <= 8) {
    Real acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += xs[i];
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise_sum_impl(xs, half) + pairwise_sum_impl(xs + half, n - half);
}

// Exact 128-bit binomial via the multiplicative recurrence; every partial
// value is itself a binomial so the division is exact. C(128,64) fits.
__int128 binomial_i128(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 value = 1;
  for (int i = 1; i <= k; ++i) {
    value = value * (n - k + i) / i;
  }
  return value;
}

}  // namespace

Real pairwise_sum(std::span<const Real> xs) {
  if (xs.empty()) return 0.0;
  return pairwise_sum_impl(xs.data(), xs.size());
}

Real binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  if (n <= 128) return static_cast<Real>(binomial_i128(n, k));
  return std::exp(log_binomial(n, k));
}

Real log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace ct
