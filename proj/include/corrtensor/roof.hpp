#pragma once

#include <cstdint>
#include <vector>

#include "corrtensor/measure.hpp"
#include "corrtensor/state.hpp"

namespace ct {

/// Weighted pure-state ensemble reproducing a target density matrix.
struct Decomposition {
  std::vector<Real> weights;
  std::vector<PureState> states;

  int size() const { return static_cast<int>(weights.size()); }
};

/// Best ensemble found by the minimizer. `value` is an UPPER BOUND on the
/// true minimum average measure over all decompositions; it never exceeds
/// the spectral-ensemble average (the search starts there).
struct RoofEstimate {
  Real value = 0.0;
  Decomposition decomposition;
  int restarts_used = 0;
  bool converged = false;
};

struct RoofConfig {
  int ensemble_size = 0;   ///< 0 means 2 * rank(rho)
  int restarts = 32;
  std::uint64_t seed = 0;
  int max_sweeps = 200;    ///< coordinate-descent sweeps per restart
  Real initial_step = 0.5;
  Real min_step = 1e-5;
  int order_cap = kDefaultOrderCap;
};

/// Average measure of an ensemble: sum_i p_i * e_t(psi_i).
Real average_e_t(const Decomposition& d, int order_cap = kDefaultOrderCap);

/// Mixture reconstructed from an ensemble (labels 1..N).
DensityMatrix mix(const Decomposition& d);

/// Minimizes sum_i p_i e_t(psi_i) over size-m decompositions of rho.
/// Ensembles are parametrized by m x rank isometries mixing the sqrt-scaled
/// spectral ensemble — every size-m decomposition of rho arises this way —
/// and searched by seeded multi-restart coordinate descent.
/// Total dimension is capped at 2^4.
RoofEstimate roof_estimate(const DensityMatrix& rho,
                           const RoofConfig& config = {});

/// lhs = sum_i w_i roof(rho_i), rhs = roof(sum_i w_i rho_i). Mixing never
/// increases the roof, so rhs <= lhs up to optimizer slack.
std::pair<Real, Real> convexity_check(const std::vector<DensityMatrix>& rhos,
                                      const std::vector<Real>& weights,
                                      const RoofConfig& config = {});

}  // namespace ct
