#pragma once

#include <vector>

#include "elimgame/engine.hpp"
#include "elimgame/strategy.hpp"

namespace elimgame {

/// Expected win probability / gain of a unilateral deviator playing pure x
/// against N-1 opponents on a common strategy, tabulated over a grid.
struct ResponseCurve {
  std::vector<double> x_values;
  std::vector<double> win_prob;
  std::vector<double> gain;            // gain[i] = N * win_prob[i] - 1
  std::vector<double> gain_std_error;  // filled by Monte Carlo sweeps only
};

struct EquilibriumReport {
  int n_players = 0;
  int grid_size = 0;
  double support_edge = 0.0;
  double total_mass = 0.0;
  double max_indifference_violation = 0.0;  // sup |gain| on the support grid
  double max_out_of_support_gain = 0.0;     // sup gain above the support edge
  double nash_value = 0.0;                  // mean gain on the support grid

  bool passes(double indifference_tol = 1e-5) const {
    return max_indifference_violation <= indifference_tol &&
           max_out_of_support_gain < 0.0;
  }
};

/// U(x) per the two-integral definition; quadrature for analytic strategies,
/// exact sums for atoms and grid densities.
double u_functional(const MixedStrategy& f, double x);

/// V = U(0), the first moment of f.
double v_functional(const MixedStrategy& f);

/// P(x; f) = (1-x) U(x)^(N-1) + x V^(N-1) / N.
double expected_win_prob(const GameConfig& cfg, const MixedStrategy& f,
                         double x);

/// G(x; f) = N P(x; f) - 1.
double expected_gain(const GameConfig& cfg, const MixedStrategy& f, double x);

/// Evaluates U once per grid point (incrementally, O(grid) integrations) and
/// returns the curve over a uniform grid of [0, 1].
ResponseCurve response_curve(const GameConfig& cfg, const MixedStrategy& f,
                             int grid_size);

struct ScanResult {
  ResponseCurve curve;
  double argmax_x = 0.0;  // ties resolved toward smaller x
  double max_gain = 0.0;
};

ScanResult best_response_scan(const GameConfig& cfg, const MixedStrategy& f,
                              int grid_size);

/// Checks the two Nash conditions on grids of `grid_size` points each:
/// indifference on [0, support_edge - 1e-9] and strict gain deficit on
/// (support_edge, 1].
EquilibriumReport verify_equilibrium(const GameConfig& cfg,
                                     const MixedStrategy& f,
                                     double support_edge, int grid_size);

}  // namespace elimgame
