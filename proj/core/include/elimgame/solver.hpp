#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace elimgame {

/// Probability weights on the K midpoints of uniform bins over [0,1].
struct DiscreteStrategy {
  std::vector<double> grid;     // bin midpoints, ascending
  std::vector<double> weights;  // nonnegative, sum to 1

  static DiscreteStrategy uniform(int bins);
  /// All mass in the bin containing x.
  static DiscreteStrategy atom(int bins, double x);
};

struct SolverReport {
  int n_players = 0;
  int bins = 0;
  int iterations = 0;
  double tol = 0.0;
  double residual = 0.0;  // max gain of any pure deviation at termination
  bool converged = false;
  double l1_distance_to_analytic = 0.0;
  double support_edge_estimate = 0.0;
  /// (iteration, best residual seen so far), recorded on a geometric
  /// schedule; the running best makes the trail nonincreasing.
  std::vector<std::pair<int, double>> checkpoints;
};

/// Win probability of a player deviating to bin `i` while all N-1 opponents
/// draw from `f`. Within-bin ties are genuine ties resolved uniformly; the
/// tie sum is evaluated in closed form.
double discrete_win_prob(int n_players, const DiscreteStrategy& f,
                         std::size_t i);

/// Deviation gains N * win - 1 for every bin, in O(K) via prefix sums.
std::vector<double> deviation_gains(int n_players, const DiscreteStrategy& f);

struct BestResponse {
  DiscreteStrategy strategy;  // uniform over eps-optimal bins
  double residual = 0.0;      // max gain over bins
};

BestResponse best_response_step(int n_players, const DiscreteStrategy& f,
                                double eps);

struct SolveResult {
  DiscreteStrategy strategy;
  SolverReport report;
};

/// Damped fictitious play from uniform weights: f <- (1-n_t) f + n_t BR(f)
/// with n_t = 1/(t+2), until the deviation residual drops to tol or
/// max_iter is hit. The iteration itself never consults the analytic
/// solution; the comparison fields of the report are filled in afterwards.
SolveResult solve(int n_players, int bins, int max_iter, double tol);

}  // namespace elimgame
