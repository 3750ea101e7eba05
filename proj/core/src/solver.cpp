#include "elimgame/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "elimgame/equilibrium.hpp"
#include "elimgame/quadrature.hpp"

namespace elimgame {

namespace {

double powi(double base, int exp) {
  double out = 1.0;
  while (exp > 0) {
    if (exp & 1) out *= base;
    base *= base;
    exp >>= 1;
  }
  return out;
}

// Tie bracket [(S+T)^N - S^N] / (N T), the closed form of the sum over the
// number of tied opponents. Continuous at T = 0 where it equals S^(N-1).
// A short series in T/S avoids the cancellation of the direct difference
// when T is small.
double tie_bracket(int n, double s, double t) {
  if (t <= 0.0) return powi(s, n - 1);
  if (s <= 0.0) return powi(t, n - 1) / n;
  const double r = t / s;
  if (r > 1e-4) {
    return (powi(s + t, n) - powi(s, n)) / (n * t);
  }
  const double nm1 = n - 1.0;
  return powi(s, n - 1) *
         (1.0 + 0.5 * nm1 * r * (1.0 + (nm1 - 1.0) / 3.0 * r));
}

void require_strategy(const DiscreteStrategy& f) {
  if (f.grid.size() != f.weights.size() || f.grid.empty()) {
    throw std::invalid_argument("grid/weights size mismatch");
  }
}

}  // namespace

DiscreteStrategy DiscreteStrategy::uniform(int bins) {
  if (bins < 1) throw std::invalid_argument("bins must be >= 1");
  DiscreteStrategy f;
  f.grid.resize(static_cast<std::size_t>(bins));
  f.weights.assign(static_cast<std::size_t>(bins), 1.0 / bins);
  for (int k = 0; k < bins; ++k) {
    f.grid[static_cast<std::size_t>(k)] = (k + 0.5) / bins;
  }
  return f;
}

DiscreteStrategy DiscreteStrategy::atom(int bins, double x) {
  DiscreteStrategy f = uniform(bins);
  std::fill(f.weights.begin(), f.weights.end(), 0.0);
  const int k = std::clamp(static_cast<int>(x * bins), 0, bins - 1);
  f.weights[static_cast<std::size_t>(k)] = 1.0;
  return f;
}

std::vector<double> deviation_gains(int n_players, const DiscreteStrategy& f) {
  require_strategy(f);
  if (n_players < 2) throw std::invalid_argument("n_players must be >= 2");
  const std::size_t k = f.grid.size();
  std::vector<double> gains(k);
  double elim = 0.0;  // E: an opponent draw gets eliminated
  for (std::size_t i = 0; i < k; ++i) elim += f.weights[i] * f.grid[i];
  const double all_out = powi(elim, n_players - 1) / n_players;
  double below = 0.0;  // L: opponent survives strictly below the bin
  for (std::size_t i = 0; i < k; ++i) {
    const double x = f.grid[i];
    const double tie = f.weights[i] * (1.0 - x);
    const double s = elim + below;
    const double win = (1.0 - x) * tie_bracket(n_players, s, tie) + x * all_out;
    gains[i] = n_players * win - 1.0;
    below += tie;
  }
  return gains;
}

double discrete_win_prob(int n_players, const DiscreteStrategy& f,
                         std::size_t i) {
  require_strategy(f);
  if (i >= f.grid.size()) throw std::out_of_range("bin index");
  const std::vector<double> gains = deviation_gains(n_players, f);
  return (gains[i] + 1.0) / n_players;
}

BestResponse best_response_step(int n_players, const DiscreteStrategy& f,
                                double eps) {
  const std::vector<double> gains = deviation_gains(n_players, f);
  BestResponse br;
  br.residual = *std::max_element(gains.begin(), gains.end());
  br.strategy.grid = f.grid;
  br.strategy.weights.assign(f.weights.size(), 0.0);
  std::size_t count = 0;
  for (std::size_t i = 0; i < gains.size(); ++i) {
    if (gains[i] >= br.residual - eps) ++count;
  }
  const double share = 1.0 / static_cast<double>(count);
  for (std::size_t i = 0; i < gains.size(); ++i) {
    if (gains[i] >= br.residual - eps) br.strategy.weights[i] = share;
  }
  return br;
}

SolveResult solve(int n_players, int bins, int max_iter, double tol) {
  if (bins < 64) {
    throw std::invalid_argument("bins must be >= 64, got " +
                                std::to_string(bins));
  }
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

  SolveResult result;
  result.report.n_players = n_players;
  result.report.bins = bins;
  result.report.tol = tol;

  DiscreteStrategy f = DiscreteStrategy::uniform(bins);
  const double eps = tol / 10.0;
  const std::size_t k = f.grid.size();

  double best_residual = std::numeric_limits<double>::infinity();
  int next_checkpoint = 64;
  double residual = 0.0;
  int t = 0;
  for (; t < max_iter; ++t) {
    const std::vector<double> gains = deviation_gains(n_players, f);
    residual = *std::max_element(gains.begin(), gains.end());
    best_residual = std::min(best_residual, residual);
    if (t + 1 == next_checkpoint) {
      result.report.checkpoints.emplace_back(t + 1, best_residual);
      next_checkpoint *= 2;
    }
    if (residual <= tol) {
      result.report.converged = true;
      break;
    }
    std::size_t count = 0;
    for (double g : gains) {
      if (g >= residual - eps) ++count;
    }
    const double br_share = 1.0 / static_cast<double>(count);
    const double eta = 1.0 / (t + 2.0);
    const double keep = 1.0 - eta;
    for (std::size_t i = 0; i < k; ++i) {
      f.weights[i] *= keep;
      if (gains[i] >= residual - eps) f.weights[i] += eta * br_share;
    }
  }
  result.report.iterations = result.report.converged ? t + 1 : max_iter;
  result.report.residual = residual;
  result.report.checkpoints.emplace_back(result.report.iterations,
                                         best_residual);

  // Comparison against the analytic solution; report-only, the iteration
  // above never reads it.
  const NashEquilibrium eq = make_equilibrium(n_players);
  double l1 = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double lo = static_cast<double>(i) / bins;
    const double hi = static_cast<double>(i + 1) / bins;
    double mass = 0.0;
    if (lo < eq.support_edge) {
      mass = quadrature::integrate(
          [&](double s) { return density(eq, s); }, lo,
          std::min(hi, eq.support_edge), 1e-12);
    }
    l1 += std::abs(f.weights[i] - mass);
  }
  result.report.l1_distance_to_analytic = l1;

  const double threshold = 1.0 / (100.0 * bins);
  double edge = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    if (f.weights[i] > threshold) edge = f.grid[i];
  }
  result.report.support_edge_estimate = edge;
  result.strategy = std::move(f);
  return result;
}

}  // namespace elimgame
