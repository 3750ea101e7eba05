#include "elimgame/response.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

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

double win_prob_from_u(int n, double x, double u, double v) {
  return (1.0 - x) * powi(u, n - 1) + x * powi(v, n - 1) / n;
}

// U evaluated along a sorted grid with one short integration per step.
std::vector<double> u_on_grid(const MixedStrategy& f,
                              const std::vector<double>& xs) {
  std::vector<double> us(xs.size());
  double u = f.v_functional();
  double prev = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    u += f.partial_u(prev, xs[i]);
    us[i] = u;
    prev = xs[i];
  }
  return us;
}

std::vector<double> uniform_grid(double lo, double hi, int count) {
  std::vector<double> xs(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    xs[static_cast<std::size_t>(i)] =
        count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
  }
  return xs;
}

}  // namespace

double u_functional(const MixedStrategy& f, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("u_functional argument outside [0,1]");
  }
  return f.u_functional(x);
}

double v_functional(const MixedStrategy& f) { return f.v_functional(); }

double expected_win_prob(const GameConfig& cfg, const MixedStrategy& f,
                         double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("deviation outside [0,1]");
  }
  return win_prob_from_u(cfg.n_players, x, f.u_functional(x),
                         f.v_functional());
}

double expected_gain(const GameConfig& cfg, const MixedStrategy& f, double x) {
  return cfg.n_players * expected_win_prob(cfg, f, x) - 1.0;
}

ResponseCurve response_curve(const GameConfig& cfg, const MixedStrategy& f,
                             int grid_size) {
  if (grid_size < 2) {
    throw std::invalid_argument("grid_size must be >= 2");
  }
  ResponseCurve curve;
  curve.x_values = uniform_grid(0.0, 1.0, grid_size);
  const std::vector<double> us = u_on_grid(f, curve.x_values);
  const double v = f.v_functional();
  curve.win_prob.resize(curve.x_values.size());
  curve.gain.resize(curve.x_values.size());
  for (std::size_t i = 0; i < curve.x_values.size(); ++i) {
    curve.win_prob[i] =
        win_prob_from_u(cfg.n_players, curve.x_values[i], us[i], v);
    curve.gain[i] = cfg.n_players * curve.win_prob[i] - 1.0;
  }
  return curve;
}

ScanResult best_response_scan(const GameConfig& cfg, const MixedStrategy& f,
                              int grid_size) {
  ScanResult result;
  result.curve = response_curve(cfg, f, grid_size);
  std::size_t best = 0;
  for (std::size_t i = 1; i < result.curve.gain.size(); ++i) {
    if (result.curve.gain[i] > result.curve.gain[best]) best = i;
  }
  result.argmax_x = result.curve.x_values[best];
  result.max_gain = result.curve.gain[best];
  return result;
}

EquilibriumReport verify_equilibrium(const GameConfig& cfg,
                                     const MixedStrategy& f,
                                     double support_edge, int grid_size) {
  if (grid_size < 16) {
    throw std::invalid_argument("grid_size must be >= 16");
  }
  if (!(support_edge > 0.0 && support_edge < 1.0)) {
    throw std::invalid_argument("support edge must lie in (0,1)");
  }
  constexpr double kEdgeMargin = 1e-9;

  EquilibriumReport report;
  report.n_players = cfg.n_players;
  report.grid_size = grid_size;
  report.support_edge = support_edge;
  report.total_mass = f.total_mass();

  const double v = f.v_functional();
  const std::vector<double> support =
      uniform_grid(0.0, support_edge - kEdgeMargin, grid_size);
  const std::vector<double> us = u_on_grid(f, support);
  double max_abs = 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const double gain =
        cfg.n_players * win_prob_from_u(cfg.n_players, support[i], us[i], v) -
        1.0;
    max_abs = std::max(max_abs, std::abs(gain));
    sum += gain;
  }
  report.max_indifference_violation = max_abs;
  report.nash_value = sum / static_cast<double>(support.size());

  // Points strictly above the edge, ending at 1.
  const double u_total = f.u_functional(1.0);
  double worst = -std::numeric_limits<double>::infinity();
  for (int k = 1; k <= grid_size; ++k) {
    const double x =
        support_edge + (1.0 - support_edge) * k / static_cast<double>(grid_size);
    const double u = u_total - f.partial_u(x, 1.0);
    const double gain =
        cfg.n_players * win_prob_from_u(cfg.n_players, x, u, v) - 1.0;
    worst = std::max(worst, gain);
  }
  report.max_out_of_support_gain = worst;
  return report;
}

}  // namespace elimgame
