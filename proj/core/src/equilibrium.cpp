#include "elimgame/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "elimgame/quadrature.hpp"

namespace elimgame {

namespace {

constexpr double kQuadTol = 1e-12;

void require_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error(std::string(what) + " outside [0,1]: " +
                            std::to_string(x));
  }
}

}  // namespace

NashEquilibrium make_equilibrium(int n_players) {
  if (n_players < 2) {
    throw std::invalid_argument("n_players must be >= 2, got " +
                                std::to_string(n_players));
  }
  const double n = static_cast<double>(n_players);
  NashEquilibrium eq;
  eq.n_players = n_players;
  eq.b = (n - 2.0) / (n - 1.0);
  eq.big_b = n - 1.0;
  eq.support_edge = n / (n + 1.0);
  eq.c_norm = std::pow(n, -2.0 / (n - 1.0));
  eq.v_star = std::pow(n, -1.0 / (n - 1.0));
  return eq;
}

double density(const NashEquilibrium& eq, double x) {
  require_unit_interval(x, "density argument");
  if (x > eq.support_edge) return 0.0;
  const double n = static_cast<double>(eq.n_players);
  return eq.c_norm /
         (std::pow(1.0 - x, 3.0 - eq.b) * std::pow(n - x, eq.b));
}

double u_star(const NashEquilibrium& eq, double x) {
  require_unit_interval(x, "u_star argument");
  if (x > eq.support_edge) return 1.0;
  const double a = eq.support_edge;
  const double big_b = eq.big_b;
  const double inv = 1.0 / (static_cast<double>(eq.n_players) - 1.0);
  return std::pow((1.0 - a) / (1.0 - x) * (1.0 + big_b - x) / (1.0 + big_b - a),
                  inv);
}

double cdf(const NashEquilibrium& eq, double x) {
  require_unit_interval(x, "cdf argument");
  if (x >= eq.support_edge) return 1.0;
  if (x == 0.0) return 0.0;
  return quadrature::integrate([&](double s) { return density(eq, s); }, 0.0,
                               x, kQuadTol);
}

double quantile(const NashEquilibrium& eq, double u) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw std::domain_error("quantile argument outside [0,1]: " +
                            std::to_string(u));
  }
  if (u == 0.0) return 0.0;
  if (u == 1.0) return eq.support_edge;
  double lo = 0.0;
  double hi = eq.support_edge;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (cdf(eq, mid) < u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double scaling_density(double xi) {
  if (xi > 0.0) {
    throw std::domain_error("scaling variable must be <= 0, got " +
                            std::to_string(xi));
  }
  const double d = 1.0 - xi;
  return 1.0 / (d * d);
}

double mean_elimination_fraction(const NashEquilibrium& eq) {
  return eq.v_star;
}

namespace {

// 5-point central first derivative.
double fd1(const std::function<double(double)>& g, double x, double h) {
  return (-g(x + 2.0 * h) + 8.0 * g(x + h) - 8.0 * g(x - h) + g(x - 2.0 * h)) /
         (12.0 * h);
}

}  // namespace

double ode_residual_of(const std::function<double(double)>& density_fn,
                       int n_players, double x, double h) {
  if (n_players < 2) {
    throw std::invalid_argument("n_players must be >= 2");
  }
  if (!(h > 0.0)) {
    throw std::invalid_argument("stencil step must be positive");
  }
  const double a =
      static_cast<double>(n_players) / (static_cast<double>(n_players) + 1.0);
  if (!(x - 4.0 * h > 0.0 && x + 4.0 * h < a)) {
    throw std::domain_error("finite-difference stencil leaves (0, a)");
  }
  if (n_players == 2) {
    // The nonlinear term has prefactor N-2 = 0; the equation degenerates to
    // the linear first-order form (1-x) f' - 3 f = 0.
    const double f = density_fn(x);
    const double fp = fd1(density_fn, x, h);
    return std::abs((1.0 - x) * fp - 3.0 * f);
  }
  const auto bracket = [&](double y) {
    const double f = density_fn(y);
    const double fp = fd1(density_fn, y, h);
    const double om = 1.0 - y;
    return om * om * f * f / (3.0 * f - om * fp);
  };
  const double lhs = (1.0 - x) * density_fn(x);
  const double rhs = (static_cast<double>(n_players) - 2.0) * fd1(bracket, x, h);
  return std::abs(lhs - rhs);
}

double ode_residual(const NashEquilibrium& eq, double x, double h) {
  return ode_residual_of([&](double s) { return density(eq, s); },
                         eq.n_players, x, h);
}

EquilibriumSampler::EquilibriumSampler(const NashEquilibrium& eq,
                                       int table_size) {
  if (table_size < 2) table_size = 2;
  const std::size_t k = static_cast<std::size_t>(table_size);
  x_.resize(k + 1);
  cum_.resize(k + 1);
  const double a = eq.support_edge;
  x_[0] = 0.0;
  cum_[0] = 0.0;
  for (std::size_t i = 1; i <= k; ++i) {
    x_[i] = a * static_cast<double>(i) / static_cast<double>(k);
    cum_[i] = cum_[i - 1] +
              quadrature::composite_simpson(
                  [&](double s) { return density(eq, s); }, x_[i - 1], x_[i], 2);
  }
}

double EquilibriumSampler::from_uniform(double u) const {
  if (!(u >= 0.0 && u < 1.0)) {
    u = std::min(std::max(u, 0.0), 0x1.fffffffffffffp-1);
  }
  const double target = u * cum_.back();
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), target);
  const std::size_t hi =
      std::min(static_cast<std::size_t>(it - cum_.begin()), cum_.size() - 1);
  const std::size_t lo = hi - 1;
  const double span = cum_[hi] - cum_[lo];
  const double t = span > 0.0 ? (target - cum_[lo]) / span : 0.0;
  return x_[lo] + t * (x_[hi] - x_[lo]);
}

}  // namespace elimgame
