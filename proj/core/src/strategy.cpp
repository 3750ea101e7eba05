#include "elimgame/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "elimgame/quadrature.hpp"

namespace elimgame {

namespace {

constexpr double kQuadTol = 1e-12;

// Linear interpolation of grid values at x inside segment [nodes[i], nodes[i+1]].
double lerp_value(const std::vector<double>& nodes,
                  const std::vector<double>& values, std::size_t i, double x) {
  const double t = (x - nodes[i]) / (nodes[i + 1] - nodes[i]);
  return values[i] + t * (values[i + 1] - values[i]);
}

// Prefix trapezoid integral of g(s) * f(s) evaluated at x, where f is the
// piecewise-linear grid density and the prefix array holds node values.
template <class G>
double prefix_at(const std::vector<double>& nodes,
                 const std::vector<double>& values,
                 const std::vector<double>& prefix, G&& g, double x) {
  if (x <= nodes.front()) return 0.0;
  if (x >= nodes.back()) return prefix.back();
  const auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - nodes.begin()) - 1;
  const double p_lo = g(nodes[i]) * values[i];
  const double p_x = g(x) * lerp_value(nodes, values, i, x);
  return prefix[i] + 0.5 * (x - nodes[i]) * (p_lo + p_x);
}

}  // namespace

MixedStrategy MixedStrategy::analytic_nash(const NashEquilibrium& eq) {
  return perturbed_analytic(eq, 1.0);
}

MixedStrategy MixedStrategy::perturbed_analytic(const NashEquilibrium& eq,
                                                double scale) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("density scale must be positive");
  }
  Analytic rep;
  rep.eq = eq;
  rep.scale = scale;
  rep.mass = scale * quadrature::integrate(
                         [&](double s) { return density(eq, s); }, 0.0,
                         eq.support_edge, kQuadTol);
  rep.v = scale * quadrature::integrate(
                      [&](double s) { return s * density(eq, s); }, 0.0,
                      eq.support_edge, kQuadTol);
  rep.sampler = std::make_shared<EquilibriumSampler>(eq);
  return MixedStrategy(std::variant<Analytic, Atom, Grid>(std::move(rep)));
}

MixedStrategy MixedStrategy::pure_atom(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("atom outside [0,1]: " + std::to_string(x));
  }
  return MixedStrategy(std::variant<Analytic, Atom, Grid>(Atom{x}));
}

MixedStrategy MixedStrategy::grid_density(std::vector<double> nodes,
                                          std::vector<double> values) {
  if (nodes.size() < 2 || nodes.size() != values.size()) {
    throw std::invalid_argument("grid density needs matching nodes/values");
  }
  if (nodes.front() < 0.0 || nodes.back() > 1.0) {
    throw std::invalid_argument("grid support must lie within [0,1]");
  }
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (!(nodes[i] < nodes[i + 1])) {
      throw std::invalid_argument("grid nodes must be strictly increasing");
    }
  }
  for (double w : values) {
    if (!(w >= 0.0)) {
      throw std::invalid_argument("grid density values must be nonnegative");
    }
  }
  Grid rep;
  rep.nodes = std::move(nodes);
  rep.values = std::move(values);
  const std::size_t n = rep.nodes.size();
  rep.cum_mass.resize(n);
  rep.cum_u.resize(n);
  rep.cum_mass[0] = 0.0;
  rep.cum_u[0] = 0.0;
  double v = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double dx = rep.nodes[i] - rep.nodes[i - 1];
    const double w0 = rep.values[i - 1];
    const double w1 = rep.values[i];
    rep.cum_mass[i] = rep.cum_mass[i - 1] + 0.5 * dx * (w0 + w1);
    rep.cum_u[i] = rep.cum_u[i - 1] +
                   0.5 * dx *
                       ((1.0 - rep.nodes[i - 1]) * w0 + (1.0 - rep.nodes[i]) * w1);
    v += 0.5 * dx * (rep.nodes[i - 1] * w0 + rep.nodes[i] * w1);
  }
  rep.v = v;
  if (std::abs(rep.cum_mass.back() - 1.0) > 1e-9) {
    throw std::invalid_argument("grid density mass " +
                                std::to_string(rep.cum_mass.back()) +
                                " is not 1 within 1e-9");
  }
  return MixedStrategy(std::variant<Analytic, Atom, Grid>(std::move(rep)));
}

double MixedStrategy::total_mass() const {
  if (const auto* a = std::get_if<Analytic>(&rep_)) return a->mass;
  if (std::holds_alternative<Atom>(rep_)) return 1.0;
  return std::get<Grid>(rep_).cum_mass.back();
}

double MixedStrategy::support_upper() const {
  if (const auto* a = std::get_if<Analytic>(&rep_)) return a->eq.support_edge;
  if (const auto* p = std::get_if<Atom>(&rep_)) return p->x;
  const Grid& g = std::get<Grid>(rep_);
  for (std::size_t i = g.values.size(); i-- > 0;) {
    if (g.values[i] > 0.0) {
      return i + 1 < g.nodes.size() ? g.nodes[i + 1] : g.nodes[i];
    }
  }
  return g.nodes.front();
}

double MixedStrategy::v_functional() const {
  if (const auto* a = std::get_if<Analytic>(&rep_)) return a->v;
  if (const auto* p = std::get_if<Atom>(&rep_)) return p->x;
  return std::get<Grid>(rep_).v;
}

double MixedStrategy::u_functional(double x) const {
  return partial_u(0.0, x) + v_functional();
}

double MixedStrategy::partial_u(double lo, double hi) const {
  if (hi <= lo) return 0.0;
  if (const auto* a = std::get_if<Analytic>(&rep_)) {
    const double upper = std::min(hi, a->eq.support_edge);
    const double lower = std::max(lo, 0.0);
    if (upper <= lower) return 0.0;
    return a->scale *
           quadrature::integrate(
               [&](double s) { return (1.0 - s) * density(a->eq, s); }, lower,
               upper, kQuadTol);
  }
  if (const auto* p = std::get_if<Atom>(&rep_)) {
    // Matches theta(0) = 0: an atom exactly at hi does not count as below.
    return (p->x >= lo && p->x < hi) ? 1.0 - p->x : 0.0;
  }
  const Grid& g = std::get<Grid>(rep_);
  const auto one_minus = [](double s) { return 1.0 - s; };
  return prefix_at(g.nodes, g.values, g.cum_u, one_minus, hi) -
         prefix_at(g.nodes, g.values, g.cum_u, one_minus, lo);
}

double MixedStrategy::sample_from_uniform(double u) const {
  u = std::min(std::max(u, 0.0), 0x1.fffffffffffffp-1);
  if (const auto* a = std::get_if<Analytic>(&rep_)) {
    return a->sampler->from_uniform(u);
  }
  if (const auto* p = std::get_if<Atom>(&rep_)) return p->x;
  const Grid& g = std::get<Grid>(rep_);
  const double target = u * g.cum_mass.back();
  const auto it =
      std::upper_bound(g.cum_mass.begin(), g.cum_mass.end(), target);
  std::size_t i = static_cast<std::size_t>(it - g.cum_mass.begin());
  if (i == 0) i = 1;
  if (i >= g.cum_mass.size()) i = g.cum_mass.size() - 1;
  const std::size_t seg = i - 1;
  const double d = target - g.cum_mass[seg];
  const double len = g.nodes[i] - g.nodes[seg];
  const double w0 = g.values[seg];
  const double slope = (g.values[i] - g.values[seg]) / len;
  // Invert the piecewise-quadratic CDF on this segment:
  // d = w0 t + slope t^2 / 2.
  const double disc = std::max(w0 * w0 + 2.0 * slope * d, 0.0);
  double t;
  if (std::abs(slope) * len < 1e-14 * std::max(w0, 1e-300)) {
    t = w0 > 0.0 ? d / w0 : 0.0;
  } else {
    const double denom = w0 + std::sqrt(disc);
    t = denom > 0.0 ? 2.0 * d / denom : 0.0;
  }
  return g.nodes[seg] + std::min(t, len);
}

}  // namespace elimgame
