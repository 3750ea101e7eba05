#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "elimgame/equilibrium.hpp"

namespace elimgame {

/// A strategy as a distribution on [0,1]. Three representations:
///   - analytic Nash density f* for a given player count,
///   - a pure atom at X,
///   - a piecewise-linear density on a node grid (trapezoid-integrated).
/// Values are immutable once built; all queries are const.
class MixedStrategy {
 public:
  static MixedStrategy analytic_nash(const NashEquilibrium& eq);
  /// f = scale * f*. Only a strategy when scale == 1; used to push
  /// deliberately broken densities through the verification path.
  static MixedStrategy perturbed_analytic(const NashEquilibrium& eq,
                                          double scale);
  static MixedStrategy pure_atom(double x);
  /// Nodes must be strictly increasing within [0,1], values nonnegative,
  /// and the trapezoid mass must equal 1 within 1e-9.
  static MixedStrategy grid_density(std::vector<double> nodes,
                                    std::vector<double> values);

  double total_mass() const;
  /// Upper edge of the support.
  double support_upper() const;

  /// First moment integral of s f(s); the elimination fraction V.
  double v_functional() const;
  /// U(x) = integral_0^x (1-s) f(s) ds + V.
  double u_functional(double x) const;
  /// integral_lo^hi (1-s) f(s) ds; building block for incremental curves.
  double partial_u(double lo, double hi) const;

  /// Inverse-transform draw from one uniform in [0,1).
  double sample_from_uniform(double u) const;

 private:
  struct Analytic {
    NashEquilibrium eq;
    double scale;
    double v;     // scale * first moment, by quadrature
    double mass;  // scale * total mass, by quadrature
    std::shared_ptr<const EquilibriumSampler> sampler;
  };
  struct Atom {
    double x;
  };
  struct Grid {
    std::vector<double> nodes;
    std::vector<double> values;
    std::vector<double> cum_mass;  // prefix trapezoid of f
    std::vector<double> cum_u;     // prefix trapezoid of (1-s) f
    double v;                      // trapezoid of s f
  };

  explicit MixedStrategy(std::variant<Analytic, Atom, Grid> rep)
      : rep_(std::move(rep)) {}

  std::variant<Analytic, Atom, Grid> rep_;
};

}  // namespace elimgame
