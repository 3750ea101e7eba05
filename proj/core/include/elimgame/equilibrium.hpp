#pragma once

#include <functional>
#include <vector>

namespace elimgame {

/// Closed-form symmetric equilibrium of the N-player elimination game.
/// All analytic constants are fixed by the player count:
///   b = (N-2)/(N-1),  B = N-1,  a = N/(N+1),
///   C = N^(-2/(N-1)),  V* = N^(-1/(N-1)).
/// Immutable after construction; safe to share across threads.
struct NashEquilibrium {
  int n_players;
  double b;             // density exponent
  double big_b;         // integration constant B
  double c_norm;        // normalization constant C
  double support_edge;  // upper edge a of supp f*
  double v_star;        // equilibrium elimination fraction V*
};

/// Builds the equilibrium constants for n_players >= 2.
/// Throws std::invalid_argument otherwise.
NashEquilibrium make_equilibrium(int n_players);

/// Equilibrium density f*(x) on [0,1]: C / [(1-x)^(3-b) (N-x)^b] on the
/// closed support [0, a], exactly 0 above a. Throws std::domain_error for
/// x outside [0,1].
double density(const NashEquilibrium& eq, double x);

/// Closed-form U*(x) = [(1-a)/(1-x) * (1+B-x)/(1+B-a)]^(1/(N-1)) on [0, a],
/// clamped to 1 above the support edge. U*(0) = V*, U*(a) = 1.
double u_star(const NashEquilibrium& eq, double x);

/// CDF of f* by adaptive quadrature; clamps to exactly 1 for x >= a.
double cdf(const NashEquilibrium& eq, double x);

/// Inverse CDF by bisection to x-tolerance 1e-12. quantile(0) = 0 and
/// quantile(1) = a exactly.
double quantile(const NashEquilibrium& eq, double u);

/// Large-N scaling profile F(xi) = 1/(1-xi)^2 for xi <= 0.
/// Throws std::domain_error for xi > 0.
double scaling_density(double xi);

/// Mean of x under f*, which equals V* for every N.
double mean_elimination_fraction(const NashEquilibrium& eq);

/// Residual of the second-order equilibrium ODE at x, evaluated with 5-point
/// central stencils of step h (derivatives of the density are themselves
/// taken by finite differences, so the full stencil spans [x-4h, x+4h]).
/// For N = 2 the nonlinear term carries a zero prefactor and the first-order
/// form [(1-x) f' - 3 f] U = 0 is checked instead.
double ode_residual(const NashEquilibrium& eq, double x, double h = 1e-4);

/// Same residual for an arbitrary positive density on (0, a); used to probe
/// non-solutions.
double ode_residual_of(const std::function<double(double)>& density_fn,
                       int n_players, double x, double h = 1e-4);

/// Inverse-CDF sampler backed by a cumulative table of `table_size` equal
/// segments of [0, a] (Simpson per segment). Draws are O(log table_size).
class EquilibriumSampler {
 public:
  explicit EquilibriumSampler(const NashEquilibrium& eq, int table_size = 1024);

  /// Maps a uniform u in [0,1) to a draw from f* by table inversion.
  double from_uniform(double u) const;

  template <class Rng>
  double operator()(Rng& rng) const {
    return from_uniform(rng.uniform01());
  }

 private:
  std::vector<double> x_;    // segment endpoints, x_[0] = 0, x_[K] = a
  std::vector<double> cum_;  // cumulative mass at x_
};

}  // namespace elimgame
