#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "elimgame/rng.hpp"

namespace elimgame {

struct GameConfig {
  int n_players;
  std::uint64_t seed = 0;
};

/// One pure choice per player, each in [0,1].
struct StrategyProfile {
  std::vector<double> choices;
};

struct RoundOutcome {
  std::vector<std::uint8_t> eliminated;  // 1 if the player was knocked out
  int winner;
  std::vector<double> payoffs;  // winner gets N-1, everyone else -1
};

/// Raised when the closed-form win probability is evaluated at a profile
/// where player 1 ties an opponent exactly. The formula is only valid off
/// ties; tie-aware evaluation lives in the discrete solver
/// (discrete_win_prob) and in win_probability_oracle.
class DegenerateTieError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Plays a single stochastic round: each player j is eliminated with
/// probability x_j (one uniform per player), the surviving player with the
/// largest choice wins, ties are broken uniformly, and if everyone is
/// eliminated the winner is uniform over all players.
RoundOutcome play_round(const GameConfig& cfg, const StrategyProfile& profile,
                        SplitMix64& rng);

/// Win probability of player 1 via the factorized O(N) product form
///   (1-x1) * prod_j [x_j + (1-x_j) theta(x1-x_j)] + x1/N * prod_j x_j,
/// with theta(0) = 0. Requires x1 distinct from every opponent choice;
/// throws DegenerateTieError otherwise.
double win_probability_exact(const GameConfig& cfg,
                             const StrategyProfile& profile);

/// The same quantity as the literal sum over subgroups of non-eliminated
/// opponents (2^(N-1) subsets). Desk-scale reference for the factorized
/// form; same nondegeneracy precondition.
double win_probability_subset_sum(const GameConfig& cfg,
                                  const StrategyProfile& profile);

/// Brute-force oracle: enumerates all 2^N elimination outcomes with literal
/// tie handling, so it is well-defined on degenerate profiles too.
/// Requires n_players <= 20 (cost 2^N); throws std::length_error above.
double win_probability_oracle(const GameConfig& cfg,
                              const StrategyProfile& profile);

/// Expected payoff N*P - 1 of `player` (0-based), by permuting that player
/// to the front of the factorized form.
double payoff_exact(const GameConfig& cfg, const StrategyProfile& profile,
                    int player);

/// Two-player closed form: -1 + 2 x2 - x1 x2 for x1 < x2,
/// 1 - 2 x1 + x1 x2 for x1 > x2. Throws DegenerateTieError at x1 == x2.
double payoff_n2_closed_form(double x1, double x2);

}  // namespace elimgame
