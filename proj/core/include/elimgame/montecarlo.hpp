#pragma once

#include <cstdint>
#include <vector>

#include "elimgame/engine.hpp"
#include "elimgame/response.hpp"
#include "elimgame/strategy.hpp"

namespace elimgame {

struct TournamentConfig {
  GameConfig game;
  std::int64_t rounds = 0;
  std::vector<MixedStrategy> strategies;  // one per player
  int threads = 0;                        // 0 = hardware concurrency
};

/// Per-player tournament outcome. Payoffs are integer-accounted
/// (mean_gain_j = (N wins_j - rounds) / rounds), so the zero-sum identity
/// holds exactly. Standard errors come from the Bernoulli variance of the
/// win indicator scaled by N.
struct GainEstimate {
  std::int64_t rounds = 0;
  std::vector<std::int64_t> win_counts;
  std::vector<std::int64_t> elimination_counts;
  std::vector<double> mean_gain;
  std::vector<double> std_error;
};

/// Plays `rounds` independent rounds; each player draws from its strategy
/// every round. Rounds are keyed by (seed, round index), so results are
/// identical for any thread count.
GainEstimate run_tournament(const TournamentConfig& cfg);

/// Empirical response curve: for each grid point x, a tournament where
/// player 1 is pinned to pure x and everyone else plays f.
ResponseCurve deviation_sweep(const GameConfig& cfg, const MixedStrategy& f,
                              const std::vector<double>& x_grid,
                              std::int64_t rounds_per_point, int threads = 0);

}  // namespace elimgame
