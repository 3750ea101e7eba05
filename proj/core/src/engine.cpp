#include "elimgame/engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace elimgame {

namespace {

void require_profile(const GameConfig& cfg, const StrategyProfile& profile) {
  if (cfg.n_players < 2) {
    throw std::invalid_argument("n_players must be >= 2");
  }
  if (profile.choices.size() != static_cast<std::size_t>(cfg.n_players)) {
    throw std::invalid_argument("profile length " +
                                std::to_string(profile.choices.size()) +
                                " != n_players " +
                                std::to_string(cfg.n_players));
  }
  for (double x : profile.choices) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw std::domain_error("strategy outside [0,1]: " + std::to_string(x));
    }
  }
}

// Factorized product form for the player at `front` against the rest.
double win_probability_front(const std::vector<double>& xs, std::size_t front) {
  const double x1 = xs[front];
  const std::size_t n = xs.size();
  double survive = 1.0 - x1;
  double all_out = x1 / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == front) continue;
    const double xj = xs[j];
    if (xj == x1) {
      throw DegenerateTieError(
          "win_probability_exact requires a nondegenerate profile (player "
          "choice " +
          std::to_string(x1) +
          " tied); use win_probability_oracle or the solver's "
          "discrete_win_prob for tie-aware evaluation");
    }
    survive *= xj + (x1 > xj ? 1.0 - xj : 0.0);
    all_out *= xj;
  }
  return survive + all_out;
}

}  // namespace

RoundOutcome play_round(const GameConfig& cfg, const StrategyProfile& profile,
                        SplitMix64& rng) {
  require_profile(cfg, profile);
  const std::size_t n = profile.choices.size();
  RoundOutcome out;
  out.eliminated.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eliminated[j] = rng.uniform01() < profile.choices[j] ? 1 : 0;
  }
  double best = -1.0;
  std::size_t tied = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (out.eliminated[j]) continue;
    if (profile.choices[j] > best) {
      best = profile.choices[j];
      tied = 1;
    } else if (profile.choices[j] == best) {
      ++tied;
    }
  }
  std::size_t winner = 0;
  if (tied == 0) {
    winner = rng.index(n);  // everyone eliminated
  } else {
    std::size_t pick = rng.index(tied);
    for (std::size_t j = 0; j < n; ++j) {
      if (!out.eliminated[j] && profile.choices[j] == best && pick-- == 0) {
        winner = j;
        break;
      }
    }
  }
  out.winner = static_cast<int>(winner);
  out.payoffs.assign(n, -1.0);
  out.payoffs[winner] = static_cast<double>(n) - 1.0;
  return out;
}

double win_probability_exact(const GameConfig& cfg,
                             const StrategyProfile& profile) {
  require_profile(cfg, profile);
  return win_probability_front(profile.choices, 0);
}

double win_probability_subset_sum(const GameConfig& cfg,
                                  const StrategyProfile& profile) {
  require_profile(cfg, profile);
  const std::vector<double>& xs = profile.choices;
  const std::size_t n = xs.size();
  if (n > 20) {
    throw std::length_error("subset sum limited to n_players <= 20");
  }
  const double x1 = xs[0];
  for (std::size_t j = 1; j < n; ++j) {
    if (xs[j] == x1) {
      throw DegenerateTieError("subset sum requires a nondegenerate profile");
    }
  }
  const std::size_t m = n - 1;
  double survive = 0.0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    double term = 1.0;
    for (std::size_t k = 0; k < m; ++k) {
      const double xj = xs[k + 1];
      if (mask & (std::size_t{1} << k)) {
        term *= (x1 > xj) ? (1.0 - xj) : 0.0;  // survives below player 1
      } else {
        term *= xj;  // eliminated
      }
    }
    survive += term;
  }
  double all_out = x1 / static_cast<double>(n);
  for (std::size_t j = 1; j < n; ++j) all_out *= xs[j];
  return (1.0 - x1) * survive + all_out;
}

double win_probability_oracle(const GameConfig& cfg,
                              const StrategyProfile& profile) {
  require_profile(cfg, profile);
  const std::vector<double>& xs = profile.choices;
  const std::size_t n = xs.size();
  if (n > 20) {
    throw std::length_error("oracle limited to n_players <= 20 (cost 2^N)");
  }
  double total = 0.0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    double prob = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      prob *= (mask & (std::size_t{1} << j)) ? xs[j] : 1.0 - xs[j];
    }
    if (prob == 0.0) continue;
    if (mask == (std::size_t{1} << n) - 1) {
      total += prob / static_cast<double>(n);  // all eliminated
      continue;
    }
    if (mask & 1) continue;  // player 1 out, somebody survived
    double best = -1.0;
    std::size_t tied = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      if (xs[j] > best) {
        best = xs[j];
        tied = 1;
      } else if (xs[j] == best) {
        ++tied;
      }
    }
    if (xs[0] == best) {
      total += prob / static_cast<double>(tied);
    }
  }
  return total;
}

double payoff_exact(const GameConfig& cfg, const StrategyProfile& profile,
                    int player) {
  require_profile(cfg, profile);
  if (player < 0 || player >= cfg.n_players) {
    throw std::invalid_argument("player index out of range");
  }
  const double p =
      win_probability_front(profile.choices, static_cast<std::size_t>(player));
  return static_cast<double>(cfg.n_players) * p - 1.0;
}

double payoff_n2_closed_form(double x1, double x2) {
  if (x1 == x2) {
    throw DegenerateTieError("closed form undefined at x1 == x2");
  }
  if (x1 < x2) return -1.0 + 2.0 * x2 - x1 * x2;
  return 1.0 - 2.0 * x1 + x1 * x2;
}

}  // namespace elimgame
