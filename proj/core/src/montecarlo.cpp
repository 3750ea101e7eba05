#include "elimgame/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace elimgame {

namespace {

constexpr std::int64_t kBlockRounds = 1 << 16;

struct Tally {
  std::vector<std::int64_t> wins;
  std::vector<std::int64_t> elims;

  explicit Tally(std::size_t n) : wins(n, 0), elims(n, 0) {}

  void merge(const Tally& other) {
    for (std::size_t j = 0; j < wins.size(); ++j) {
      wins[j] += other.wins[j];
      elims[j] += other.elims[j];
    }
  }
};

// One round: N strategy draws, N elimination draws, at most one tie-break
// draw, all from the round's own stream.
void play_one(const TournamentConfig& cfg, std::int64_t round, Tally& tally) {
  const std::size_t n = cfg.strategies.size();
  SplitMix64 rng = SplitMix64::stream(cfg.game.seed,
                                      static_cast<std::uint64_t>(round));
  double best = -1.0;
  std::size_t tied = 0;
  thread_local std::vector<double> xs;
  thread_local std::vector<std::uint8_t> out;
  xs.resize(n);
  out.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    xs[j] = cfg.strategies[j].sample_from_uniform(rng.uniform01());
  }
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = rng.uniform01() < xs[j] ? 1 : 0;
    if (out[j]) {
      ++tally.elims[j];
      continue;
    }
    if (xs[j] > best) {
      best = xs[j];
      tied = 1;
    } else if (xs[j] == best) {
      ++tied;
    }
  }
  std::size_t winner = 0;
  if (tied == 0) {
    winner = rng.index(n);
  } else if (tied == 1) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!out[j] && xs[j] == best) {
        winner = j;
        break;
      }
    }
  } else {
    std::size_t pick = rng.index(tied);
    for (std::size_t j = 0; j < n; ++j) {
      if (!out[j] && xs[j] == best && pick-- == 0) {
        winner = j;
        break;
      }
    }
  }
  ++tally.wins[winner];
}

Tally run_blocks(const TournamentConfig& cfg, int threads) {
  const std::size_t n = cfg.strategies.size();
  const std::int64_t blocks = (cfg.rounds + kBlockRounds - 1) / kBlockRounds;
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  threads = static_cast<int>(
      std::min<std::int64_t>(threads, std::max<std::int64_t>(blocks, 1)));

  std::atomic<std::int64_t> next{0};
  std::vector<Tally> partial(static_cast<std::size_t>(threads), Tally(n));
  auto worker = [&](int w) {
    Tally& tally = partial[static_cast<std::size_t>(w)];
    for (;;) {
      const std::int64_t block = next.fetch_add(1);
      if (block >= blocks) break;
      const std::int64_t lo = block * kBlockRounds;
      const std::int64_t hi = std::min(lo + kBlockRounds, cfg.rounds);
      for (std::int64_t r = lo; r < hi; ++r) play_one(cfg, r, tally);
    }
  };
  if (threads == 1) {
    worker(0);
    return partial[0];
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
  for (std::thread& th : pool) th.join();
  Tally total(n);
  for (const Tally& t : partial) total.merge(t);
  return total;
}

}  // namespace

GainEstimate run_tournament(const TournamentConfig& cfg) {
  const std::size_t n = cfg.strategies.size();
  if (n != static_cast<std::size_t>(cfg.game.n_players) || n < 2) {
    throw std::invalid_argument("need one strategy per player");
  }
  if (cfg.rounds < 1) throw std::invalid_argument("rounds must be >= 1");

  const Tally tally = run_blocks(cfg, cfg.threads);
  GainEstimate est;
  est.rounds = cfg.rounds;
  est.win_counts = tally.wins;
  est.elimination_counts = tally.elims;
  est.mean_gain.resize(n);
  est.std_error.resize(n);
  const double rounds = static_cast<double>(cfg.rounds);
  const double players = static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double p = static_cast<double>(tally.wins[j]) / rounds;
    est.mean_gain[j] = (players * static_cast<double>(tally.wins[j]) - rounds) / rounds;
    est.std_error[j] = players * std::sqrt(p * (1.0 - p) / rounds);
  }
  return est;
}

ResponseCurve deviation_sweep(const GameConfig& cfg, const MixedStrategy& f,
                              const std::vector<double>& x_grid,
                              std::int64_t rounds_per_point, int threads) {
  ResponseCurve curve;
  curve.x_values = x_grid;
  curve.win_prob.reserve(x_grid.size());
  curve.gain.reserve(x_grid.size());
  curve.gain_std_error.reserve(x_grid.size());
  for (std::size_t k = 0; k < x_grid.size(); ++k) {
    TournamentConfig tc;
    tc.game.n_players = cfg.n_players;
    // Decorrelate grid points while keeping the whole sweep reproducible.
    tc.game.seed = SplitMix64::mix(cfg.seed + 0x51ED2701ull * (k + 1));
    tc.rounds = rounds_per_point;
    tc.threads = threads;
    tc.strategies.reserve(static_cast<std::size_t>(cfg.n_players));
    tc.strategies.push_back(MixedStrategy::pure_atom(x_grid[k]));
    for (int j = 1; j < cfg.n_players; ++j) tc.strategies.push_back(f);
    const GainEstimate est = run_tournament(tc);
    curve.win_prob.push_back(static_cast<double>(est.win_counts[0]) /
                             static_cast<double>(est.rounds));
    curve.gain.push_back(est.mean_gain[0]);
    curve.gain_std_error.push_back(est.std_error[0]);
  }
  return curve;
}

}  // namespace elimgame
