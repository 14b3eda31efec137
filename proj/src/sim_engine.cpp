#include "ratesim/sim_engine.hpp"

#include <algorithm>
#include <string>

#include "ratesim/errors.hpp"
#include "ratesim/rating.hpp"

namespace ratesim {

namespace {

// Fresh random draws can rescue a failed find_match, but not a pool where no
// valid match exists; give up quickly in that case.
constexpr int kMatchRetryBudget = 3;

double mean5(const std::array<double, kTeamSize>& values) {
  double sum = 0.0;
  for (const double v : values) sum += v;
  return sum / static_cast<double>(kTeamSize);
}

void apply_team_updates(std::vector<Player>& pool,
                        const std::array<int, kTeamSize>& ids,
                        const std::array<double, kTeamSize>& ps, double ps_mean,
                        bool won, Expectancy team_expectancy,
                        const SimConfig& config,
                        std::array<double, kTeamSize>& ladder_delta,
                        std::array<double, kTeamSize>& elo_delta) {
  const GameOutcome outcome = won ? GameOutcome::win : GameOutcome::loss;
  const PerformanceScore team_ps(ps_mean);
  for (int lane = 0; lane < kTeamSize; ++lane) {
    Player& player = pool[static_cast<std::size_t>(ids[static_cast<std::size_t>(lane)])];
    const double ladder_before = player.ladder.value();
    const double elo_before = player.elo.value();
    const PerformanceScore own_ps(ps[static_cast<std::size_t>(lane)]);

    if (config.scheme == Scheme::proposed) {
      player.ladder = proposed_ladder_update(player.ladder, own_ps, team_ps,
                                             outcome, config.base_gain);
    } else {
      const double k = k_value(player.elo, config.k_min);
      player.ladder = ladder_update_elo(player.ladder, k, outcome, team_expectancy);
      player.elo = elo_update_performance(Rating(elo_before), k, outcome,
                                          team_expectancy, own_ps, team_ps);
    }

    ladder_delta[static_cast<std::size_t>(lane)] = player.ladder.value() - ladder_before;
    elo_delta[static_cast<std::size_t>(lane)] = player.elo.value() - elo_before;
    player.games_played += 1;
    if (won) player.wins += 1;
  }
}

}  // namespace

std::vector<Player> init_population(const SimConfig& config, Rng& rng) {
  config.validate();
  std::vector<Player> players;
  players.reserve(static_cast<std::size_t>(config.player_count));
  const double mean = 0.5 * (config.strength_min + config.strength_max);
  const double stddev = (config.strength_max - config.strength_min) / 6.0;
  for (long long i = 0; i < config.player_count; ++i) {
    Player player;
    player.id = static_cast<int>(i);
    player.strength =
        config.strength_distribution == StrengthDistribution::uniform
            ? rng.uniform_real(config.strength_min, config.strength_max)
            : rng.truncated_normal(mean, stddev, config.strength_min,
                                   config.strength_max);
    const auto delta_ladder =
        static_cast<double>(rng.uniform_int(-config.delta_range, config.delta_range));
    const auto delta_elo =
        static_cast<double>(rng.uniform_int(-config.delta_range, config.delta_range));
    player.ladder = Rating(std::max(0.0, player.strength + delta_ladder));
    player.elo = Rating(std::max(0.0, player.strength + delta_elo));
    players.push_back(player);
  }
  return players;
}

MatchRecord play_match(std::vector<Player>& pool, const MatchSetup& setup,
                       const SimConfig& config, Rng& rng, long long match_index) {
  MatchRecord record;
  record.index = match_index;
  record.team_a = setup.team_a;
  record.team_b = setup.team_b;

  for (int lane = 0; lane < kTeamSize; ++lane) {
    const auto l = static_cast<std::size_t>(lane);
    const Player& a = pool[static_cast<std::size_t>(setup.team_a[l])];
    const Player& b = pool[static_cast<std::size_t>(setup.team_b[l])];
    record.ps_a[l] = performance_score(a.strength, b.strength).value();
    record.ps_b[l] = performance_score(b.strength, a.strength).value();
  }
  record.ps_mean_a = mean5(record.ps_a);
  record.ps_mean_b = mean5(record.ps_b);

  const Expectancy expectancy_a = team_win_probability(
      PerformanceScore(record.ps_mean_a), PerformanceScore(record.ps_mean_b));
  record.expectancy_a = expectancy_a.value();
  record.team_a_won = rng.bernoulli(expectancy_a.value());

  const Expectancy expectancy_b(1.0 - expectancy_a.value());
  apply_team_updates(pool, setup.team_a, record.ps_a, record.ps_mean_a,
                     record.team_a_won, expectancy_a, config,
                     record.ladder_delta_a, record.elo_delta_a);
  apply_team_updates(pool, setup.team_b, record.ps_b, record.ps_mean_b,
                     !record.team_a_won, expectancy_b, config,
                     record.ladder_delta_b, record.elo_delta_b);
  return record;
}

RunHistory run_simulation(const SimConfig& config) {
  config.validate();
  Rng rng(config.seed);

  RunHistory history;
  history.config = config;
  std::vector<Player> pool = init_population(config, rng);
  history.snapshots.push_back({0, pool});
  history.records.reserve(static_cast<std::size_t>(config.total_matches));

  const MatchingScore table = config.resolved_matching_score();
  for (long long match = 1; match <= config.total_matches; ++match) {
    MatchSetup setup;
    bool matched = false;
    std::string failure;
    for (int attempt = 0; attempt < kMatchRetryBudget && !matched; ++attempt) {
      try {
        setup = find_match(pool, config.match_policy, table, rng);
        matched = true;
      } catch (const MatchmakingError& error) {
        failure = error.what();
      }
    }
    if (!matched)
      throw SimError("match " + std::to_string(match) +
                     ": matchmaking failed after " +
                     std::to_string(kMatchRetryBudget) + " attempts: " + failure);

    history.records.push_back(play_match(pool, setup, config, rng, match - 1));
    if (match % config.checkpoint_interval == 0)
      history.snapshots.push_back({match, pool});
  }
  if (config.total_matches % config.checkpoint_interval != 0)
    history.snapshots.push_back({config.total_matches, pool});
  return history;
}

}  // namespace ratesim
