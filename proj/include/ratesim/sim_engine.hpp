#pragma once

#include <array>
#include <vector>

#include "ratesim/matchmaking.hpp"
#include "ratesim/player.hpp"
#include "ratesim/rng.hpp"
#include "ratesim/sim_config.hpp"

namespace ratesim {

// Everything needed to audit one match after the fact: who played which lane,
// the lane performance scores, the sampled outcome and the applied deltas.
// Arrays are lane-aligned with team_a/team_b.
struct MatchRecord {
  long long index = 0;
  std::array<int, kTeamSize> team_a{};
  std::array<int, kTeamSize> team_b{};
  std::array<double, kTeamSize> ps_a{};
  std::array<double, kTeamSize> ps_b{};
  double ps_mean_a = 0.0;
  double ps_mean_b = 0.0;
  double expectancy_a = 0.0;
  bool team_a_won = false;
  std::array<double, kTeamSize> ladder_delta_a{};
  std::array<double, kTeamSize> ladder_delta_b{};
  std::array<double, kTeamSize> elo_delta_a{};
  std::array<double, kTeamSize> elo_delta_b{};
};

// Immutable copy of the population after `matches` matches.
struct Snapshot {
  long long matches = 0;
  std::vector<Player> players;
};

struct RunHistory {
  SimConfig config;
  std::vector<Snapshot> snapshots;
  std::vector<MatchRecord> records;
};

// Generates player_count players with strengths from the configured
// distribution and both score tables set to strength plus an independent
// integer delta, clamped at zero.
std::vector<Player> init_population(const SimConfig& config, Rng& rng);

// Plays one match: lane performance scores from true strengths, team win
// probability from the two performance means, winner sampled from it, then
// per-player updates per the configured scheme. Every update uses the
// player's own pre-match values; counters are bumped for all ten players.
MatchRecord play_match(std::vector<Player>& pool, const MatchSetup& setup,
                       const SimConfig& config, Rng& rng, long long match_index);

// Full run: init, then total_matches iterations of find_match + play_match,
// snapshotting every checkpoint_interval matches and at the end. All
// randomness flows from one generator seeded with config.seed.
RunHistory run_simulation(const SimConfig& config);

}  // namespace ratesim
