#pragma once

#include <array>
#include <vector>

#include "ratesim/player.hpp"
#include "ratesim/rng.hpp"
#include "ratesim/sim_config.hpp"

namespace ratesim {

enum class Lane { top, jungle, mid, bottom, support };

inline constexpr std::array<const char*, kTeamSize> kLaneNames = {
    "top", "jungle", "mid", "bottom", "support"};

// Ten distinct players paired lane by lane: team_a[i] faces team_b[i].
// The cores and the threshold the match was accepted at are kept for
// diagnostics and invariant checks.
struct MatchSetup {
  std::array<int, kTeamSize> team_a{};
  std::array<int, kTeamSize> team_b{};
  int core_a = 0;
  int core_b = 0;
  double accepted_threshold = 0.0;
};

// Threshold after `failed_scans` failed scans:
// min(initial + step * floor(failed_scans / relax_after), max). Monotone
// non-decreasing in the scan count.
double relax_threshold(const MatchPolicy& policy, long long failed_scans);

// Draws two random core players whose matching scores differ by at most the
// current threshold, then fills the remaining eight slots with the players
// closest to the cores' mean score (within the same threshold), alternating
// team assignment to keep the sums balanced. Each failed scan eases the
// threshold per the policy. Lanes are shuffled uniformly per team.
//
// `table` must be a resolved score table (hidden_elo or ladder).
// Throws MatchmakingError once the threshold is capped and scans keep failing.
MatchSetup find_match(const std::vector<Player>& pool, const MatchPolicy& policy,
                      MatchingScore table, Rng& rng);

}  // namespace ratesim
