#include "ratesim/matchmaking.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "ratesim/errors.hpp"

namespace ratesim {

namespace {

// Failed scans tolerated after the threshold has reached its cap. Random core
// draws can still succeed at the cap, so give them a fair number of tries
// before declaring the pool exhausted.
constexpr long long kScansAtCapLimit = 512;

}  // namespace

double relax_threshold(const MatchPolicy& policy, long long failed_scans) {
  if (failed_scans < 0) throw std::domain_error("failed_scans must be non-negative");
  if (policy.relax_after < 1) throw std::domain_error("relax_after must be at least 1");
  const double relaxed =
      policy.initial_threshold +
      policy.relax_step * static_cast<double>(failed_scans / policy.relax_after);
  return std::min(relaxed, policy.max_threshold);
}

MatchSetup find_match(const std::vector<Player>& pool, const MatchPolicy& policy,
                      MatchingScore table, Rng& rng) {
  if (table == MatchingScore::automatic)
    throw std::invalid_argument("find_match needs a resolved matching score table");
  const auto pool_size = static_cast<std::int64_t>(pool.size());
  if (pool_size < 2 * kTeamSize)
    throw MatchmakingError("pool has " + std::to_string(pool_size) +
                           " players; a 5v5 match needs 10");

  const auto score = [&](int id) {
    return table == MatchingScore::hidden_elo ? pool[static_cast<std::size_t>(id)].elo.value()
                                              : pool[static_cast<std::size_t>(id)].ladder.value();
  };

  long long failed_scans = 0;
  long long scans_at_cap = 0;
  for (;;) {
    const double threshold = relax_threshold(policy, failed_scans);

    const int core_a = static_cast<int>(rng.uniform_int(0, pool_size - 1));
    int core_b = static_cast<int>(rng.uniform_int(0, pool_size - 2));
    if (core_b >= core_a) ++core_b;

    if (std::abs(score(core_a) - score(core_b)) <= threshold) {
      const double center = 0.5 * (score(core_a) + score(core_b));
      std::vector<std::pair<double, int>> candidates;  // (distance to center, id)
      candidates.reserve(pool.size());
      for (int id = 0; id < pool_size; ++id) {
        if (id == core_a || id == core_b) continue;
        const double distance = std::abs(score(id) - center);
        if (distance <= threshold) candidates.emplace_back(distance, id);
      }
      if (candidates.size() >= 2 * kTeamSize - 2) {
        std::sort(candidates.begin(), candidates.end());
        MatchSetup setup;
        setup.team_a[0] = core_a;
        setup.team_b[0] = core_b;
        for (int slot = 0; slot < 2 * kTeamSize - 2; ++slot) {
          auto& team = slot % 2 == 0 ? setup.team_a : setup.team_b;
          team[static_cast<std::size_t>(1 + slot / 2)] = candidates[static_cast<std::size_t>(slot)].second;
        }
        rng.shuffle(setup.team_a);
        rng.shuffle(setup.team_b);
        setup.core_a = core_a;
        setup.core_b = core_b;
        setup.accepted_threshold = threshold;
        return setup;
      }
    }

    ++failed_scans;
    if (threshold >= policy.max_threshold && ++scans_at_cap > kScansAtCapLimit)
      throw MatchmakingError(
          "no acceptable 5v5 match found at the maximum threshold " +
          std::to_string(policy.max_threshold));
  }
}

}  // namespace ratesim
