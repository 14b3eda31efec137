#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "ratesim/errors.hpp"
#include "ratesim/matchmaking.hpp"
#include "ratesim/sim_engine.hpp"

using namespace ratesim;

namespace {

std::vector<Player> uniform_pool(int count, double score) {
  std::vector<Player> pool;
  for (int i = 0; i < count; ++i)
    pool.push_back({i, 1000.0, Rating(score), Rating(score), 0, 0});
  return pool;
}

std::set<int> match_members(const MatchSetup& setup) {
  std::set<int> ids;
  for (const int id : setup.team_a) ids.insert(id);
  for (const int id : setup.team_b) ids.insert(id);
  return ids;
}

}  // namespace

TEST_CASE("relax threshold schedule") {
  MatchPolicy policy;  // init 0, step 5, after 1, max 400
  CHECK(relax_threshold(policy, 0) == 0.0);
  CHECK(relax_threshold(policy, 3) == 15.0);
  CHECK(relax_threshold(policy, 1000) == 400.0);

  MatchPolicy slow;
  slow.initial_threshold = 10.0;
  slow.relax_step = 7.0;
  slow.relax_after = 2;
  slow.max_threshold = 100.0;
  CHECK(relax_threshold(slow, 0) == 10.0);
  CHECK(relax_threshold(slow, 1) == 10.0);
  CHECK(relax_threshold(slow, 3) == 17.0);
  CHECK(relax_threshold(slow, 1000000) == 100.0);

  double previous = 0.0;
  for (long long scans = 0; scans < 500; ++scans) {
    const double t = relax_threshold(policy, scans);
    CHECK(t >= previous);
    previous = t;
  }
  CHECK_THROWS_AS(relax_threshold(policy, -1), std::domain_error);
}

TEST_CASE("find_match uses every player of a ten-player uniform pool at threshold zero") {
  const std::vector<Player> pool = uniform_pool(10, 1500.0);
  Rng rng(1);
  const MatchSetup setup = find_match(pool, MatchPolicy{}, MatchingScore::hidden_elo, rng);
  CHECK(setup.accepted_threshold == 0.0);
  CHECK(match_members(setup).size() == 10);
}

TEST_CASE("find_match rejects pools below ten players") {
  const std::vector<Player> pool = uniform_pool(9, 1500.0);
  Rng rng(1);
  CHECK_THROWS_AS(find_match(pool, MatchPolicy{}, MatchingScore::hidden_elo, rng),
                  MatchmakingError);
}

TEST_CASE("a far outlier is never placed into a match") {
  std::vector<Player> pool = uniform_pool(12, 1000.0);
  const int outlier = 11;
  pool[outlier].elo = Rating(2000.0);  // 1000 points away; max threshold is 400
  Rng rng(77);
  for (int i = 0; i < 100; ++i) {
    const MatchSetup setup = find_match(pool, MatchPolicy{}, MatchingScore::hidden_elo, rng);
    CHECK(match_members(setup).count(outlier) == 0);
  }
}

TEST_CASE("find_match fails once no acceptable match exists") {
  // Two clusters 10000 points apart: cores never pair across clusters and one
  // cluster alone cannot field ten players.
  std::vector<Player> pool;
  for (int i = 0; i < 5; ++i)
    pool.push_back({i, 1000.0, Rating(1000.0), Rating(1000.0), 0, 0});
  for (int i = 5; i < 10; ++i)
    pool.push_back({i, 1000.0, Rating(11000.0), Rating(11000.0), 0, 0});
  Rng rng(3);
  CHECK_THROWS_AS(find_match(pool, MatchPolicy{}, MatchingScore::hidden_elo, rng),
                  MatchmakingError);
}

TEST_CASE("produced matches satisfy distinctness and the spread bound") {
  SimConfig config;
  config.player_count = 300;
  config.seed = 404;
  Rng init_rng(config.seed);
  const std::vector<Player> pool = init_population(config, init_rng);

  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const MatchSetup setup = find_match(pool, config.match_policy,
                                        MatchingScore::hidden_elo, rng);
    const std::set<int> ids = match_members(setup);
    REQUIRE(ids.size() == 10);

    double lo = 1e300;
    double hi = -1e300;
    for (const int id : ids) {
      lo = std::min(lo, pool[static_cast<std::size_t>(id)].elo.value());
      hi = std::max(hi, pool[static_cast<std::size_t>(id)].elo.value());
    }
    const double core_gap =
        std::abs(pool[static_cast<std::size_t>(setup.core_a)].elo.value() -
                 pool[static_cast<std::size_t>(setup.core_b)].elo.value());
    CHECK(hi - lo <= 2.0 * setup.accepted_threshold + core_gap + 1e-9);
  }
}

TEST_CASE("find_match matches on the requested table") {
  std::vector<Player> pool;
  // ladder scores tightly packed, elo scores in two distant clusters
  for (int i = 0; i < 20; ++i) {
    const double elo = i < 10 ? 500.0 : 9000.0;
    pool.push_back({i, 1000.0, Rating(1500.0), Rating(elo), 0, 0});
  }
  Rng rng(15);
  for (int i = 0; i < 50; ++i) {
    const MatchSetup setup = find_match(pool, MatchPolicy{}, MatchingScore::hidden_elo, rng);
    const std::set<int> ids = match_members(setup);
    const bool low_cluster = *ids.begin() < 10;
    for (const int id : ids) CHECK((id < 10) == low_cluster);
  }
  // on the ladder table the same pool is indistinguishable, so matches mix
  bool mixed = false;
  for (int i = 0; i < 50 && !mixed; ++i) {
    const MatchSetup setup = find_match(pool, MatchPolicy{}, MatchingScore::ladder, rng);
    const std::set<int> ids = match_members(setup);
    bool has_low = false;
    bool has_high = false;
    for (const int id : ids) (id < 10 ? has_low : has_high) = true;
    mixed = has_low && has_high;
  }
  CHECK(mixed);
}

TEST_CASE("identical pool, policy and seed give identical matches") {
  SimConfig config;
  config.player_count = 100;
  config.seed = 5150;
  Rng init_rng(config.seed);
  const std::vector<Player> pool = init_population(config, init_rng);

  Rng rng_a(8);
  Rng rng_b(8);
  for (int i = 0; i < 50; ++i) {
    const MatchSetup a = find_match(pool, config.match_policy, MatchingScore::hidden_elo, rng_a);
    const MatchSetup b = find_match(pool, config.match_policy, MatchingScore::hidden_elo, rng_b);
    CHECK(a.team_a == b.team_a);
    CHECK(a.team_b == b.team_b);
    CHECK(a.core_a == b.core_a);
    CHECK(a.core_b == b.core_b);
    CHECK(a.accepted_threshold == b.accepted_threshold);
  }
}

TEST_CASE("the default policy always finds a match in a full-size population") {
  SimConfig config;  // 2000 players, defaults
  Rng init_rng(42);
  const std::vector<Player> pool = init_population(config, init_rng);
  Rng rng(42);
  for (int i = 0; i < 10000; ++i) {
    const MatchSetup setup =
        find_match(pool, config.match_policy, MatchingScore::hidden_elo, rng);
    CHECK(setup.accepted_threshold <= config.match_policy.max_threshold);
  }
}
