#pragma once

#include <cstdint>
#include <string>

namespace ratesim {

// Which update rules a run applies. classic_elo and performance_elo both run
// the dual-table experiment (visible ladder by game result, hidden ELO by
// result and performance); proposed maintains the ladder alone.
enum class Scheme { classic_elo, performance_elo, proposed };

enum class StrengthDistribution { truncated_normal, uniform };

// Score table the matchmaker compares. `automatic` resolves per scheme:
// ladder for the proposed scheme (its only table), hidden ELO otherwise.
enum class MatchingScore { automatic, hidden_elo, ladder };

const char* to_string(Scheme scheme);
const char* to_string(StrengthDistribution distribution);
const char* to_string(MatchingScore score);

// Throw ConfigError(Kind::parse) on unknown names.
Scheme scheme_from_string(const std::string& name);
StrengthDistribution distribution_from_string(const std::string& name);
MatchingScore matching_score_from_string(const std::string& name);

struct MatchPolicy {
  MatchingScore matching_score = MatchingScore::automatic;
  double initial_threshold = 0.0;
  double relax_step = 5.0;
  long long relax_after = 1;
  double max_threshold = 400.0;
};

struct SimConfig {
  long long player_count = 2000;
  double strength_min = 210.0;
  double strength_max = 2000.0;
  StrengthDistribution strength_distribution = StrengthDistribution::truncated_normal;
  // Initial scores are strength plus a uniform integer from
  // [-delta_range, +delta_range], drawn independently for ladder and elo.
  long long delta_range = 500;
  Scheme scheme = Scheme::classic_elo;
  long long total_matches = 10000;
  long long checkpoint_interval = 1000;
  std::uint64_t seed = 0;
  MatchPolicy match_policy;
  double base_gain = 20.0;
  double k_min = 5.0;

  // Throws ConfigError(Kind::constraint) describing the first violation.
  void validate() const;

  MatchingScore resolved_matching_score() const;

  bool maintains_hidden_elo() const { return scheme != Scheme::proposed; }
};

}  // namespace ratesim
