#include "ratesim/sim_config.hpp"

#include <cmath>

#include "ratesim/errors.hpp"
#include "ratesim/player.hpp"

namespace ratesim {

const char* to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::classic_elo: return "classic-elo";
    case Scheme::performance_elo: return "performance-elo";
    case Scheme::proposed: return "proposed";
  }
  return "?";
}

const char* to_string(StrengthDistribution distribution) {
  switch (distribution) {
    case StrengthDistribution::truncated_normal: return "truncated-normal";
    case StrengthDistribution::uniform: return "uniform";
  }
  return "?";
}

const char* to_string(MatchingScore score) {
  switch (score) {
    case MatchingScore::automatic: return "auto";
    case MatchingScore::hidden_elo: return "elo";
    case MatchingScore::ladder: return "ladder";
  }
  return "?";
}

Scheme scheme_from_string(const std::string& name) {
  if (name == "classic-elo") return Scheme::classic_elo;
  if (name == "performance-elo") return Scheme::performance_elo;
  if (name == "proposed") return Scheme::proposed;
  throw ConfigError(ConfigError::Kind::parse,
                    "unknown scheme '" + name +
                        "' (expected classic-elo, performance-elo or proposed)");
}

StrengthDistribution distribution_from_string(const std::string& name) {
  if (name == "truncated-normal") return StrengthDistribution::truncated_normal;
  if (name == "uniform") return StrengthDistribution::uniform;
  throw ConfigError(ConfigError::Kind::parse,
                    "unknown strength_distribution '" + name +
                        "' (expected truncated-normal or uniform)");
}

MatchingScore matching_score_from_string(const std::string& name) {
  if (name == "auto") return MatchingScore::automatic;
  if (name == "elo") return MatchingScore::hidden_elo;
  if (name == "ladder") return MatchingScore::ladder;
  throw ConfigError(ConfigError::Kind::parse,
                    "unknown matching_score '" + name +
                        "' (expected auto, elo or ladder)");
}

namespace {

void constraint(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(ConfigError::Kind::constraint, message);
}

}  // namespace

void SimConfig::validate() const {
  constraint(player_count >= 2 * kTeamSize,
             "player_count must be at least 10 (one full 5v5 match)");
  constraint(std::isfinite(strength_min) && strength_min > 0.0,
             "strength_min must be positive (performance scores divide by strengths)");
  constraint(std::isfinite(strength_max) && strength_max > strength_min,
             "strength_max must exceed strength_min");
  constraint(delta_range >= 0, "delta_range must be non-negative");
  constraint(total_matches >= 0, "total_matches must be non-negative");
  constraint(checkpoint_interval >= 1, "checkpoint_interval must be at least 1");
  constraint(std::isfinite(base_gain) && base_gain > 0.0, "base_gain must be positive");
  constraint(std::isfinite(k_min) && k_min > 0.0, "k_min must be positive");
  constraint(std::isfinite(match_policy.initial_threshold) &&
                 match_policy.initial_threshold >= 0.0,
             "initial_threshold must be non-negative");
  constraint(std::isfinite(match_policy.relax_step) && match_policy.relax_step > 0.0,
             "relax_step must be positive");
  constraint(match_policy.relax_after >= 1, "relax_after must be at least 1");
  constraint(std::isfinite(match_policy.max_threshold) &&
                 match_policy.max_threshold >= match_policy.initial_threshold,
             "max_threshold must be at least initial_threshold");
}

MatchingScore SimConfig::resolved_matching_score() const {
  if (match_policy.matching_score != MatchingScore::automatic)
    return match_policy.matching_score;
  return scheme == Scheme::proposed ? MatchingScore::ladder
                                    : MatchingScore::hidden_elo;
}

}  // namespace ratesim
