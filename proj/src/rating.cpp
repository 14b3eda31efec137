#include "ratesim/rating.hpp"

#include <algorithm>

namespace ratesim {

Expectancy expected_score(Rating r_a, Rating r_b) {
  const double exponent = (r_b.value() - r_a.value()) / 400.0;
  return Expectancy(1.0 / (1.0 + std::pow(10.0, exponent)));
}

double k_value(Rating elo, double k_min) {
  if (!(k_min > 0.0)) throw std::domain_error("k_min must be positive");
  const double k = 35.0 - 5.0 * std::floor(elo.value() / 400.0);
  return std::max(k, k_min);
}

Rating ladder_update_elo(Rating ladder, double k, GameOutcome s, Expectancy e) {
  if (!(k > 0.0)) throw std::domain_error("k must be positive");
  if (e.value() <= 0.0 || e.value() >= 1.0)
    throw std::domain_error("expectancy must be strictly inside (0, 1)");
  const double updated = ladder.value() + k * (outcome_score(s) - e.value());
  return Rating(std::max(0.0, updated));
}

PerformanceScore performance_score(double strength, double opponent_strength) {
  if (!(strength > 0.0) || !std::isfinite(strength))
    throw std::domain_error("performance_score: strength must be positive");
  if (!(opponent_strength > 0.0) || !std::isfinite(opponent_strength))
    throw std::domain_error("performance_score: opponent strength must be positive");
  return PerformanceScore(strength * (strength / opponent_strength));
}

Rating elo_update_performance(Rating elo, double k, GameOutcome s, Expectancy e,
                              PerformanceScore ps, PerformanceScore ps_team) {
  if (!(k > 0.0)) throw std::domain_error("k must be positive");
  if (e.value() <= 0.0 || e.value() >= 1.0)
    throw std::domain_error("expectancy must be strictly inside (0, 1)");
  if (!(ps.value() > 0.0) || !(ps_team.value() > 0.0))
    throw std::domain_error("performance scores must be positive");
  const double ratio = s == GameOutcome::win ? ps.value() / ps_team.value()
                                             : ps_team.value() / ps.value();
  const double updated =
      elo.value() + ratio * (k * (outcome_score(s) - e.value()));
  return Rating(std::max(0.0, updated));
}

Rating proposed_ladder_update(Rating ladder, PerformanceScore ps,
                              PerformanceScore ps_team, GameOutcome s,
                              double base_gain) {
  if (!(base_gain > 0.0)) throw std::domain_error("base_gain must be positive");
  if (!(ps.value() > 0.0) || !(ps_team.value() > 0.0))
    throw std::domain_error("performance scores must be positive");
  const double delta = s == GameOutcome::win
                           ? base_gain * (ps.value() / ps_team.value())
                           : -(base_gain * (ps_team.value() / ps.value()));
  return Rating(std::max(0.0, ladder.value() + delta));
}

Expectancy team_win_probability(PerformanceScore team_ps_mean,
                                PerformanceScore opponent_ps_mean) {
  if (!(team_ps_mean.value() > 0.0) || !(opponent_ps_mean.value() > 0.0))
    throw std::domain_error("team performance means must be positive");
  return expected_score(Rating(team_ps_mean.value()),
                        Rating(opponent_ps_mean.value()));
}

long long display_score(double value) {
  if (!std::isfinite(value)) throw std::domain_error("cannot display a non-finite score");
  return std::llround(value);
}

}  // namespace ratesim
