#pragma once

#include <cmath>
#include <stdexcept>

namespace ratesim {

// Chess-scale rating points. Values are kept exact (no rounding) and are
// never negative or non-finite; updates clamp at zero.
class Rating {
 public:
  Rating() = default;
  explicit Rating(double value) : value_(value) {
    if (!std::isfinite(value)) throw std::domain_error("rating must be finite");
    if (value < 0.0) throw std::domain_error("rating must be non-negative");
  }

  double value() const { return value_; }

 private:
  double value_ = 0.0;
};

// Win probability.
class Expectancy {
 public:
  Expectancy() = default;
  explicit Expectancy(double value) : value_(value) {
    if (!std::isfinite(value) || value < 0.0 || value > 1.0)
      throw std::domain_error("expectancy must be a probability");
  }

  double value() const { return value_; }

 private:
  double value_ = 0.5;
};

// Strength-scaled performance points: lane strength times the dominance
// coefficient (own strength over the lane opponent's strength).
class PerformanceScore {
 public:
  PerformanceScore() = default;
  explicit PerformanceScore(double value) : value_(value) {
    if (!std::isfinite(value) || value < 0.0)
      throw std::domain_error("performance score must be non-negative and finite");
  }

  double value() const { return value_; }

 private:
  double value_ = 0.0;
};

// A match has exactly one winning team per side; draws do not exist.
enum class GameOutcome { loss = 0, win = 1 };

inline double outcome_score(GameOutcome outcome) {
  return outcome == GameOutcome::win ? 1.0 : 0.0;
}

// E = 1 / (1 + 10^((r_b - r_a) / 400)); the classic logistic-in-base-10 curve.
// Strictly increasing in r_a - r_b; a 400-point edge gives 10/11.
Expectancy expected_score(Rating r_a, Rating r_b);

// K = 35 - 5 * floor(elo / 400), clamped below at k_min. Without the clamp the
// step formula reaches zero at ELO 2800 and would freeze updates entirely.
double k_value(Rating elo, double k_min = 5.0);

// Classic update: R + K * (S - E), clamped at zero.
Rating ladder_update_elo(Rating ladder, double k, GameOutcome s, Expectancy e);

// PS = S * (S / S_oppo).
PerformanceScore performance_score(double strength, double opponent_strength);

// Performance-weighted update for the hidden table. Wins scale the classic
// delta by PS/PS_T, losses by PS_T/PS, so a strong performer gains more and
// loses less than a weak one at the same K and expectancy.
Rating elo_update_performance(Rating elo, double k, GameOutcome s, Expectancy e,
                              PerformanceScore ps, PerformanceScore ps_team);

// Effort-based update: +base_gain * PS/PS_T on a win, -base_gain * PS_T/PS on
// a loss. No K value involved.
Rating proposed_ladder_update(Rating ladder, PerformanceScore ps,
                              PerformanceScore ps_team, GameOutcome s,
                              double base_gain = 20.0);

// Expectancy of the first team winning, from the two team performance means.
Expectancy team_win_probability(PerformanceScore team_ps_mean,
                                PerformanceScore opponent_ps_mean);

// Half-up rounding used everywhere a score is displayed or exported.
long long display_score(double value);

inline long long display_score(Rating rating) { return display_score(rating.value()); }

}  // namespace ratesim
