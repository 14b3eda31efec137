#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ratesim/sim_engine.hpp"

namespace ratesim {

// Motion-in-mind velocity for one player in one match. Winners score their
// performance share times their reward share; losers score zero.
//   v = (PS / PS_T) * (points earned / average points earned)   on a win
//   v = 0                                                        on a loss
// `avg_points_earned` is the mean ladder gain of the five winning teammates.
double velocity(double ps, double ps_team, double points_earned,
                double avg_points_earned, bool won);

struct ExperienceSample {
  int player_id = 0;
  long long match_index = 0;
  double v = 0.0;
  bool won = false;
};

// One sample per player per match, pooled over the whole run.
std::vector<ExperienceSample> experience_samples(const RunHistory& history);

// Aggregate motion-in-mind quantities. mass = 1 - velocity, momentum =
// mass * velocity and potential_energy = 2 * mass * velocity^2 hold by
// construction.
struct MotionReport {
  double velocity = 0.0;
  double mass = 1.0;
  double momentum = 0.0;
  double potential_energy = 0.0;
};

// Mean velocity over all samples (losses contribute zero), then the derived
// quantities. Throws std::domain_error on an empty collection.
MotionReport motion_report(std::span<const ExperienceSample> samples);

struct CorrelationStats {
  double spearman = 0.0;
  double pearson = 0.0;
  double rmse = 0.0;
};

// How well a visible score tracks latent strength at one checkpoint.
struct ConvergenceReport {
  long long checkpoint_index = 0;
  long long matches = 0;
  CorrelationStats ladder;
  std::optional<CorrelationStats> elo;
};

// Rank correlation with average ranks on ties, linear correlation, and the
// residual RMSE of the least-squares affine fit of the score onto strength.
// Throws std::domain_error when a correlation is undefined (fewer than two
// players, or a zero-variance input).
double spearman(std::span<const double> x, std::span<const double> y);
double pearson(std::span<const double> x, std::span<const double> y);
double affine_fit_rmse(std::span<const double> x, std::span<const double> y);

ConvergenceReport convergence_report(const Snapshot& snapshot, bool include_elo,
                                     long long checkpoint_index = 0);

}  // namespace ratesim
