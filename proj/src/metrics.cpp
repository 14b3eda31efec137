#include "ratesim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ratesim {

double velocity(double ps, double ps_team, double points_earned,
                double avg_points_earned, bool won) {
  if (!won) return 0.0;
  if (!(ps > 0.0) || !(ps_team > 0.0))
    throw std::domain_error("velocity: performance scores must be positive on a win");
  if (!(avg_points_earned > 0.0))
    throw std::domain_error("velocity: average winner gain must be positive");
  return (ps / ps_team) * (points_earned / avg_points_earned);
}

std::vector<ExperienceSample> experience_samples(const RunHistory& history) {
  std::vector<ExperienceSample> samples;
  samples.reserve(history.records.size() * 2 * kTeamSize);
  for (const MatchRecord& record : history.records) {
    const bool a_won = record.team_a_won;
    const auto& winner_deltas = a_won ? record.ladder_delta_a : record.ladder_delta_b;
    double avg_gain = 0.0;
    for (const double delta : winner_deltas) avg_gain += delta;
    avg_gain /= static_cast<double>(kTeamSize);

    const auto add_team = [&](const std::array<int, kTeamSize>& ids,
                              const std::array<double, kTeamSize>& ps,
                              double ps_mean,
                              const std::array<double, kTeamSize>& deltas,
                              bool won) {
      for (int lane = 0; lane < kTeamSize; ++lane) {
        const auto l = static_cast<std::size_t>(lane);
        ExperienceSample sample;
        sample.player_id = ids[l];
        sample.match_index = record.index;
        sample.won = won;
        sample.v = velocity(ps[l], ps_mean, deltas[l], avg_gain, won);
        samples.push_back(sample);
      }
    };
    add_team(record.team_a, record.ps_a, record.ps_mean_a, record.ladder_delta_a, a_won);
    add_team(record.team_b, record.ps_b, record.ps_mean_b, record.ladder_delta_b, !a_won);
  }
  return samples;
}

MotionReport motion_report(std::span<const ExperienceSample> samples) {
  if (samples.empty())
    throw std::domain_error("motion_report: no experience samples");
  double sum = 0.0;
  for (const ExperienceSample& sample : samples) sum += sample.v;
  MotionReport report;
  report.velocity = sum / static_cast<double>(samples.size());
  report.mass = 1.0 - report.velocity;
  report.momentum = report.mass * report.velocity;
  report.potential_energy = 2.0 * report.mass * report.velocity * report.velocity;
  return report;
}

namespace {

// 1-based ranks; tied values share the mean of the positions they span.
std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b] || (values[a] == values[b] && a < b);
  });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double shared = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

struct CenteredMoments {
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  double mean_x = 0.0;
  double mean_y = 0.0;
};

CenteredMoments centered_moments(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("correlation inputs must have equal length");
  if (x.size() < 2)
    throw std::domain_error("correlation needs at least two points");
  const auto n = static_cast<double>(x.size());
  CenteredMoments m;
  for (std::size_t i = 0; i < x.size(); ++i) {
    m.mean_x += x[i];
    m.mean_y += y[i];
  }
  m.mean_x /= n;
  m.mean_y /= n;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - m.mean_x;
    const double dy = y[i] - m.mean_y;
    m.sxx += dx * dx;
    m.syy += dy * dy;
    m.sxy += dx * dy;
  }
  return m;
}

}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
  const CenteredMoments m = centered_moments(x, y);
  if (!(m.sxx > 0.0) || !(m.syy > 0.0))
    throw std::domain_error("correlation undefined: zero variance input");
  return m.sxy / std::sqrt(m.sxx * m.syy);
}

double spearman(std::span<const double> x, std::span<const double> y) {
  const std::vector<double> rx = average_ranks(x);
  const std::vector<double> ry = average_ranks(y);
  return pearson(rx, ry);
}

double affine_fit_rmse(std::span<const double> x, std::span<const double> y) {
  const CenteredMoments m = centered_moments(x, y);
  if (!(m.sxx > 0.0))
    throw std::domain_error("affine fit undefined: zero variance input");
  const double slope = m.sxy / m.sxx;
  const double intercept = m.mean_y - slope * m.mean_x;
  double sq_sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double residual = y[i] - (intercept + slope * x[i]);
    sq_sum += residual * residual;
  }
  return std::sqrt(sq_sum / static_cast<double>(x.size()));
}

ConvergenceReport convergence_report(const Snapshot& snapshot, bool include_elo,
                                     long long checkpoint_index) {
  const std::size_t n = snapshot.players.size();
  std::vector<double> strength(n), ladder(n), elo(n);
  for (std::size_t i = 0; i < n; ++i) {
    strength[i] = snapshot.players[i].strength;
    ladder[i] = snapshot.players[i].ladder.value();
    elo[i] = snapshot.players[i].elo.value();
  }

  ConvergenceReport report;
  report.checkpoint_index = checkpoint_index;
  report.matches = snapshot.matches;
  report.ladder.spearman = spearman(strength, ladder);
  report.ladder.pearson = pearson(strength, ladder);
  report.ladder.rmse = affine_fit_rmse(strength, ladder);
  if (include_elo) {
    CorrelationStats stats;
    stats.spearman = spearman(strength, elo);
    stats.pearson = pearson(strength, elo);
    stats.rmse = affine_fit_rmse(strength, elo);
    report.elo = stats;
  }
  return report;
}

}  // namespace ratesim
