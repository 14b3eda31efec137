// Acceptance suite: runs every exit criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exits non-zero if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ratesim/cli.hpp"
#include "ratesim/export.hpp"
#include "ratesim/manifest.hpp"
#include "ratesim/metrics.hpp"
#include "ratesim/rating.hpp"
#include "ratesim/rng.hpp"
#include "ratesim/sim_engine.hpp"

using namespace ratesim;
namespace fs = std::filesystem;

namespace {

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(bool ok, const std::string& message) {
  if (!ok) throw CheckFailure(message);
}

int g_failures = 0;

void criterion(int id, const std::string& name, const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  try {
    body();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[PASS] criterion %2d: %s (%.1fs)\n", id, name.c_str(), seconds);
  } catch (const std::exception& error) {
    std::printf("[FAIL] criterion %2d: %s -- %s\n", id, name.c_str(), error.what());
    ++g_failures;
  }
  std::fflush(stdout);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  check(static_cast<bool>(in), "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// ---- criteria 1-4: worked examples ----------------------------------------

void worked_examples() {
  const double e_2100_2000 = expected_score(Rating(2100), Rating(2000)).value();
  check(std::abs(e_2100_2000 - 0.6401) <= 1e-3,
        "expected_score(2100, 2000) = " + std::to_string(e_2100_2000));

  const Expectancy e_a1 = expected_score(Rating(2100), Rating(2000));
  const Expectancy e_b1 = expected_score(Rating(2000), Rating(2100));
  check(display_score(ladder_update_elo(Rating(2100), 10.0, GameOutcome::loss, e_a1)) == 2094,
        "upset loss at 2100 must display 2094");
  check(display_score(ladder_update_elo(Rating(2000), 10.0, GameOutcome::win, e_b1)) == 2006,
        "upset win at 2000 must display 2006");

  const Expectancy e_a2 = expected_score(Rating(2100), Rating(1700));
  const Expectancy e_b2 = expected_score(Rating(1700), Rating(2100));
  check(display_score(ladder_update_elo(Rating(2100), 10.0, GameOutcome::loss, e_a2)) == 2091,
        "upset loss at 2100 vs 1700 must display 2091");
  check(display_score(ladder_update_elo(Rating(1700), 40.0, GameOutcome::win, e_b2)) == 1736,
        "upset win at 1700 must display 1736");
}

void lane_table_reproduction() {
  const std::array<double, 5> strengths_a{1600, 1750, 1000, 1300, 1300};
  const std::array<double, 5> strengths_b{1400, 1500, 2000, 1000, 1000};
  const std::array<long long, 5> printed_a{1829, 2041, 500, 1690, 1690};
  const std::array<long long, 5> printed_b{1225, 1286, 4000, 769, 769};

  double mean_a = 0.0;
  double mean_b = 0.0;
  double oracle_mean_a = 0.0;
  double oracle_mean_b = 0.0;
  for (std::size_t lane = 0; lane < 5; ++lane) {
    const double ps_a = performance_score(strengths_a[lane], strengths_b[lane]).value();
    const double ps_b = performance_score(strengths_b[lane], strengths_a[lane]).value();
    check(std::llabs(display_score(ps_a) - printed_a[lane]) <= 1,
          "lane " + std::to_string(lane) + " side A: " + std::to_string(display_score(ps_a)));
    check(std::llabs(display_score(ps_b) - printed_b[lane]) <= 1,
          "lane " + std::to_string(lane) + " side B: " + std::to_string(display_score(ps_b)));
    mean_a += ps_a / 5.0;
    mean_b += ps_b / 5.0;
    // independent recompute, straight from the lane strengths
    oracle_mean_a += (strengths_a[lane] * strengths_a[lane] / strengths_b[lane]) / 5.0;
    oracle_mean_b += (strengths_b[lane] * strengths_b[lane] / strengths_a[lane]) / 5.0;
  }
  check(std::abs(mean_b - 1609.8) <= 0.1, "side B mean = " + std::to_string(mean_b));
  check(std::abs(oracle_mean_a - 1550.0) <= 0.1,
        "recomputed side A mean = " + std::to_string(oracle_mean_a));
  check(std::abs(mean_a - oracle_mean_a) <= 0.1,
        "side A mean disagrees with the recompute");
}

void methods_expectancy() {
  // The 0.627 figure belongs to the side with the 1617.4 performance mean.
  const double favored =
      team_win_probability(PerformanceScore(1617.4), PerformanceScore(1527.2)).value();
  const double other =
      team_win_probability(PerformanceScore(1527.2), PerformanceScore(1617.4)).value();
  check(std::abs(favored - 0.627) <= 1e-3, "favored side = " + std::to_string(favored));
  check(std::abs(other - 0.373) <= 1e-3, "other side = " + std::to_string(other));
}

void motion_identities() {
  const std::array<std::array<double, 3>, 2> rows{{{0.558, 0.442, 0.218},
                                                   {0.404, 0.596, 0.287}}};
  for (const auto& [mass, vel, energy] : rows) {
    check(mass + vel == 1.0, "mass + velocity must be exactly 1");
    const double computed = 2.0 * mass * vel * vel;
    check(std::abs(computed - energy) <= 5e-4,
          "2mv^2 = " + std::to_string(computed) + " vs " + std::to_string(energy));
  }
  // the identities hold by construction on real reports
  std::vector<ExperienceSample> samples;
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const bool won = rng.bernoulli(0.5);
    samples.push_back({i, 0, won ? rng.uniform_real(0.0, 2.0) : 0.0, won});
  }
  const MotionReport report = motion_report(samples);
  check(report.mass + report.velocity == 1.0, "report mass + velocity != 1");
  check(report.momentum == report.mass * report.velocity, "momentum != m*v");
  check(report.potential_energy ==
            2.0 * report.mass * report.velocity * report.velocity,
        "potential energy != 2mv^2");
}

// ---- criterion 5: proposed-scheme conservation -----------------------------

void proposed_conservation() {
  SimConfig config;
  config.scheme = Scheme::proposed;
  config.player_count = 500;
  config.total_matches = 1000;
  config.checkpoint_interval = 1000;
  config.seed = 11;
  const RunHistory history = run_simulation(config);
  check(history.records.size() == 1000, "expected 1000 matches");
  for (const MatchRecord& record : history.records) {
    const auto& winners =
        record.team_a_won ? record.ladder_delta_a : record.ladder_delta_b;
    double total = 0.0;
    for (const double delta : winners) total += delta;
    check(std::abs(total - 100.0) < 1e-9,
          "match " + std::to_string(record.index) +
              ": winning-team gain = " + std::to_string(total));
  }
}

// ---- criterion 6: outcome calibration --------------------------------------

void outcome_calibration() {
  SimConfig config;
  config.player_count = 2000;
  config.total_matches = 20000;
  config.checkpoint_interval = 20000;
  config.seed = 42;
  const RunHistory history = run_simulation(config);

  std::vector<std::pair<double, bool>> outcomes;
  outcomes.reserve(history.records.size());
  for (const MatchRecord& record : history.records)
    outcomes.emplace_back(record.expectancy_a, record.team_a_won);
  std::sort(outcomes.begin(), outcomes.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  const std::size_t bins = 10;
  const std::size_t per_bin = outcomes.size() / bins;
  for (std::size_t bin = 0; bin < bins; ++bin) {
    const std::size_t begin = bin * per_bin;
    const std::size_t end = bin + 1 == bins ? outcomes.size() : begin + per_bin;
    double expectancy_sum = 0.0;
    double variance_sum = 0.0;
    double wins = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      expectancy_sum += outcomes[i].first;
      variance_sum += outcomes[i].first * (1.0 - outcomes[i].first);
      if (outcomes[i].second) wins += 1.0;
    }
    const auto n = static_cast<double>(end - begin);
    const double mean_expectancy = expectancy_sum / n;
    const double win_rate = wins / n;
    const double standard_error = std::sqrt(variance_sum) / n;
    check(std::abs(win_rate - mean_expectancy) <= 3.0 * standard_error,
          "decile " + std::to_string(bin) + ": win rate " + std::to_string(win_rate) +
              " vs expectancy " + std::to_string(mean_expectancy) + " (3se = " +
              std::to_string(3.0 * standard_error) + ")");
  }
}

// ---- criteria 7 and 8: paired-seed convergence and experience ordering -----

struct PairedResults {
  std::vector<double> spearman_ladder_classic;
  std::vector<double> spearman_elo_classic;
  std::vector<double> spearman_ladder_proposed;
  double velocity_sum_classic = 0.0;
  double velocity_sum_proposed = 0.0;
  long long samples_classic = 0;
  long long samples_proposed = 0;
  bool ready = false;
};

PairedResults g_paired;

void run_paired_seeds() {
  if (g_paired.ready) return;
  for (std::uint64_t seed_index = 0; seed_index < 10; ++seed_index) {
    SimConfig base;
    base.player_count = 500;
    base.total_matches = 10000;
    base.checkpoint_interval = 10000;
    base.seed = 1000 + seed_index;

    SimConfig classic = base;
    classic.scheme = Scheme::classic_elo;
    const RunHistory classic_run = run_simulation(classic);
    const ConvergenceReport classic_report =
        convergence_report(classic_run.snapshots.back(), true);
    g_paired.spearman_ladder_classic.push_back(classic_report.ladder.spearman);
    g_paired.spearman_elo_classic.push_back(classic_report.elo->spearman);
    for (const ExperienceSample& sample : experience_samples(classic_run)) {
      g_paired.velocity_sum_classic += sample.v;
      ++g_paired.samples_classic;
    }

    SimConfig proposed = base;
    proposed.scheme = Scheme::proposed;
    const RunHistory proposed_run = run_simulation(proposed);
    g_paired.spearman_ladder_proposed.push_back(
        convergence_report(proposed_run.snapshots.back(), false).ladder.spearman);
    for (const ExperienceSample& sample : experience_samples(proposed_run)) {
      g_paired.velocity_sum_proposed += sample.v;
      ++g_paired.samples_proposed;
    }
  }
  g_paired.ready = true;
}

void convergence_ordering() {
  run_paired_seeds();
  int proposed_ahead = 0;
  int elo_ahead = 0;
  double mean_classic = 0.0;
  double mean_proposed = 0.0;
  for (std::size_t i = 0; i < 10; ++i) {
    if (g_paired.spearman_ladder_proposed[i] > g_paired.spearman_ladder_classic[i])
      ++proposed_ahead;
    if (g_paired.spearman_elo_classic[i] > g_paired.spearman_ladder_classic[i])
      ++elo_ahead;
    mean_classic += g_paired.spearman_ladder_classic[i] / 10.0;
    mean_proposed += g_paired.spearman_ladder_proposed[i] / 10.0;
  }
  check(proposed_ahead >= 8, "proposed ladder spearman ahead in only " +
                                 std::to_string(proposed_ahead) + "/10 seeds");
  check(elo_ahead >= 8, "hidden elo spearman ahead in only " +
                            std::to_string(elo_ahead) + "/10 seeds");
  check(mean_proposed > mean_classic,
        "mean proposed spearman " + std::to_string(mean_proposed) +
            " not above classic " + std::to_string(mean_classic));
}

void experience_ordering() {
  run_paired_seeds();
  check(g_paired.samples_classic > 0 && g_paired.samples_proposed > 0,
        "paired runs produced no samples");
  const double v_classic =
      g_paired.velocity_sum_classic / static_cast<double>(g_paired.samples_classic);
  const double v_proposed =
      g_paired.velocity_sum_proposed / static_cast<double>(g_paired.samples_proposed);
  check(v_proposed > v_classic, "pooled velocity " + std::to_string(v_proposed) +
                                    " (proposed) not above " +
                                    std::to_string(v_classic) + " (classic)");
  check(v_classic > 0.3 && v_classic < 0.8,
        "classic pooled velocity out of range: " + std::to_string(v_classic));
  check(v_proposed > 0.3 && v_proposed < 0.8,
        "proposed pooled velocity out of range: " + std::to_string(v_proposed));
}

// ---- criterion 9: determinism and replay ------------------------------------

void determinism_and_replay() {
  const fs::path root = "acceptance_tmp";
  fs::remove_all(root);
  fs::create_directories(root);

  const std::vector<std::string> base_args{"simulate",  "--matches", "10000",
                                           "--scheme",  "performance-elo",
                                           "--seed",    "42"};
  std::vector<std::string> run_a = base_args;
  run_a.insert(run_a.end(), {"--out", (root / "a").string()});
  std::vector<std::string> run_b = base_args;
  run_b.insert(run_b.end(), {"--out", (root / "b").string()});
  check(run_cli(run_a) == kExitOk, "first simulate failed");
  check(run_cli(run_b) == kExitOk, "second simulate failed");

  const Manifest manifest = parse_manifest_json(slurp(root / "a" / "manifest.json"));
  check(manifest.checkpoints.size() == 11,
        "expected 11 checkpoints, got " + std::to_string(manifest.checkpoints.size()));

  std::vector<std::string> files{"manifest.json", manifest.metrics_file,
                                 manifest.velocity_histogram_file};
  for (const CheckpointEntry& entry : manifest.checkpoints) {
    files.push_back(entry.snapshot_file);
    files.push_back(entry.sorted_file);
  }
  for (const std::string& file : files)
    check(slurp(root / "a" / file) == slurp(root / "b" / file),
          "artifact differs between identical runs: " + file);

  check(run_cli({"replay", "--manifest", (root / "a" / "manifest.json").string()}) ==
            kExitOk,
        "replay of an untampered manifest must exit 0");
  fs::remove_all(root);
}

// ---- criterion 10: randomized property suite --------------------------------

void property_suite() {
  Rng rng(20240707);
  const int cases = 1000;

  for (int i = 0; i < cases; ++i) {  // expectancy symmetry
    const Rating a(rng.uniform_real(0.0, 4000.0));
    const Rating b(rng.uniform_real(0.0, 4000.0));
    const double total = expected_score(a, b).value() + expected_score(b, a).value();
    check(std::abs(total - 1.0) < 1e-12, "expectancy pair sum drifted: " +
                                             std::to_string(total));
  }

  for (int i = 0; i < cases; ++i) {  // expectancy monotonicity
    const double b = rng.uniform_real(0.0, 3000.0);
    const double lo = rng.uniform_real(0.0, 3000.0);
    const double hi = lo + rng.uniform_real(1e-6, 500.0);
    check(expected_score(Rating(hi), Rating(b)).value() >
              expected_score(Rating(lo), Rating(b)).value(),
          "expectancy not increasing in own rating");
  }

  for (int i = 0; i < cases; ++i) {  // performance-score homogeneity
    const double s = rng.uniform_real(1.0, 3000.0);
    const double o = rng.uniform_real(1.0, 3000.0);
    const double c = rng.uniform_real(0.1, 10.0);
    const double plain = performance_score(s, o).value();
    const double scaled = performance_score(c * s, c * o).value();
    check(std::abs(scaled - c * plain) <= 1e-12 * std::abs(c * plain),
          "performance score not degree-1 homogeneous");
  }

  for (int i = 0; i < cases; ++i) {  // equal-K 1v1 zero sum
    const Rating a(rng.uniform_real(100.0, 3000.0));
    const Rating b(rng.uniform_real(100.0, 3000.0));
    const double k = rng.uniform_real(1.0, 40.0);
    const bool a_wins = rng.bernoulli(0.5);
    const double delta_a =
        ladder_update_elo(a, k, a_wins ? GameOutcome::win : GameOutcome::loss,
                          expected_score(a, b))
            .value() -
        a.value();
    const double delta_b =
        ladder_update_elo(b, k, a_wins ? GameOutcome::loss : GameOutcome::win,
                          expected_score(b, a))
            .value() -
        b.value();
    check(std::abs(delta_a + delta_b) < 1e-12,
          "1v1 deltas not zero-sum: " + std::to_string(delta_a + delta_b));
  }

  for (int i = 0; i < cases; ++i) {  // weighted update reduction at ps == ps_t
    const Rating before(rng.uniform_real(0.0, 3500.0));
    const double k = rng.uniform_real(1.0, 40.0);
    const Expectancy e(rng.uniform_real(0.01, 0.99));
    const GameOutcome s = rng.bernoulli(0.5) ? GameOutcome::win : GameOutcome::loss;
    const PerformanceScore ps(rng.uniform_real(1.0, 5000.0));
    check(elo_update_performance(before, k, s, e, ps, ps).value() ==
              ladder_update_elo(before, k, s, e).value(),
          "weighted update must reduce exactly to the classic one");
  }

  for (int i = 0; i < cases; ++i) {  // k bounds and monotonicity
    const double lo = rng.uniform_real(0.0, 5000.0);
    const double hi = lo + rng.uniform_real(0.0, 2000.0);
    const double k_lo = k_value(Rating(lo));
    const double k_hi = k_value(Rating(hi));
    check(k_lo >= 5.0 && k_lo <= 35.0, "k out of [5, 35]");
    check(k_hi <= k_lo, "k increased with elo");
  }
}

}  // namespace

int main() {
  criterion(1, "background worked examples (0.6401, 2094/2006, 2091/1736)",
            worked_examples);
  criterion(2, "five-lane dominance table reproduction", lane_table_reproduction);
  criterion(3, "team expectancy reference value 0.627", methods_expectancy);
  criterion(4, "motion-in-mind identities (0.218 / 0.287)", motion_identities);
  criterion(5, "proposed scheme conserves 100 points per winning team",
            proposed_conservation);
  criterion(6, "sampled outcomes calibrated within 3 standard errors",
            outcome_calibration);
  criterion(7, "convergence ordering over 10 paired seeds", convergence_ordering);
  criterion(8, "pooled velocity ordering and range", experience_ordering);
  criterion(9, "byte-identical determinism and replay", determinism_and_replay);
  criterion(10, "randomized property suite (1000 cases each)", property_suite);

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
