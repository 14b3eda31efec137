#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ratesim/metrics.hpp"
#include "ratesim/sim_engine.hpp"

namespace ratesim {

// Locale-independent number text ('.' decimal separator always).
std::string format_fixed(double value, int precision);
// Shortest representation that parses back to the same double.
std::string format_double(double value);

// One row per player sorted by id, header
// `player_id,strength,ladder,elo,games_played,wins`; ladder and elo rounded
// half-up to integers.
std::string render_snapshot_csv(const std::vector<Player>& players);

// Plot-ready companion: players sorted by strength, header
// `rank,strength,ladder,elo`.
std::string render_sorted_csv(const std::vector<Player>& players);

// `checkpoint,matches,spearman_ladder,pearson_ladder,rmse_ladder,
// spearman_elo,pearson_elo,rmse_elo` rows (elo fields empty when the scheme
// does not maintain the hidden table), then a trailing
// `motion,<v>,<m>,<p>,<Ep>` record at three decimals when samples exist.
std::string render_metrics_csv(std::span<const ConvergenceReport> reports,
                               const std::optional<MotionReport>& motion);

// Velocity histogram with 0.1-wide bins over [0, 3) plus an overflow bin
// (empty bin_hi field). Header `bin_lo,bin_hi,count`.
std::string render_velocity_histogram_csv(std::span<const ExperienceSample> samples);

// Strict parse of a snapshot CSV (exact header, rectangular rows, full-token
// numbers). Throws IoError on any deviation.
struct SnapshotRow {
  int player_id = 0;
  double strength = 0.0;
  long long ladder = 0;
  long long elo = 0;
  long long games_played = 0;
  long long wins = 0;
};
std::vector<SnapshotRow> parse_snapshot_csv(std::string_view text);

// All artifacts of one run as (relative filename, content) pairs, the
// manifest last. Pure function of the history, which is what makes byte-exact
// replay possible.
struct RenderedRun {
  std::vector<std::pair<std::string, std::string>> files;
};
RenderedRun render_run(const RunHistory& history);

void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace ratesim
