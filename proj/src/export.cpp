#include "ratesim/export.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>

#include "ratesim/errors.hpp"
#include "ratesim/manifest.hpp"
#include "ratesim/rating.hpp"

namespace ratesim {

std::string format_fixed(double value, int precision) {
  std::array<char, 64> buffer;
  const auto result =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                    std::chars_format::fixed, precision);
  return std::string(buffer.data(), result.ptr);
}

std::string format_double(double value) {
  std::array<char, 64> buffer;
  const auto result =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), result.ptr);
}

std::string render_snapshot_csv(const std::vector<Player>& players) {
  std::vector<const Player*> rows;
  rows.reserve(players.size());
  for (const Player& p : players) rows.push_back(&p);
  std::sort(rows.begin(), rows.end(),
            [](const Player* a, const Player* b) { return a->id < b->id; });

  std::string out = "player_id,strength,ladder,elo,games_played,wins\n";
  for (const Player* p : rows) {
    out += std::to_string(p->id);
    out += ',';
    out += format_double(p->strength);
    out += ',';
    out += std::to_string(display_score(p->ladder));
    out += ',';
    out += std::to_string(display_score(p->elo));
    out += ',';
    out += std::to_string(p->games_played);
    out += ',';
    out += std::to_string(p->wins);
    out += '\n';
  }
  return out;
}

std::string render_sorted_csv(const std::vector<Player>& players) {
  std::vector<const Player*> rows;
  rows.reserve(players.size());
  for (const Player& p : players) rows.push_back(&p);
  std::sort(rows.begin(), rows.end(), [](const Player* a, const Player* b) {
    return a->strength < b->strength ||
           (a->strength == b->strength && a->id < b->id);
  });

  std::string out = "rank,strength,ladder,elo\n";
  long long rank = 1;
  for (const Player* p : rows) {
    out += std::to_string(rank++);
    out += ',';
    out += format_double(p->strength);
    out += ',';
    out += std::to_string(display_score(p->ladder));
    out += ',';
    out += std::to_string(display_score(p->elo));
    out += '\n';
  }
  return out;
}

std::string render_metrics_csv(std::span<const ConvergenceReport> reports,
                               const std::optional<MotionReport>& motion) {
  std::string out =
      "checkpoint,matches,spearman_ladder,pearson_ladder,rmse_ladder,"
      "spearman_elo,pearson_elo,rmse_elo\n";
  for (const ConvergenceReport& report : reports) {
    out += std::to_string(report.checkpoint_index);
    out += ',';
    out += std::to_string(report.matches);
    out += ',';
    out += format_fixed(report.ladder.spearman, 6);
    out += ',';
    out += format_fixed(report.ladder.pearson, 6);
    out += ',';
    out += format_fixed(report.ladder.rmse, 6);
    out += ',';
    if (report.elo) {
      out += format_fixed(report.elo->spearman, 6);
      out += ',';
      out += format_fixed(report.elo->pearson, 6);
      out += ',';
      out += format_fixed(report.elo->rmse, 6);
    } else {
      out += ",,";
    }
    out += '\n';
  }
  if (motion) {
    out += "motion,";
    out += format_fixed(motion->velocity, 3);
    out += ',';
    out += format_fixed(motion->mass, 3);
    out += ',';
    out += format_fixed(motion->momentum, 3);
    out += ',';
    out += format_fixed(motion->potential_energy, 3);
    out += '\n';
  }
  return out;
}

std::string render_velocity_histogram_csv(std::span<const ExperienceSample> samples) {
  constexpr int kBins = 30;  // 0.1 wide over [0, 3), then one overflow bin
  std::array<long long, kBins + 1> counts{};
  for (const ExperienceSample& sample : samples) {
    const int bin = sample.v >= 3.0 ? kBins : static_cast<int>(sample.v * 10.0);
    counts[static_cast<std::size_t>(std::clamp(bin, 0, kBins))] += 1;
  }

  std::string out = "bin_lo,bin_hi,count\n";
  for (int i = 0; i < kBins; ++i) {
    out += format_fixed(static_cast<double>(i) * 0.1, 1);
    out += ',';
    out += format_fixed(static_cast<double>(i + 1) * 0.1, 1);
    out += ',';
    out += std::to_string(counts[static_cast<std::size_t>(i)]);
    out += '\n';
  }
  out += "3.0,,";
  out += std::to_string(counts[kBins]);
  out += '\n';
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

template <typename T>
T parse_field(std::string_view field, std::size_t line_no) {
  T out{};
  const auto result = std::from_chars(field.data(), field.data() + field.size(), out);
  if (result.ec != std::errc{} || result.ptr != field.data() + field.size())
    throw IoError("snapshot line " + std::to_string(line_no) + ": bad field '" +
                  std::string(field) + "'");
  return out;
}

}  // namespace

std::vector<SnapshotRow> parse_snapshot_csv(std::string_view text) {
  if (text.empty() || text.back() != '\n')
    throw IoError("snapshot csv must end with a newline");
  text.remove_suffix(1);
  const std::vector<std::string_view> lines = split(text, '\n');
  if (lines.empty() || lines[0] != "player_id,strength,ladder,elo,games_played,wins")
    throw IoError("snapshot csv has an unexpected header");

  std::vector<SnapshotRow> rows;
  rows.reserve(lines.size() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string_view> fields = split(lines[i], ',');
    if (fields.size() != 6)
      throw IoError("snapshot line " + std::to_string(i + 1) + ": expected 6 fields");
    SnapshotRow row;
    row.player_id = parse_field<int>(fields[0], i + 1);
    row.strength = parse_field<double>(fields[1], i + 1);
    row.ladder = parse_field<long long>(fields[2], i + 1);
    row.elo = parse_field<long long>(fields[3], i + 1);
    row.games_played = parse_field<long long>(fields[4], i + 1);
    row.wins = parse_field<long long>(fields[5], i + 1);
    rows.push_back(row);
  }
  return rows;
}

RenderedRun render_run(const RunHistory& history) {
  RenderedRun out;
  Manifest manifest;
  manifest.config = history.config;

  const bool with_elo = history.config.maintains_hidden_elo();
  std::vector<ConvergenceReport> reports;
  reports.reserve(history.snapshots.size());
  for (std::size_t i = 0; i < history.snapshots.size(); ++i) {
    const Snapshot& snapshot = history.snapshots[i];
    reports.push_back(convergence_report(snapshot, with_elo, static_cast<long long>(i)));

    char stem[32];
    std::snprintf(stem, sizeof stem, "snapshot_%08lld",
                  static_cast<long long>(snapshot.matches));
    CheckpointEntry entry;
    entry.matches = snapshot.matches;
    entry.snapshot_file = std::string(stem) + ".csv";
    entry.sorted_file = std::string(stem) + "_sorted.csv";
    out.files.emplace_back(entry.snapshot_file, render_snapshot_csv(snapshot.players));
    out.files.emplace_back(entry.sorted_file, render_sorted_csv(snapshot.players));
    manifest.checkpoints.push_back(entry);
  }

  const std::vector<ExperienceSample> samples = experience_samples(history);
  std::optional<MotionReport> motion;
  if (!samples.empty()) motion = motion_report(samples);

  manifest.metrics_file = "metrics.csv";
  manifest.velocity_histogram_file = "velocity_hist.csv";
  out.files.emplace_back(manifest.metrics_file, render_metrics_csv(reports, motion));
  out.files.emplace_back(manifest.velocity_histogram_file,
                         render_velocity_histogram_csv(samples));
  out.files.emplace_back("manifest.json", render_manifest_json(manifest));
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  file.write(content.data(), static_cast<std::streamsize>(content.size()));
  file.flush();
  if (!file) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace ratesim
