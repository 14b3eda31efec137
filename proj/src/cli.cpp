#include "ratesim/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ratesim/config_file.hpp"
#include "ratesim/errors.hpp"
#include "ratesim/export.hpp"
#include "ratesim/manifest.hpp"
#include "ratesim/metrics.hpp"
#include "ratesim/rng.hpp"
#include "ratesim/sim_engine.hpp"
#include "ratesim/version.hpp"

namespace ratesim {

namespace {

namespace fs = std::filesystem;

struct CommonOptions {
  std::string config_path;
  std::string scheme;
  long long matches = -1;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
};

fs::path resolve_out_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("RATESIM_OUT"); env != nullptr && *env != '\0')
    return env;
  return ".";
}

SimConfig build_config(const CommonOptions& options) {
  SimConfig config =
      options.config_path.empty() ? SimConfig{} : load_config(options.config_path);
  if (!options.scheme.empty()) config.scheme = scheme_from_string(options.scheme);
  if (options.matches >= 0) config.total_matches = options.matches;
  if (options.seed) config.seed = *options.seed;
  config.validate();
  return config;
}

std::string read_file(const fs::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

int do_simulate(const CommonOptions& options) {
  const SimConfig config = build_config(options);
  const fs::path out_dir = resolve_out_dir(options.out_dir);
  fs::create_directories(out_dir);

  const RunHistory history = run_simulation(config);
  const RenderedRun rendered = render_run(history);
  for (const auto& [name, content] : rendered.files)
    write_file(out_dir / name, content);

  const ConvergenceReport final_report = convergence_report(
      history.snapshots.back(), config.maintains_hidden_elo(),
      static_cast<long long>(history.snapshots.size()) - 1);
  std::cout << "simulated " << config.total_matches << " matches ("
            << to_string(config.scheme) << ", seed " << config.seed << ", "
            << config.player_count << " players)\n"
            << "wrote " << rendered.files.size() << " files to "
            << (out_dir / "manifest.json").string() << " and siblings\n"
            << "final spearman(strength, ladder) = "
            << format_fixed(final_report.ladder.spearman, 6);
  if (final_report.elo)
    std::cout << ", spearman(strength, elo) = "
              << format_fixed(final_report.elo->spearman, 6);
  std::cout << "\n";
  return kExitOk;
}

struct CompareRow {
  std::uint64_t seed = 0;
  double spearman_ladder_classic = 0.0;
  double spearman_elo_classic = 0.0;
  double spearman_ladder_proposed = 0.0;
  double velocity_classic = 0.0;
  double velocity_proposed = 0.0;
};

int do_compare(const CommonOptions& options, long long seed_count) {
  SimConfig base = build_config(options);
  if (base.total_matches < 1)
    throw ConfigError(ConfigError::Kind::constraint,
                      "compare needs total_matches >= 1");
  // Snapshots beyond the endpoints are not used here; skip the intermediate
  // copies to keep paired runs cheap.
  base.checkpoint_interval = base.total_matches;

  const fs::path out_dir = resolve_out_dir(options.out_dir);
  fs::create_directories(out_dir);

  std::vector<CompareRow> rows;
  long long proposed_higher = 0;
  for (long long i = 0; i < seed_count; ++i) {
    CompareRow row;
    row.seed = base.seed + static_cast<std::uint64_t>(i);

    SimConfig classic = base;
    classic.scheme = Scheme::classic_elo;
    classic.seed = row.seed;
    const RunHistory classic_run = run_simulation(classic);
    const ConvergenceReport classic_report =
        convergence_report(classic_run.snapshots.back(), true);
    row.spearman_ladder_classic = classic_report.ladder.spearman;
    row.spearman_elo_classic = classic_report.elo->spearman;
    row.velocity_classic =
        motion_report(experience_samples(classic_run)).velocity;

    SimConfig proposed = base;
    proposed.scheme = Scheme::proposed;
    proposed.seed = row.seed;
    const RunHistory proposed_run = run_simulation(proposed);
    row.spearman_ladder_proposed =
        convergence_report(proposed_run.snapshots.back(), false).ladder.spearman;
    row.velocity_proposed =
        motion_report(experience_samples(proposed_run)).velocity;

    if (row.spearman_ladder_proposed > row.spearman_ladder_classic)
      ++proposed_higher;
    rows.push_back(row);
  }

  std::string csv =
      "seed,spearman_ladder_classic,spearman_elo_classic,"
      "spearman_ladder_proposed,velocity_classic,velocity_proposed\n";
  for (const CompareRow& row : rows) {
    csv += std::to_string(row.seed);
    csv += ',';
    csv += format_fixed(row.spearman_ladder_classic, 6);
    csv += ',';
    csv += format_fixed(row.spearman_elo_classic, 6);
    csv += ',';
    csv += format_fixed(row.spearman_ladder_proposed, 6);
    csv += ',';
    csv += format_fixed(row.velocity_classic, 6);
    csv += ',';
    csv += format_fixed(row.velocity_proposed, 6);
    csv += '\n';
  }
  write_file(out_dir / "compare.csv", csv);

  std::cout << "compared classic-elo vs proposed over " << seed_count
            << " paired seeds, " << base.total_matches << " matches each\n"
            << "proposed ladder spearman higher in " << proposed_higher << "/"
            << seed_count << " seeds\n"
            << "wrote " << (out_dir / "compare.csv").string() << "\n";
  return kExitOk;
}

int do_replay(const std::string& manifest_path) {
  const fs::path path = manifest_path;
  const Manifest manifest = parse_manifest_json(read_file(path));
  if (manifest.tool != kToolName || manifest.version != kToolVersion ||
      manifest.rng_algorithm != kRngAlgorithm)
    throw SimError("manifest was produced by " + manifest.tool + " " +
                   manifest.version + " (" + manifest.rng_algorithm +
                   "); this build is " + kToolName + " " + kToolVersion + " (" +
                   kRngAlgorithm + ")");

  manifest.config.validate();
  const RunHistory history = run_simulation(manifest.config);
  const RenderedRun rendered = render_run(history);

  const fs::path base_dir = path.has_parent_path() ? path.parent_path() : ".";
  long long checked = 0;
  for (const auto& [name, content] : rendered.files) {
    const fs::path file_path = base_dir / name;
    std::string on_disk;
    try {
      on_disk = read_file(file_path);
    } catch (const IoError&) {
      std::cerr << "replay mismatch: '" << file_path.string() << "' is missing\n";
      return kExitReplayMismatch;
    }
    if (on_disk != content) {
      std::cerr << "replay mismatch: '" << file_path.string()
                << "' differs from the re-executed run\n";
      return kExitReplayMismatch;
    }
    ++checked;
  }
  std::cout << "replay ok: " << checked << " files byte-identical\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{std::string(kToolName) +
               " - rating-scheme simulator for 5v5 ladder play"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.footer("Config file keys and their defaults:\n" + default_config_text());

  CommonOptions simulate_options;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Run one simulation and export snapshots, metrics and a manifest");
  simulate->add_option("--config", simulate_options.config_path,
                       "Config file (flat key = value text; defaults apply when omitted)");
  simulate
      ->add_option("--scheme", simulate_options.scheme,
                   "Scoring scheme: classic-elo, performance-elo or proposed")
      ->check(CLI::IsMember({"classic-elo", "performance-elo", "proposed"}));
  simulate->add_option("--matches", simulate_options.matches,
                       "Total matches to simulate (overrides config)");
  simulate->add_option("--seed", simulate_options.seed,
                       "Random seed (overrides config)");
  simulate->add_option("--out", simulate_options.out_dir,
                       "Output directory (default: $RATESIM_OUT, then '.')");

  CommonOptions compare_options;
  long long seed_count = 10;
  CLI::App* compare = app.add_subcommand(
      "compare",
      "Run classic-elo vs proposed on identical seeds and emit the ordering table");
  compare->add_option("--config", compare_options.config_path, "Config file");
  compare->add_option("--matches", compare_options.matches,
                      "Matches per run (overrides config)");
  compare->add_option("--seeds", seed_count, "Number of paired seeds")
      ->check(CLI::PositiveNumber);
  compare->add_option("--seed", compare_options.seed,
                      "Base seed; run i uses seed + i");
  compare->add_option("--out", compare_options.out_dir,
                      "Output directory (default: $RATESIM_OUT, then '.')");

  std::string manifest_path;
  CLI::App* replay = app.add_subcommand(
      "replay", "Re-execute a finished run and verify byte-identical artifacts");
  replay->add_option("--manifest", manifest_path, "Path to manifest.json")
      ->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back(kToolName);
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::CallForVersion& version) {
    return app.exit(version);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return kExitUsage;
  }

  try {
    if (simulate->parsed()) return do_simulate(simulate_options);
    if (compare->parsed()) return do_compare(compare_options, seed_count);
    if (replay->parsed()) return do_replay(manifest_path);
  } catch (const ConfigError& error) {
    std::cerr << "config error: " << error.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace ratesim
