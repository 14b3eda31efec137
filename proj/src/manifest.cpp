#include "ratesim/manifest.hpp"

#include <json.hpp>

#include "ratesim/errors.hpp"
#include "ratesim/rng.hpp"
#include "ratesim/version.hpp"

namespace ratesim {

using nlohmann::json;

Manifest::Manifest()
    : tool(kToolName), version(kToolVersion), rng_algorithm(kRngAlgorithm) {}

namespace {

json config_to_json(const SimConfig& c) {
  return json{
      {"player_count", c.player_count},
      {"strength_min", c.strength_min},
      {"strength_max", c.strength_max},
      {"strength_distribution", to_string(c.strength_distribution)},
      {"delta_range", c.delta_range},
      {"scheme", to_string(c.scheme)},
      {"total_matches", c.total_matches},
      {"checkpoint_interval", c.checkpoint_interval},
      {"seed", c.seed},
      {"base_gain", c.base_gain},
      {"k_min", c.k_min},
      {"match_policy",
       {{"matching_score", to_string(c.match_policy.matching_score)},
        {"initial_threshold", c.match_policy.initial_threshold},
        {"relax_step", c.match_policy.relax_step},
        {"relax_after", c.match_policy.relax_after},
        {"max_threshold", c.match_policy.max_threshold}}},
  };
}

SimConfig config_from_json(const json& j) {
  SimConfig c;
  c.player_count = j.at("player_count").get<long long>();
  c.strength_min = j.at("strength_min").get<double>();
  c.strength_max = j.at("strength_max").get<double>();
  c.strength_distribution =
      distribution_from_string(j.at("strength_distribution").get<std::string>());
  c.delta_range = j.at("delta_range").get<long long>();
  c.scheme = scheme_from_string(j.at("scheme").get<std::string>());
  c.total_matches = j.at("total_matches").get<long long>();
  c.checkpoint_interval = j.at("checkpoint_interval").get<long long>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.base_gain = j.at("base_gain").get<double>();
  c.k_min = j.at("k_min").get<double>();
  const json& policy = j.at("match_policy");
  c.match_policy.matching_score =
      matching_score_from_string(policy.at("matching_score").get<std::string>());
  c.match_policy.initial_threshold = policy.at("initial_threshold").get<double>();
  c.match_policy.relax_step = policy.at("relax_step").get<double>();
  c.match_policy.relax_after = policy.at("relax_after").get<long long>();
  c.match_policy.max_threshold = policy.at("max_threshold").get<double>();
  return c;
}

}  // namespace

std::string render_manifest_json(const Manifest& manifest) {
  json checkpoints = json::array();
  for (const CheckpointEntry& entry : manifest.checkpoints) {
    checkpoints.push_back(json{{"matches", entry.matches},
                               {"snapshot", entry.snapshot_file},
                               {"sorted", entry.sorted_file}});
  }
  const json j{
      {"tool", manifest.tool},
      {"version", manifest.version},
      {"rng", manifest.rng_algorithm},
      {"config", config_to_json(manifest.config)},
      {"artifacts",
       {{"metrics", manifest.metrics_file},
        {"velocity_histogram", manifest.velocity_histogram_file},
        {"checkpoints", checkpoints}}},
  };
  return j.dump(2) + "\n";
}

Manifest parse_manifest_json(const std::string& text) {
  const json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw IoError("manifest is not valid JSON");
  try {
    Manifest manifest;
    manifest.tool = j.at("tool").get<std::string>();
    manifest.version = j.at("version").get<std::string>();
    manifest.rng_algorithm = j.at("rng").get<std::string>();
    manifest.config = config_from_json(j.at("config"));
    const json& artifacts = j.at("artifacts");
    manifest.metrics_file = artifacts.at("metrics").get<std::string>();
    manifest.velocity_histogram_file =
        artifacts.at("velocity_histogram").get<std::string>();
    for (const json& entry : artifacts.at("checkpoints")) {
      CheckpointEntry checkpoint;
      checkpoint.matches = entry.at("matches").get<long long>();
      checkpoint.snapshot_file = entry.at("snapshot").get<std::string>();
      checkpoint.sorted_file = entry.at("sorted").get<std::string>();
      manifest.checkpoints.push_back(checkpoint);
    }
    return manifest;
  } catch (const json::exception& error) {
    throw IoError(std::string("manifest is missing fields: ") + error.what());
  }
}

}  // namespace ratesim
