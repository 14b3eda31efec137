#pragma once

#include <string>
#include <vector>

#include "ratesim/sim_config.hpp"

namespace ratesim {

struct CheckpointEntry {
  long long matches = 0;
  std::string snapshot_file;
  std::string sorted_file;
};

// Everything `replay` needs to re-execute a run and check it byte for byte:
// the full config (seed included), the generator identity, the tool version
// and the index of every artifact the run produced. Paths are relative to the
// manifest's own directory.
struct Manifest {
  std::string tool;
  std::string version;
  std::string rng_algorithm;
  SimConfig config;
  std::string metrics_file;
  std::string velocity_histogram_file;
  std::vector<CheckpointEntry> checkpoints;

  Manifest();
};

std::string render_manifest_json(const Manifest& manifest);

// Throws IoError on malformed JSON or missing fields.
Manifest parse_manifest_json(const std::string& text);

}  // namespace ratesim
