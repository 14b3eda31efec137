#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ratesim/sim_config.hpp"

namespace ratesim {

// Flat `key = value` text with '#' comments. Unknown keys are rejected.
// Throws ConfigError with Kind::parse on malformed input and Kind::constraint
// when the resulting config fails validation.
SimConfig parse_config(std::string_view text);

// Same, reading from a file. Throws ConfigError(Kind::missing_file) if the
// file cannot be opened.
SimConfig load_config(const std::filesystem::path& path);

// Commented template listing every key with its default; also shown in the
// CLI help text.
std::string default_config_text();

}  // namespace ratesim
