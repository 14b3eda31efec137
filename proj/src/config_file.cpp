#include "ratesim/config_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ratesim/errors.hpp"

namespace ratesim {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& message) {
  throw ConfigError(ConfigError::Kind::parse,
                    "config line " + std::to_string(line_no) + ": " + message);
}

template <typename T>
T parse_number(std::string_view value, std::size_t line_no) {
  T out{};
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto result = std::from_chars(begin, end, out);
  if (result.ec != std::errc{} || result.ptr != end)
    parse_fail(line_no, "invalid number '" + std::string(value) + "'");
  return out;
}

}  // namespace

SimConfig parse_config(std::string_view text) {
  SimConfig config;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto newline = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, newline == std::string_view::npos ? text.size() - pos : newline - pos);
    pos = newline == std::string_view::npos ? text.size() + 1 : newline + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      parse_fail(line_no, "expected 'key = value'");
    const std::string key{trim(line.substr(0, eq))};
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) parse_fail(line_no, "missing key");
    if (value.empty()) parse_fail(line_no, "missing value for '" + key + "'");

    if (key == "player_count") {
      config.player_count = parse_number<long long>(value, line_no);
    } else if (key == "strength_min") {
      config.strength_min = parse_number<double>(value, line_no);
    } else if (key == "strength_max") {
      config.strength_max = parse_number<double>(value, line_no);
    } else if (key == "strength_distribution") {
      config.strength_distribution = distribution_from_string(std::string(value));
    } else if (key == "delta_range") {
      config.delta_range = parse_number<long long>(value, line_no);
    } else if (key == "scheme") {
      config.scheme = scheme_from_string(std::string(value));
    } else if (key == "total_matches") {
      config.total_matches = parse_number<long long>(value, line_no);
    } else if (key == "checkpoint_interval") {
      config.checkpoint_interval = parse_number<long long>(value, line_no);
    } else if (key == "seed") {
      config.seed = parse_number<std::uint64_t>(value, line_no);
    } else if (key == "base_gain") {
      config.base_gain = parse_number<double>(value, line_no);
    } else if (key == "k_min") {
      config.k_min = parse_number<double>(value, line_no);
    } else if (key == "matching_score") {
      config.match_policy.matching_score = matching_score_from_string(std::string(value));
    } else if (key == "initial_threshold") {
      config.match_policy.initial_threshold = parse_number<double>(value, line_no);
    } else if (key == "relax_step") {
      config.match_policy.relax_step = parse_number<double>(value, line_no);
    } else if (key == "relax_after") {
      config.match_policy.relax_after = parse_number<long long>(value, line_no);
    } else if (key == "max_threshold") {
      config.match_policy.max_threshold = parse_number<double>(value, line_no);
    } else {
      parse_fail(line_no, "unknown key '" + key + "'");
    }
  }

  config.validate();
  return config;
}

SimConfig load_config(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file)
    throw ConfigError(ConfigError::Kind::missing_file,
                      "cannot open config file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_config(buffer.str());
}

std::string default_config_text() {
  const SimConfig d;
  std::ostringstream out;
  out << "# ratesim configuration; every key is optional.\n"
      << "player_count = " << d.player_count << "\n"
      << "strength_min = " << d.strength_min << "\n"
      << "strength_max = " << d.strength_max << "\n"
      << "strength_distribution = " << to_string(d.strength_distribution)
      << "              # truncated-normal | uniform\n"
      << "delta_range = " << d.delta_range
      << "          # initial scores: strength + integer from [-delta_range, delta_range]\n"
      << "scheme = " << to_string(d.scheme)
      << "        # classic-elo | performance-elo | proposed\n"
      << "total_matches = " << d.total_matches << "\n"
      << "checkpoint_interval = " << d.checkpoint_interval << "\n"
      << "seed = " << d.seed << "\n"
      << "base_gain = " << d.base_gain
      << "             # points per win in the proposed scheme\n"
      << "k_min = " << d.k_min << "                 # lower clamp for the K value\n"
      << "matching_score = " << to_string(d.match_policy.matching_score)
      << "       # auto | elo | ladder (auto: ladder for proposed, elo otherwise)\n"
      << "initial_threshold = " << d.match_policy.initial_threshold << "\n"
      << "relax_step = " << d.match_policy.relax_step
      << "            # threshold added per failed matchmaking scan\n"
      << "relax_after = " << d.match_policy.relax_after
      << "           # failed scans per relaxation step\n"
      << "max_threshold = " << d.match_policy.max_threshold << "\n";
  return out.str();
}

}  // namespace ratesim
