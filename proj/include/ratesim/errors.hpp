#pragma once

#include <stdexcept>
#include <string>

namespace ratesim {

// Configuration problems keep their cause so callers can report precisely
// which stage rejected the input.
class ConfigError : public std::runtime_error {
 public:
  enum class Kind { missing_file, parse, constraint };

  ConfigError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// No acceptable 5v5 match exists in the pool, even at the maximum threshold.
class MatchmakingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A simulation run had to abort (e.g. matchmaking failed past the retry budget).
class SimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File read/write or artifact parsing failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ratesim
