#pragma once

#include <cmath>
#include <cstdint>
#include <iterator>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

namespace ratesim {

// Identifier recorded in run manifests. Replay refuses manifests produced by
// a different generator stack, since their byte output could not match.
inline constexpr const char* kRngAlgorithm = "mt19937_64/canonical-v1";

// The single random source for a whole run. The engine is std::mt19937_64,
// whose output sequence is fully pinned by the standard; the distributions
// are implemented here because the <random> distribution objects are not
// reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform_real(double lo, double hi) {
    return lo + (hi - lo) * uniform();
  }

  // Uniform integer on [lo, hi], both ends inclusive. Unbiased via rejection.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: lo > hi");
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = (UINT64_MAX / span) * span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % span);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Box-Muller transform.
  double normal(double mean, double stddev) {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * radius * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Normal draw rejection-sampled into [lo, hi].
  double truncated_normal(double mean, double stddev, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("truncated_normal: lo >= hi");
    for (;;) {
      const double x = normal(mean, stddev);
      if (x >= lo && x <= hi) return x;
    }
  }

  // Fisher-Yates; same input order and seed give the same permutation.
  template <typename Container>
  void shuffle(Container& items) {
    const auto n = static_cast<std::int64_t>(std::size(items));
    for (std::int64_t i = n - 1; i > 0; --i) {
      const std::int64_t j = uniform_int(0, i);
      std::swap(items[static_cast<std::size_t>(i)],
                items[static_cast<std::size_t>(j)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ratesim
