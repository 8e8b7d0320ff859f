#pragma once

#include <cstdint>
#include <random>

namespace comalg {

/// Seeded generator with platform-independent draws. The standard
/// distributions are implementation-defined, so bounded draws are done by
/// rejection sampling on raw mt19937_64 output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den);

 private:
  std::mt19937_64 engine_;
};

/// Independent child seed for stream `index` of a master seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace comalg
