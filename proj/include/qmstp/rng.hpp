#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace qmstp {

// Portable random source. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; the distributions below are written out
// by hand because the standard library distributions are implementation
// defined and would make generated instances differ across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi] by rejection sampling.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Uniform real in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed for a named sub-stream: mixes a tag string and up to three integers
/// into the base seed. Equal inputs give equal streams on every platform.
std::uint64_t stream_seed(std::uint64_t base, std::string_view tag, std::uint64_t a = 0,
                          std::uint64_t b = 0, std::uint64_t c = 0);

}  // namespace qmstp
