#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace ntnoff {

// A seeded random stream whose variates depend only on the 64-bit engine
// output, so results are identical across standard library implementations
// (std::*_distribution makes no such promise).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 bits of resolution.
  double uniform();

  // Uniform on (0, 1); safe as a log() argument.
  double uniform_open();

  // Standard normal via Box-Muller; the second variate of each pair is cached.
  double normal();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

// Well-known stream ids so that tasks and channel draws never share state.
inline constexpr std::uint64_t kTaskStream = 1;
inline constexpr std::uint64_t kChannelStream = 2;

}  // namespace ntnoff
