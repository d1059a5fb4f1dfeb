#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace risgg {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// The 64-bit key is the user seed; the upper half of the counter selects an
/// independent stream, the lower half counts blocks. Streams with different
/// ids never overlap, so batch i of a Monte Carlo run can be reproduced on any
/// thread from (seed, i) alone. Satisfies UniformRandomBitGenerator.
class Philox4x32 {
public:
  using result_type = std::uint32_t;
  using Block = std::array<std::uint32_t, 4>;

  explicit Philox4x32(std::uint64_t seed = 0, std::uint64_t stream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform double in (0, 1): 53 random bits, never exactly 0 or 1.
  double uniform_open();

  /// The raw bijection, exposed for known-answer tests.
  static Block encrypt(Block counter, std::array<std::uint32_t, 2> key);

private:
  std::array<std::uint32_t, 2> key_;
  Block counter_;
  Block buffer_{};
  unsigned used_ = 4;
};

}  // namespace risgg
