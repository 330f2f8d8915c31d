#pragma once

// Per-instance random streams for sampled campaigns.
//
// Instance i of a campaign with seed s draws from std::mt19937_64 seeded via
// std::seed_seq{lo32(s), hi32(s), lo32(i), hi32(i)}. The engine and seed_seq
// are both specified exactly by the standard, and bounded draws below use
// plain rejection sampling instead of std::uniform_int_distribution (whose
// algorithm is implementation-defined), so records depend only on (s, i):
// not on the platform, the worker count, or the order of completion.

#include <cstdint>
#include <random>
#include <vector>

#include "symbool/perm.hpp"

namespace symbool {

class InstanceRng {
 public:
  InstanceRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1) with 53 bits.
  double unit();

  Permutation permutation(std::size_t degree);

 private:
  std::mt19937_64 engine_;
};

}  // namespace symbool
