#include "symbool/rng.hpp"

#include <limits>
#include <numeric>

#include "symbool/error.hpp"

namespace symbool {

namespace {

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

InstanceRng::InstanceRng(std::uint64_t seed, std::uint64_t stream)
    : engine_(seeded(seed, stream)) {}

std::uint64_t InstanceRng::below(std::uint64_t bound) {
  if (bound == 0) {
    throw InvalidArgument("below() needs a positive bound");
  }
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t const limit = kMax - (kMax % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % bound;
}

double InstanceRng::unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Permutation InstanceRng::permutation(std::size_t degree) {
  std::vector<Point> image(degree);
  std::iota(image.begin(), image.end(), Point{0});
  // Fisher-Yates
  for (std::size_t i = degree; i > 1; --i) {
    std::swap(image[i - 1], image[below(i)]);
  }
  return Permutation(std::move(image));
}

}  // namespace symbool
