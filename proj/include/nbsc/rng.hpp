#pragma once

#include <cstdint>

namespace nbsc::rng {

/// SplitMix64 finalizer: a bijective 64-bit mixing function.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives the per-replication stream seed from (base_seed, scenario_index,
/// replication_index). The mixing chain is order-insensitive to evaluation
/// scheduling: the same triple always yields the same seed, so replications
/// can run on any worker in any order.
constexpr std::uint64_t replication_seed(std::uint64_t base_seed,
                                         std::uint64_t scenario_index,
                                         std::uint64_t replication_index) noexcept {
  std::uint64_t h = mix64(base_seed);
  h = mix64(h ^ (scenario_index + 0xa0761d6478bd642fULL));
  h = mix64(h ^ (replication_index + 0xe7037ed1a0b428dbULL));
  return h;
}

/// Minimal splittable counter-style engine (SplitMix64). Satisfies
/// UniformRandomBitGenerator. State is a single 64-bit word, so streams are
/// cheap to create per replication.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~0ULL; }

  result_type operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Uniform double in [0, 1) with 53 random bits.
double uniform01(SplitMix64& gen) noexcept;

/// Uniform double in (0, 1); never returns 0 (safe to take logs).
double uniform_open01(SplitMix64& gen) noexcept;

/// Uniform integer in [0, bound). bound must be > 0.
std::uint64_t uniform_below(SplitMix64& gen, std::uint64_t bound) noexcept;

/// Standard normal variate (Box-Muller, one value per call so the stream
/// layout does not depend on call parity).
double standard_normal(SplitMix64& gen) noexcept;

/// Gamma(shape, scale) via Marsaglia-Tsang squeeze, with the power boost for
/// shape < 1. shape and scale must be positive.
double gamma(SplitMix64& gen, double shape, double scale);

/// Poisson(lambda) draw; exponential-gap counting for small lambda, PTRS
/// transformed rejection for large lambda. lambda must be finite and >= 0.
long long poisson(SplitMix64& gen, double lambda);

}  // namespace nbsc::rng
