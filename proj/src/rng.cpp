#include "nbsc/rng.hpp"

#include <cmath>
#include <numbers>

#include "nbsc/errors.hpp"

namespace nbsc::rng {

double uniform01(SplitMix64& gen) noexcept {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

double uniform_open01(SplitMix64& gen) noexcept {
  // (n + 0.5) * 2^-53 lies strictly inside (0, 1).
  return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t uniform_below(SplitMix64& gen, std::uint64_t bound) noexcept {
  // Lemire's multiply-shift with rejection of the biased low range.
  std::uint64_t x = gen();
  __uint128_t m = static_cast<__uint128_t>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      x = gen();
      m = static_cast<__uint128_t>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double standard_normal(SplitMix64& gen) noexcept {
  const double u1 = uniform_open01(gen);
  const double u2 = uniform01(gen);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

double gamma_shape_ge1(SplitMix64& gen, double shape) {
  // Marsaglia & Tsang (2000).
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = standard_normal(gen);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_open01(gen);
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

double gamma(SplitMix64& gen, double shape, double scale) {
  if (!(shape > 0.0) || !(scale > 0.0)) {
    throw DomainError("gamma: shape and scale must be positive");
  }
  if (shape < 1.0) {
    const double u = uniform_open01(gen);
    return scale * gamma_shape_ge1(gen, shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  return scale * gamma_shape_ge1(gen, shape);
}

namespace {

// Hoermann's PTRS transformed-rejection sampler, valid for lambda >= 10.
long long poisson_ptrs(SplitMix64& gen, double lambda) {
  const double slam = std::sqrt(lambda);
  const double loglam = std::log(lambda);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = uniform01(gen) - 0.5;
    const double v = uniform01(gen);
    const double us = 0.5 - std::fabs(u);
    const double k = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<long long>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        k * loglam - lambda - std::lgamma(k + 1.0)) {
      return static_cast<long long>(k);
    }
  }
}

// Inversion by unrolled product; cheap for small lambda.
long long poisson_small(SplitMix64& gen, double lambda) {
  const double limit = std::exp(-lambda);
  double prod = 1.0;
  long long n = 0;
  for (;;) {
    prod *= uniform01(gen);
    if (prod <= limit) return n;
    ++n;
  }
}

}  // namespace

long long poisson(SplitMix64& gen, double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DomainError("poisson: lambda must be finite and non-negative");
  }
  if (lambda == 0.0) return 0;
  if (lambda < 10.0) return poisson_small(gen, lambda);
  return poisson_ptrs(gen, lambda);
}

}  // namespace nbsc::rng
