#pragma once

#include <utility>
#include <vector>

#include "nbsc/rng.hpp"

namespace nbsc::demand {

/// Parameters of the dynamic Negative Binomial demand process. The success
/// probability follows an AR(1) recursion; with mean_revert (default) the
/// recursion is p_t = (1-rho)*p0 + rho*p_{t-1} + eps_t so the stationary mean
/// stays at p0, otherwise the bare form p_t = rho*p_{t-1} + eps_t is used.
struct DemandParams {
  double r = 4.5;          // dispersion, > 0
  double p0 = 0.3;         // baseline success probability, in (0, 1)
  double rho = 0.6;        // AR(1) coefficient, in [0, 1)
  double sigma_eps = 0.02; // noise standard deviation, >= 0
  double p_floor = 0.001;
  double p_ceil = 0.999;
  bool mean_revert = true;

  /// Throws DomainError when any invariant is violated.
  void validate() const;
};

/// One realized path of the demand process.
struct DemandPath {
  std::vector<double> probabilities;  // realized p_t, inside [p_floor, p_ceil]
  std::vector<long long> draws;       // realized D_t, same length
};

/// NB probability mass C(x+r-1, x) p^r (1-p)^x, generalized to non-integer r
/// through log-gamma.
double nb_pmf(double r, double p, long long x);

/// Cumulative sum of the pmf over 0..x.
double nb_cdf(double r, double p, long long x);

/// (mean, variance) = (r(1-p)/p, r(1-p)/p^2).
std::pair<double, double> nb_moments(double r, double p);

/// Variance-to-mean ratio, equal to 1/p (and to 1 + mean/r).
double overdispersion_index(double r, double p);

/// One AR(1) transition of the success probability. `noise` is a standard
/// normal variate; scaling by sigma_eps happens here. Result is clamped to
/// [p_floor, p_ceil].
double step_p(double p_prev, const DemandParams& params, double noise);

/// One NB(r, p) draw via the gamma-Poisson mixture:
/// Lambda ~ Gamma(r, (1-p)/p), D ~ Poisson(Lambda).
long long sample_demand(double r, double p, rng::SplitMix64& gen);

/// Simulates `horizon` periods. p_1 = p0 exactly; later periods apply step_p
/// before drawing.
DemandPath sample_path(const DemandParams& params, int horizon, rng::SplitMix64& gen);

}  // namespace nbsc::demand
