#include "nbsc/demand.hpp"

#include <algorithm>
#include <cmath>

#include "nbsc/errors.hpp"

namespace nbsc::demand {

namespace {

void check_rp(double r, double p) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DomainError("negative binomial: r must be positive");
  }
  if (!(p > 0.0) || !(p < 1.0)) {
    throw DomainError("negative binomial: p must lie in (0, 1)");
  }
}

}  // namespace

void DemandParams::validate() const {
  check_rp(r, p0);
  if (!(rho >= 0.0) || !(rho < 1.0)) {
    throw DomainError("demand: rho must lie in [0, 1)");
  }
  if (!(sigma_eps >= 0.0)) {
    throw DomainError("demand: sigma_eps must be non-negative");
  }
  if (!(p_floor > 0.0) || !(p_floor < p_ceil) || !(p_ceil < 1.0)) {
    throw DomainError("demand: need 0 < p_floor < p_ceil < 1");
  }
  if (p0 < p_floor || p0 > p_ceil) {
    throw DomainError("demand: p0 must lie within [p_floor, p_ceil]");
  }
}

double nb_pmf(double r, double p, long long x) {
  check_rp(r, p);
  if (x < 0) throw DomainError("nb_pmf: x must be non-negative");
  const double xd = static_cast<double>(x);
  const double log_pmf = std::lgamma(xd + r) - std::lgamma(r) - std::lgamma(xd + 1.0) +
                         r * std::log(p) + xd * std::log1p(-p);
  return std::exp(log_pmf);
}

double nb_cdf(double r, double p, long long x) {
  check_rp(r, p);
  if (x < 0) throw DomainError("nb_cdf: x must be non-negative");
  // Forward recurrence pmf(k+1) = pmf(k) * (k+r)/(k+1) * (1-p), accumulated
  // in extended precision. Starts in log space so small pmf(0) survives.
  const long double q = 1.0L - static_cast<long double>(p);
  long double term = std::exp(static_cast<long double>(r) * std::log(static_cast<long double>(p)));
  long double sum = term;
  for (long long k = 0; k < x; ++k) {
    term *= (static_cast<long double>(k) + static_cast<long double>(r)) /
            (static_cast<long double>(k) + 1.0L) * q;
    sum += term;
  }
  return std::min(1.0, static_cast<double>(sum));
}

std::pair<double, double> nb_moments(double r, double p) {
  check_rp(r, p);
  const double mean = r * (1.0 - p) / p;
  const double variance = r * (1.0 - p) / (p * p);
  return {mean, variance};
}

double overdispersion_index(double r, double p) {
  check_rp(r, p);
  return 1.0 / p;
}

double step_p(double p_prev, const DemandParams& params, double noise) {
  const double offset = params.mean_revert ? (1.0 - params.rho) * params.p0 : 0.0;
  const double raw = offset + params.rho * p_prev + params.sigma_eps * noise;
  return std::clamp(raw, params.p_floor, params.p_ceil);
}

long long sample_demand(double r, double p, rng::SplitMix64& gen) {
  check_rp(r, p);
  const double lambda = rng::gamma(gen, r, (1.0 - p) / p);
  return rng::poisson(gen, lambda);
}

DemandPath sample_path(const DemandParams& params, int horizon, rng::SplitMix64& gen) {
  params.validate();
  if (horizon < 1) throw DomainError("sample_path: horizon must be >= 1");
  DemandPath path;
  path.probabilities.reserve(static_cast<std::size_t>(horizon));
  path.draws.reserve(static_cast<std::size_t>(horizon));
  double p = params.p0;
  for (int t = 0; t < horizon; ++t) {
    if (t > 0) p = step_p(p, params, rng::standard_normal(gen));
    path.probabilities.push_back(p);
    path.draws.push_back(sample_demand(params.r, p, gen));
  }
  return path;
}

}  // namespace nbsc::demand
