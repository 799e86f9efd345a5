#include "recon/rng.hpp"

#include <cmath>

namespace recon {

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // 1 - u keeps the log argument in (0,1].
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * M_PI * u2;
  spare_ = mag * std::sin(ang);
  have_spare_ = true;
  return mag * std::cos(ang);
}

namespace {

// Sequential inversion; a single uniform decides the count. Fine up to
// moderate means, the loop length is O(lambda).
std::int64_t poisson_inversion(Rng& rng, double lambda) {
  const double u = rng.uniform();
  double p = std::exp(-lambda);
  double cum = p;
  std::int64_t k = 0;
  while (u > cum && k < 2000) {
    ++k;
    p *= lambda / static_cast<double>(k);
    cum += p;
  }
  return k;
}

// Hoermann's PTRS transformed-rejection sampler for lambda >= 10.
std::int64_t poisson_ptrs(Rng& rng, double lambda) {
  const double slam = std::sqrt(lambda);
  const double loglam = std::log(lambda);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = rng.uniform() - 0.5;
    const double v = rng.uniform();
    const double us = 0.5 - std::abs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::int64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    const double k = kf;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        k * loglam - lambda - std::lgamma(k + 1.0)) {
      return static_cast<std::int64_t>(kf);
    }
  }
}

}  // namespace

std::int64_t Rng::poisson(double lambda) {
  if (!(lambda > 0.0)) return 0;
  if (lambda < 10.0) return poisson_inversion(*this, lambda);
  return poisson_ptrs(*this, lambda);
}

}  // namespace recon
