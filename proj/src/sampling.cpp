#include "majorana/sampling.hpp"

#include <cmath>
#include <numbers>

#include "majorana/tolerances.hpp"

namespace majorana {

double MomentumSampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

AngularParams MomentumSampler::direction() {
  const double cos_theta = uniform(-1.0, 1.0);
  const double phi = uniform(0.0, 2.0 * std::numbers::pi);
  return {std::acos(cos_theta), phi};
}

FourMomentum MomentumSampler::next() {
  for (;;) {
    const double m = std::exp(uniform(std::log(0.1), std::log(10.0)));
    const double size = uniform(0.0, 10.0 * m);
    const auto p = momentum_from_angles(size, direction(), m);
    if (p.magnitude() > 0.0 && p.magnitude() + p.pz() < tol::kMinusZ * p.magnitude()) {
      ++resampled_;
      continue;
    }
    return p;
  }
}

}  // namespace majorana
