#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "majorana/kinematics.hpp"

namespace majorana {

/*!
 * Seeded on-shell momentum source: mass log-uniform in [0.1, 10], |p|
 * uniform in [0, 10 m], direction isotropic. Draws within kMinusZ of the
 * -z axis are rejected and counted.
 */
class MomentumSampler {
 public:
  explicit MomentumSampler(std::uint64_t seed) : engine_(seed) {}

  FourMomentum next();
  /// Isotropic direction with phi in [0, 2pi).
  AngularParams direction();
  double uniform(double lo, double hi);
  std::size_t resampled() const noexcept { return resampled_; }

 private:
  std::mt19937_64 engine_;
  std::size_t resampled_ = 0;
};

}  // namespace majorana
