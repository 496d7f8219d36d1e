#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <random>
#include <vector>

#include "majorana/dynamics.hpp"
#include "majorana/kinematics.hpp"
#include "majorana/parallel.hpp"
#include "majorana/verification.hpp"

namespace majorana::detail {

inline FourMomentum reference_momentum() { return make_momentum(1.0, 2.0, 3.0, 2.0); }

/// Per-momentum values computed in parallel, reduced in sample order.
template <class F>
double max_over(const std::vector<FourMomentum>& ps, F&& f) {
  const auto values = sweep_parallel(ps.size(), [&](std::size_t i) { return f(ps[i]); });
  double worst = 0.0;
  for (double v : values) worst = std::max(worst, v);
  return worst;
}

template <class F>
double min_over(const std::vector<FourMomentum>& ps, F&& f) {
  const auto values = sweep_parallel(ps.size(), [&](std::size_t i) { return f(ps[i]); });
  double best = std::numeric_limits<double>::infinity();
  for (double v : values) best = std::min(best, v);
  return best;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/*!
 * Each field a random complex superposition of its up and down spinors.
 * With a single index the four bilinears of the mass term cancel exactly,
 * which would make invariance checks vacuous.
 */
inline MassTermFields mixed_mass_term_fields(const FourMomentum& p, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  const auto up = mass_term_fields(p, Index::Up);
  const auto down = mass_term_fields(p, Index::Down);
  auto mix = [&](const CVector& a, const CVector& b) {
    const Complex ca(g(rng), g(rng));
    const Complex cb(g(rng), g(rng));
    return ca * a + cb * b;
  };
  return {mix(up.lambda_s, down.lambda_s), mix(up.rho_a, down.rho_a), mix(up.lambda_a, down.lambda_a),
          mix(up.rho_s, down.rho_s)};
}

/// Scale of the mass term for fields of size |f|: m times the summed squared norms.
inline double mass_term_scale(const MassTermFields& f, double m) {
  auto n2 = [](const CVector& v) { return norm(v) * norm(v); };
  return m * (n2(f.lambda_s) + n2(f.rho_a) + n2(f.lambda_a) + n2(f.rho_s));
}

void add_spin_half_checks(std::vector<CheckSpec>& out);
void add_symmetry_checks(std::vector<CheckSpec>& out);
void add_dynamics_checks(std::vector<CheckSpec>& out);
void add_spin_one_checks(std::vector<CheckSpec>& out);

}  // namespace majorana::detail
