#include "majorana/kinematics.hpp"

#include <cmath>
#include <numbers>

#include "majorana/clifford.hpp"
#include "majorana/errors.hpp"

namespace majorana {

namespace {

void require_mass(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("mass must be positive, got " + std::to_string(m));
}

}  // namespace

std::array<double, 3> FourMomentum::direction() const {
  if (magnitude_ == 0.0) throw DirectionUndefinedError("momentum direction undefined at rest");
  return {p_[0] / magnitude_, p_[1] / magnitude_, p_[2] / magnitude_};
}

FourMomentum make_momentum(double px, double py, double pz, double m) {
  require_mass(m);
  FourMomentum p;
  p.p_ = {px, py, pz};
  p.m_ = m;
  p.magnitude_ = std::sqrt(px * px + py * py + pz * pz);
  p.e_ = std::sqrt(p.magnitude_ * p.magnitude_ + m * m);
  if (p.magnitude_ > 0.0) {
    p.angles_.theta = std::atan2(std::hypot(px, py), pz);
    double phi = std::atan2(py, px);
    if (phi < 0.0) phi += 2.0 * std::numbers::pi;
    p.angles_.phi = phi;
  }
  return p;
}

FourMomentum momentum_from_angles(double magnitude, const AngularParams& a, double m) {
  require_mass(m);
  if (magnitude < 0.0) throw DomainError("momentum magnitude must be non-negative");
  FourMomentum p;
  const double st = std::sin(a.theta);
  p.p_ = {magnitude * st * std::cos(a.phi), magnitude * st * std::sin(a.phi), magnitude * std::cos(a.theta)};
  p.m_ = m;
  p.magnitude_ = magnitude;
  p.e_ = std::sqrt(magnitude * magnitude + m * m);
  p.angles_ = a;
  return p;
}

FourMomentum parity_reflect(const FourMomentum& p) {
  FourMomentum out = p;
  out.p_ = {-p.p_[0], -p.p_[1], -p.p_[2]};
  out.angles_ = {std::numbers::pi - p.angles_.theta, std::numbers::pi + p.angles_.phi};
  return out;
}

CMatrix boost_half(const FourMomentum& p, Side side) {
  const double sign = side == Side::Right ? 1.0 : -1.0;
  const double em = p.E() + p.m();
  CMatrix out = CMatrix::identity(2) * Complex(em);
  out += sign * sigma_dot(p.three());
  return out * Complex(1.0 / std::sqrt(2.0 * p.m() * em));
}

const CMatrix& spin_one_generator(int k) {
  static const std::array<CMatrix, 3> table = [] {
    const double r = std::numbers::sqrt2 / 2.0;
    return std::array<CMatrix, 3>{
        CMatrix(3, 3, {0.0, r, 0.0, r, 0.0, r, 0.0, r, 0.0}),
        CMatrix(3, 3, {0.0, -kI * r, 0.0, kI * r, 0.0, -kI * r, 0.0, kI * r, 0.0}),
        CMatrix::diagonal({1.0, 0.0, -1.0}),
    };
  }();
  if (k < 1 || k > 3) throw DimensionError("spin_one_generator: index out of range");
  return table[static_cast<std::size_t>(k - 1)];
}

CMatrix spin_one_dot(const std::array<double, 3>& n) {
  CMatrix out(3, 3);
  for (int k = 0; k < 3; ++k) out += n[static_cast<std::size_t>(k)] * spin_one_generator(k + 1);
  return out;
}

CMatrix expm_spin_one(const CMatrix& g, Complex t) {
  if (g.rows() != 3 || g.cols() != 3) throw DimensionError("expm_spin_one: expected 3x3 generator");
  return CMatrix::identity(3) + std::sinh(t) * g + (std::cosh(t) - 1.0) * (g * g);
}

CMatrix boost_one(const FourMomentum& p, Side side) {
  if (p.magnitude() == 0.0) return CMatrix::identity(3);
  const double sign = side == Side::Right ? 1.0 : -1.0;
  const CMatrix g = spin_one_dot(p.direction());
  // sinh(eta) = |p|/m and cosh(eta) - 1 = |p|^2 / (m (E + m)), written to avoid cancellation.
  const double sh = p.magnitude() / p.m();
  const double chm1 = p.magnitude() * p.magnitude() / (p.m() * (p.E() + p.m()));
  return CMatrix::identity(3) + Complex(sign * sh) * g + Complex(chm1) * (g * g);
}

}  // namespace majorana
