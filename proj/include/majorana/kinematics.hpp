#pragma once

#include <array>

#include "majorana/matrix.hpp"

namespace majorana {

/// Polar and azimuthal angles of a momentum direction.
struct AngularParams {
  double theta = 0.0;
  double phi = 0.0;
};

/*!
 * On-shell four-momentum. Besides the Cartesian components it carries the
 * angular chart it was built from: helicity-basis objects are double valued
 * in phi, so parity_reflect tracks phi -> pi + phi without wrapping.
 */
class FourMomentum {
 public:
  double E() const noexcept { return e_; }
  double px() const noexcept { return p_[0]; }
  double py() const noexcept { return p_[1]; }
  double pz() const noexcept { return p_[2]; }
  double m() const noexcept { return m_; }
  const std::array<double, 3>& three() const noexcept { return p_; }

  Complex p_r() const noexcept { return {p_[0], p_[1]}; }
  Complex p_l() const noexcept { return {p_[0], -p_[1]}; }
  double p_plus() const noexcept { return e_ + p_[2]; }
  double p_minus() const noexcept { return e_ - p_[2]; }
  double magnitude() const noexcept { return magnitude_; }
  /// p / |p|; throws DirectionUndefinedError at rest.
  std::array<double, 3> direction() const;
  const AngularParams& angles() const noexcept { return angles_; }

  /// Physical equality: energy, momentum and mass (the chart is ignored).
  bool operator==(const FourMomentum& o) const noexcept {
    return e_ == o.e_ && p_ == o.p_ && m_ == o.m_;
  }

 private:
  friend FourMomentum make_momentum(double, double, double, double);
  friend FourMomentum momentum_from_angles(double, const AngularParams&, double);
  friend FourMomentum parity_reflect(const FourMomentum&);

  double e_ = 0.0;
  std::array<double, 3> p_{};
  double m_ = 0.0;
  double magnitude_ = 0.0;
  AngularParams angles_;
};

/// Throws DomainError unless m > 0. The chart is theta in [0, pi], phi in [0, 2pi).
FourMomentum make_momentum(double px, double py, double pz, double m);
/// Momentum of size |p| along (theta, phi); the angles are kept verbatim as the chart.
FourMomentum momentum_from_angles(double magnitude, const AngularParams& a, double m);
/// (E, -p) with chart (pi - theta, pi + phi).
FourMomentum parity_reflect(const FourMomentum& p);

enum class Side { Right, Left };

/// Lambda_{R,L} = (E + m +- sigma.p) / sqrt(2m(E + m)).
CMatrix boost_half(const FourMomentum& p, Side side);

/// Spin-1 generators in the spherical basis (J_z = diag(1, 0, -1)); k = 1..3.
const CMatrix& spin_one_generator(int k);
CMatrix spin_one_dot(const std::array<double, 3>& n);
/// exp(t G) = I + sinh(t) G + (cosh(t) - 1) G^2, valid whenever G^3 = G.
CMatrix expm_spin_one(const CMatrix& g, Complex t);
/// exp(+-(J.n) eta) with cosh(eta) = E/m; + for the right block.
CMatrix boost_one(const FourMomentum& p, Side side);

}  // namespace majorana
