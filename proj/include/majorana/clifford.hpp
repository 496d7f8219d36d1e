#pragma once

#include <array>

#include "majorana/matrix.hpp"

// Weyl basis with the right-handed block on top:
//   gamma^0 = [[0, I], [I, 0]], gamma^i = [[0, -sigma_i], [sigma_i, 0]],
//   gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3 = diag(I, -I).

namespace majorana {

/// sigma_1..sigma_3 for k = 1..3; k = 0 gives I2.
const CMatrix& pauli(int k);
/// sigma . n for a real 3-vector n.
CMatrix sigma_dot(const std::array<double, 3>& n);

/// gamma^mu for mu = 0..3.
const CMatrix& gamma(int mu);
const CMatrix& gamma5();

/// alpha_i = gamma^0 gamma^i = diag(sigma_i, -sigma_i) in this basis.
CMatrix alpha_dot(const std::array<double, 3>& n);

/// Theta = -i sigma_2, the spin-1/2 Wigner matrix.
const CMatrix& wigner_theta_half();

}  // namespace majorana
