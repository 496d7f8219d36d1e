#pragma once

#include <string_view>

#include "majorana/kinematics.hpp"
#include "majorana/matrix.hpp"
#include "majorana/spinors.hpp"

namespace majorana {

/// Antidiagonal (1, -1, 1): Theta J Theta^-1 = -J^* in the spherical basis.
const CMatrix& wigner_theta_one();

/// 6x6 operator psi -> phase * matrix * K^antilinear psi.
struct SpinOneOperator {
  CMatrix matrix;
  bool antilinear = false;
  Complex phase = 1.0;

  CVector act(const CVector& v) const;
};

/// a o b (b first).
SpinOneOperator compose(const SpinOneOperator& a, const SpinOneOperator& b);

/// e^{i vartheta} [[0, Theta], [-Theta, 0]] K
SpinOneOperator sc_one(double vartheta = 0.0);
/// e^{i vartheta} [[0, 1], [1, 0]]
SpinOneOperator ss_one(double vartheta = 0.0);
/// diag(1_3, -1_3)
const CMatrix& gamma5_one();
/// Gamma^5 S^c
SpinOneOperator gamma5_sc_one(double vartheta = 0.0);

/// exp(-i phi J_z) exp(-i theta J_y) |1, h>, h in {1, 0, -1}; phase theta1 (h=1) or theta2 (h=-1).
CVector spin_one_triplet(const AngularParams& a, int h, const PhaseConfig& cfg = {});

/// Boosted (zeta Theta phi^*, phi) with phi the triplet state of helicity h along the chart.
CVector spin1_lambda(const FourMomentum& p, Complex zeta, const AngularParams& a, int h, const PhaseConfig& cfg = {});
/// Boosted (phi, zeta Theta phi^*).
CVector spin1_rho(const FourMomentum& p, Complex zeta, const AngularParams& a, int h, const PhaseConfig& cfg = {});

enum class ScanOperator { Sc, Gamma5Sc };
std::string_view to_string(ScanOperator op);

struct ScanMinimum {
  double residual = 0.0;  ///< min over zeta of |O psi -+ psi| / |psi|
  Complex zeta = 1.0;
};

struct ConjugacyScan {
  ScanMinimum lambda_self, lambda_anti, rho_self, rho_anti;
};

/*!
 * zeta = e^{i t} sampled at 720 points, the best sample refined by
 * golden-section search over its neighbouring interval. Ties keep the
 * smaller arg(zeta).
 */
ConjugacyScan spin1_conjugacy_scan(const FourMomentum& p, ScanOperator op, const AngularParams& a, int h,
                                   double vartheta = 0.0, const PhaseConfig& cfg = {});

}  // namespace majorana
