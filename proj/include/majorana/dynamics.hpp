#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "majorana/kinematics.hpp"
#include "majorana/matrix.hpp"
#include "majorana/spinors.hpp"

namespace majorana {

/// gamma^mu p_mu = gamma^0 E - gamma.p
CMatrix dirac_matrix(const FourMomentum& p);
/// Same for an arbitrary (possibly off-shell or spacelike) four-vector.
CMatrix dirac_matrix(double energy, const std::array<double, 3>& p);

/*!
 * Plane-wave sign convention for the coupled lambda/rho system. With
 * D = gamma^mu p_mu the four residuals are
 *   |s D lambda^S - m rho^A|,  |s D rho^A - m lambda^S|,
 *   |-s D lambda^A + m rho^S|, |-s D rho^S + m lambda^A|,
 * each divided by the norm of the spinor in its mass term.
 */
struct FrequencyConvention {
  int sign = 1;
};

/// Residuals for one index (lambda and rho share the index).
std::array<double, 4> coupled_system_residual(const FourMomentum& p, FrequencyConvention conv, Index index);
/// Entrywise maximum over both indices.
std::array<double, 4> coupled_system_residual(const FourMomentum& p, FrequencyConvention conv);

struct ConventionTrial {
  int sign = 0;
  double max_residual = 0.0;  ///< largest residual over all momenta, indices, equations
  double min_over_mass = 0.0; ///< smallest residual / m
};

struct ConventionDiscovery {
  std::array<ConventionTrial, 2> trials;  ///< sign +1 then -1
  std::vector<int> working;               ///< signs with max_residual within tolerance
};

ConventionDiscovery discover_convention(const std::vector<FourMomentum>& momenta);

struct MarkovPair {
  CVector chi;
  CVector eta;
};

/// chi = (psi1 + psi2)/sqrt2, eta = (psi1 - psi2)/sqrt2.
MarkovPair markov_superposition(const CVector& psi1, const CVector& psi2);
/// psi1 = u_up, psi2 = v_up in the spinorial basis.
MarkovPair markov_superposition(const FourMomentum& p);
/// max(|D chi - m eta|, |D eta - m chi|) / max(|chi|, |eta|)
double markov_residual(const FourMomentum& p, const MarkovPair& pair);
/// Least-squares residual of v in the span of {u_up, u_down, v_up, v_down}, relative to |v|.
double dirac_span_residual(const FourMomentum& p, const CVector& v);

/// gamma^mu p_mu - m1 - m2 gamma^5 for a raw four-vector.
CMatrix sen_gupta_operator(double energy, const std::array<double, 3>& p, double m1, double m2);
double sen_gupta_residual(double energy, const std::array<double, 3>& p, double m1, double m2, const CVector& psi);
/// Orthonormal null-space basis; a 0x0 matrix when p^2 != m1^2 - m2^2.
CMatrix sen_gupta_null_space(double energy, const std::array<double, 3>& p, double m1, double m2);

/*!
 * gamma^mu p_mu - m1 - m2 gamma^5 = S (gamma^mu p_mu - M) S with
 * S = exp(beta gamma^5 / 2), tanh(beta) = m2/m1, M = sqrt(m1^2 - m2^2),
 * so S maps its solutions to Dirac solutions of mass M. Needs |m2| < m1.
 */
struct SenGuptaEquivalence {
  CMatrix s;
  double mass = 0.0;
};
SenGuptaEquivalence sen_gupta_equivalence(double m1, double m2);

/*!
 * Smallest distance of any null-space vector from being an eigenvector of
 * gamma^0 (gamma.n): the least singular value of (1 - N N^dagger) A N.
 */
double sen_gupta_massless_witness(double energy, const std::array<double, 3>& p, double m1, double m2);

/// diag(gamma^5, -gamma^5)
CMatrix lambda5();
/// [[s D, -m], [-m, s D]] on (lambda^S, rho^A) for sector +1, [[-s D, m], [m, -s D]] on (lambda^A, rho^S) for -1.
CMatrix eight_component_operator(const FourMomentum& p, FrequencyConvention conv, int sector);
/// Largest relative residual over both sectors and both indices after exp(-i alpha Lambda^5).
double eight_component_residual(const FourMomentum& p, FrequencyConvention conv, double alpha = 0.0);

struct MassTermFields {
  CVector lambda_s, rho_a, lambda_a, rho_s;
};
MassTermFields mass_term_fields(const FourMomentum& p, Index index, Basis basis = Basis::Spinorial);
/// -m (lS~rA + rA~lS - lA~rS - rS~lA), x~y = x^dagger gamma^0 y
Complex lagrangian_mass_term(const MassTermFields& f, double m);
/// Chiral gauge transform of every field (lambda with -alpha gamma^5, rho with +alpha).
MassTermFields gauge_transformed(const MassTermFields& f, double alpha);
/// Doublets (lS, lA) and (rA, -rS) both transformed by the same SU(2) matrix.
MassTermFields su2_transformed(const MassTermFields& f, const CMatrix& u);

}  // namespace majorana
