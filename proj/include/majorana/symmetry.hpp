#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string_view>

#include "majorana/kinematics.hpp"
#include "majorana/matrix.hpp"
#include "majorana/spinors.hpp"

namespace majorana {

/// Momentum-space spinor field: p -> psi(p).
using SpinorField = std::function<CVector(const FourMomentum&)>;

/*!
 * psi(p) -> phase * matrix * K^antilinear psi(R^reflects p).
 * Composition follows the flag algebra (antilinear and reflection flags
 * xor). Because helicity-basis fields are double valued, R^2 is not the
 * identity on them: to see that, apply operators one after another
 * instead of composing them first.
 */
class SymmetryOperator {
 public:
  SymmetryOperator(CMatrix matrix, bool antilinear, bool reflects_momentum, Complex phase = 1.0);

  const CMatrix& matrix() const noexcept { return matrix_; }
  bool antilinear() const noexcept { return antilinear_; }
  bool reflects_momentum() const noexcept { return reflects_; }
  Complex phase() const noexcept { return phase_; }

  /// Acts on components only; the reflection flag is ignored.
  CVector act(const CVector& v) const;

 private:
  CMatrix matrix_;
  bool antilinear_;
  bool reflects_;
  Complex phase_;
};

/// a o b: b acts first.
SymmetryOperator compose(const SymmetryOperator& a, const SymmetryOperator& b);
SpinorField apply(const SymmetryOperator& op, SpinorField field);

/// C = -e^{i theta_c} gamma^2 K
SymmetryOperator charge_conjugation(const PhaseConfig& cfg = {});
/// P = eta gamma^0 R
SymmetryOperator parity_operator(Complex eta = 1.0);
SymmetryOperator chirality();
/// (1/2) diag(sigma.n, sigma.n); throws DirectionUndefinedError at rest.
SymmetryOperator helicity_operator(const FourMomentum& p);
/// -gamma^5 h
SymmetryOperator chiral_helicity_operator(const FourMomentum& p);

/// diag(U, U) with U = [[1, p_l/(p+p3)], [-p_r/(p+p3), 1]] sqrt((p+p3)/(2p)).
CMatrix u1(const FourMomentum& p);
CMatrix u2();
CMatrix u3();

/// Unit-Frobenius Xi with Xi L Xi^-1 = L^* for both boosts.
CMatrix xi_matrix(const FourMomentum& p);

struct LambdaBasisTransforms {
  /// I: diag(Xi, Xi), II: diag(iXi, -iXi), III: [[0, iXi], [iXi, 0]], IV: [[0, Xi], [-Xi, 0]]
  std::array<CMatrix, 4> matrices;
  /// Xi used above equals alignment * sqrt(2) * xi_matrix(p).
  Complex alignment;
};

/// Xi rephased so that transform I maps the helicity-basis lambda^S onto lambda^A^* exactly.
LambdaBasisTransforms lambda_basis_transforms(const FourMomentum& p, const PhaseConfig& cfg = {});

/// cos(a) - i sin(a) gamma^5 for lambda, cos(a) + i sin(a) gamma^5 for rho.
CMatrix chiral_gauge_transform(double alpha, Family family);

/// c0 + i tau.c; throws DomainError unless c0^2 + |c|^2 = 1.
CMatrix su2_phase_transform(double c0, const std::array<double, 3>& c);

enum class Relation { Commute, Anticommute, Neither };
enum class CpFamily { Dirac, Elko };

std::string_view to_string(Relation r);
std::string_view to_string(CpFamily f);

struct ActionClassification {
  Relation relation = Relation::Neither;
  double max_residual = 0.0;       ///< residual of the reported relation
  double opposite_residual = 0.0;  ///< residual of the other relation
  Complex parity_phase = 1.0;      ///< eta making P^2 = +1 on the family
  std::size_t samples = 0;
};

/*!
 * Applies C(P psi) and P(C psi) to every family member at `momenta`
 * sampled momenta. P carries the phase that makes P^2 = +1 on the family.
 */
ActionClassification classify_cp_action(Basis basis, CpFamily family, std::uint64_t seed = 1,
                                         std::size_t momenta = 100, const PhaseConfig& cfg = {});

}  // namespace majorana
