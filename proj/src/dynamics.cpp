#include "majorana/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "majorana/clifford.hpp"
#include "majorana/errors.hpp"
#include "majorana/symmetry.hpp"
#include "majorana/tolerances.hpp"

namespace majorana {

CMatrix dirac_matrix(double energy, const std::array<double, 3>& p) {
  CMatrix out = energy * gamma(0);
  for (int k = 0; k < 3; ++k) out -= p[static_cast<std::size_t>(k)] * gamma(k + 1);
  return out;
}

CMatrix dirac_matrix(const FourMomentum& p) { return dirac_matrix(p.E(), p.three()); }

std::array<double, 4> coupled_system_residual(const FourMomentum& p, FrequencyConvention conv, Index index) {
  const CMatrix d = dirac_matrix(p);
  const double s = conv.sign;
  const double m = p.m();
  const CVector ls = lambda_spinor(p, Kind::S, index).components();
  const CVector la = lambda_spinor(p, Kind::A, index).components();
  const CVector rs = rho_spinor(p, Kind::S, index).components();
  const CVector ra = rho_spinor(p, Kind::A, index).components();
  return {
      norm(s * (d * ls) - m * ra) / norm(ra),
      norm(s * (d * ra) - m * ls) / norm(ls),
      norm(-s * (d * la) + m * rs) / norm(rs),
      norm(-s * (d * rs) + m * la) / norm(la),
  };
}

std::array<double, 4> coupled_system_residual(const FourMomentum& p, FrequencyConvention conv) {
  auto up = coupled_system_residual(p, conv, Index::Up);
  const auto down = coupled_system_residual(p, conv, Index::Down);
  for (std::size_t k = 0; k < 4; ++k) up[k] = std::max(up[k], down[k]);
  return up;
}

ConventionDiscovery discover_convention(const std::vector<FourMomentum>& momenta) {
  ConventionDiscovery out;
  std::size_t slot = 0;
  for (int sign : {1, -1}) {
    ConventionTrial trial{sign, 0.0, std::numeric_limits<double>::infinity()};
    for (const auto& p : momenta) {
      for (Index idx : {Index::Up, Index::Down}) {
        for (double r : coupled_system_residual(p, {sign}, idx)) {
          trial.max_residual = std::max(trial.max_residual, r);
          trial.min_over_mass = std::min(trial.min_over_mass, r / p.m());
        }
      }
    }
    if (trial.max_residual <= tol::kIdentity) out.working.push_back(sign);
    out.trials[slot++] = trial;
  }
  return out;
}

MarkovPair markov_superposition(const CVector& psi1, const CVector& psi2) {
  const Complex r = 1.0 / std::sqrt(2.0);
  return {r * (psi1 + psi2), r * (psi1 - psi2)};
}

MarkovPair markov_superposition(const FourMomentum& p) {
  return markov_superposition(dirac_spinor(p, Kind::Particle, Index::Up, Basis::Spinorial).components(),
                              dirac_spinor(p, Kind::Antiparticle, Index::Up, Basis::Spinorial).components());
}

double markov_residual(const FourMomentum& p, const MarkovPair& pair) {
  const CMatrix d = dirac_matrix(p);
  const double scale = std::max(norm(pair.chi), norm(pair.eta));
  const double a = norm(d * pair.chi - p.m() * pair.eta);
  const double b = norm(d * pair.eta - p.m() * pair.chi);
  return std::max(a, b) / scale;
}

double dirac_span_residual(const FourMomentum& p, const CVector& v) {
  CMatrix basis(4, 4);
  std::size_t col = 0;
  for (Kind k : {Kind::Particle, Kind::Antiparticle}) {
    for (Index idx : {Index::Up, Index::Down}) {
      const CVector b = dirac_spinor(p, k, idx, Basis::Spinorial).components();
      for (std::size_t r = 0; r < 4; ++r) basis(r, col) = b[r];
      ++col;
    }
  }
  // Normal equations; the four spinors are linearly independent for m > 0.
  const CMatrix bh = adjoint(basis);
  const CVector coeffs = inverse(bh * basis) * (bh * v);
  return norm(basis * coeffs - v) / norm(v);
}

CMatrix sen_gupta_operator(double energy, const std::array<double, 3>& p, double m1, double m2) {
  return dirac_matrix(energy, p) - m1 * CMatrix::identity(4) - m2 * gamma5();
}

double sen_gupta_residual(double energy, const std::array<double, 3>& p, double m1, double m2, const CVector& psi) {
  return norm(sen_gupta_operator(energy, p, m1, m2) * psi);
}

CMatrix sen_gupta_null_space(double energy, const std::array<double, 3>& p, double m1, double m2) {
  return null_space(sen_gupta_operator(energy, p, m1, m2), tol::kNullSpace);
}

SenGuptaEquivalence sen_gupta_equivalence(double m1, double m2) {
  if (!(m1 > 0.0) || !(std::abs(m2) < m1)) throw DomainError("sen_gupta_equivalence: needs |m2| < m1");
  const double beta = std::atanh(m2 / m1);
  const CMatrix s = std::cosh(beta / 2.0) * CMatrix::identity(4) + std::sinh(beta / 2.0) * gamma5();
  return {s, std::sqrt(m1 * m1 - m2 * m2)};
}

double sen_gupta_massless_witness(double energy, const std::array<double, 3>& p, double m1, double m2) {
  const CMatrix n = sen_gupta_null_space(energy, p, m1, m2);
  if (n.rows() == 0) throw DomainError("sen_gupta_massless_witness: empty null space (off shell)");
  const double size = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  if (size == 0.0) throw DirectionUndefinedError("sen_gupta_massless_witness: momentum direction undefined");
  const CMatrix a = alpha_dot({p[0] / size, p[1] / size, p[2] / size});
  const CMatrix projector = CMatrix::identity(4) - n * adjoint(n);
  const auto sv = singular_values(projector * a * n);
  return sv.back();
}

CMatrix lambda5() { return block_diag(gamma5(), -gamma5()); }

CMatrix eight_component_operator(const FourMomentum& p, FrequencyConvention conv, int sector) {
  const double s = conv.sign * (sector >= 0 ? 1.0 : -1.0);
  const CMatrix kinetic = s * dirac_matrix(p);
  const CMatrix mass = (sector >= 0 ? -p.m() : p.m()) * CMatrix::identity(4);
  return block(kinetic, mass, mass, kinetic);
}

double eight_component_residual(const FourMomentum& p, FrequencyConvention conv, double alpha) {
  const CMatrix g_lambda = chiral_gauge_transform(alpha, Family::Lambda);
  const CMatrix g_rho = chiral_gauge_transform(alpha, Family::Rho);
  const CMatrix plus = eight_component_operator(p, conv, +1);
  const CMatrix minus = eight_component_operator(p, conv, -1);
  double worst = 0.0;
  for (Index idx : {Index::Up, Index::Down}) {
    const CVector first = concat(g_lambda * lambda_spinor(p, Kind::S, idx).components(),
                                 g_rho * rho_spinor(p, Kind::A, idx).components());
    const CVector second = concat(g_lambda * lambda_spinor(p, Kind::A, idx).components(),
                                  g_rho * rho_spinor(p, Kind::S, idx).components());
    worst = std::max(worst, norm(plus * first) / norm(first));
    worst = std::max(worst, norm(minus * second) / norm(second));
  }
  return worst;
}

MassTermFields mass_term_fields(const FourMomentum& p, Index index, Basis basis) {
  return {elko_spinor(p, Family::Lambda, Kind::S, index, basis).components(),
          elko_spinor(p, Family::Rho, Kind::A, index, basis).components(),
          elko_spinor(p, Family::Lambda, Kind::A, index, basis).components(),
          elko_spinor(p, Family::Rho, Kind::S, index, basis).components()};
}

Complex lagrangian_mass_term(const MassTermFields& f, double m) {
  return -m * (bar_product(f.lambda_s, f.rho_a) + bar_product(f.rho_a, f.lambda_s) -
               bar_product(f.lambda_a, f.rho_s) - bar_product(f.rho_s, f.lambda_a));
}

MassTermFields gauge_transformed(const MassTermFields& f, double alpha) {
  const CMatrix gl = chiral_gauge_transform(alpha, Family::Lambda);
  const CMatrix gr = chiral_gauge_transform(alpha, Family::Rho);
  return {gl * f.lambda_s, gr * f.rho_a, gl * f.lambda_a, gr * f.rho_s};
}

MassTermFields su2_transformed(const MassTermFields& f, const CMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) throw DimensionError("su2_transformed: expected 2x2 matrix");
  const CVector ls = u(0, 0) * f.lambda_s + u(0, 1) * f.lambda_a;
  const CVector la = u(1, 0) * f.lambda_s + u(1, 1) * f.lambda_a;
  const CVector neg_rs = -f.rho_s;
  const CVector ra = u(0, 0) * f.rho_a + u(0, 1) * neg_rs;
  const CVector rs = -(u(1, 0) * f.rho_a + u(1, 1) * neg_rs);
  return {ls, ra, la, rs};
}

}  // namespace majorana
