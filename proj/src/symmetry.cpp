#include "majorana/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "majorana/clifford.hpp"
#include "majorana/errors.hpp"
#include "majorana/sampling.hpp"
#include "majorana/tolerances.hpp"

namespace majorana {

SymmetryOperator::SymmetryOperator(CMatrix matrix, bool antilinear, bool reflects_momentum, Complex phase)
    : matrix_(std::move(matrix)), antilinear_(antilinear), reflects_(reflects_momentum), phase_(phase) {
  if (!matrix_.square()) throw DimensionError("SymmetryOperator: matrix must be square");
  if (std::abs(std::abs(phase_) - 1.0) > tol::kUnitModulus)
    throw DomainError("SymmetryOperator: phase must have unit modulus");
}

CVector SymmetryOperator::act(const CVector& v) const {
  return phase_ * (matrix_ * (antilinear_ ? conj(v) : v));
}

SymmetryOperator compose(const SymmetryOperator& a, const SymmetryOperator& b) {
  const CMatrix inner_matrix = a.antilinear() ? conj(b.matrix()) : b.matrix();
  const Complex inner_phase = a.antilinear() ? std::conj(b.phase()) : b.phase();
  return {a.matrix() * inner_matrix, a.antilinear() != b.antilinear(),
          a.reflects_momentum() != b.reflects_momentum(), a.phase() * inner_phase};
}

SpinorField apply(const SymmetryOperator& op, SpinorField field) {
  return [op, field = std::move(field)](const FourMomentum& p) {
    return op.act(op.reflects_momentum() ? field(parity_reflect(p)) : field(p));
  };
}

SymmetryOperator charge_conjugation(const PhaseConfig& cfg) {
  return {-std::polar(1.0, cfg.theta_c) * gamma(2), true, false};
}

SymmetryOperator parity_operator(Complex eta) { return {gamma(0), false, true, eta}; }

SymmetryOperator chirality() { return {gamma5(), false, false}; }

SymmetryOperator helicity_operator(const FourMomentum& p) {
  const CMatrix s = sigma_dot(p.direction());
  return {0.5 * block_diag(s, s), false, false};
}

SymmetryOperator chiral_helicity_operator(const FourMomentum& p) {
  return {-1.0 * (gamma5() * helicity_operator(p).matrix()), false, false};
}

CMatrix u1(const FourMomentum& p) {
  const double size = p.magnitude();
  if (size == 0.0) throw DirectionUndefinedError("u1: momentum direction undefined at rest");
  const double plus = size + p.pz();
  if (plus <= tol::kMinusZ * size) throw CoordinateSingularityError("u1: momentum along -z");
  const CMatrix u(2, 2, {1.0, p.p_l() / plus, -p.p_r() / plus, 1.0});
  const CMatrix normalized = u * Complex(std::sqrt(plus / (2.0 * size)));
  return block_diag(normalized, normalized);
}

CMatrix u2() {
  return CMatrix(4, 4, {1, 0, 0, 0,  //
                        0, 0, 0, 1,  //
                        0, 0, 1, 0,  //
                        0, 1, 0, 0});
}

CMatrix u3() {
  return CMatrix(4, 4, {1, 0, 0, 0,  //
                        0, 0, 1, 0,  //
                        0, 1, 0, 0,  //
                        0, 0, 0, 1});
}

CMatrix xi_matrix(const FourMomentum& p) {
  if (p.magnitude() == 0.0) throw DirectionUndefinedError("xi_matrix: momentum direction undefined at rest");
  const CMatrix right = boost_half(p, Side::Right);
  const CMatrix left = boost_half(p, Side::Left);
  // The boost pair alone leaves a two-dimensional family; fixing the rest-frame axis selects Xi.
  const std::array<IntertwinerPair, 3> pairs = {
      IntertwinerPair{right, conj(right)},
      IntertwinerPair{left, conj(left)},
      IntertwinerPair{pauli(3), pauli(3)},
  };
  return solve_intertwiner(pairs);
}

LambdaBasisTransforms lambda_basis_transforms(const FourMomentum& p, const PhaseConfig& cfg) {
  const CMatrix xi = xi_matrix(p) * Complex(std::numbers::sqrt2);
  const CVector ls = lambda_helicity(p, Kind::S, Index::Up, cfg).components();
  const CVector la_conj = conj(lambda_helicity(p, Kind::A, Index::Up, cfg).components());
  const CVector image = block_diag(xi, xi) * ls;
  const Complex overlap = inner(image, la_conj);
  const Complex alignment = overlap / std::abs(overlap);

  const CMatrix x = alignment * xi;
  const CMatrix z = CMatrix::zero(2, 2);
  return {{block_diag(x, x), block_diag(kI * x, -kI * x), block(z, kI * x, kI * x, z), block(z, x, -x, z)},
          alignment};
}

CMatrix chiral_gauge_transform(double alpha, Family family) {
  const double sign = family == Family::Rho ? 1.0 : -1.0;
  return std::cos(alpha) * CMatrix::identity(4) + Complex(0.0, sign * std::sin(alpha)) * gamma5();
}

CMatrix su2_phase_transform(double c0, const std::array<double, 3>& c) {
  const double n2 = c0 * c0 + c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
  if (std::abs(n2 - 1.0) > tol::kIdentity) throw DomainError("su2_phase_transform: c0^2 + |c|^2 must be 1");
  return c0 * CMatrix::identity(2) + kI * sigma_dot(c);
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Commute: return "commute";
    case Relation::Anticommute: return "anticommute";
    case Relation::Neither: return "neither";
  }
  return "?";
}

std::string_view to_string(CpFamily f) { return f == CpFamily::Dirac ? "dirac" : "elko"; }

namespace {

std::vector<SpinorField> family_fields(Basis basis, CpFamily family, const PhaseConfig& cfg) {
  std::vector<SpinorField> out;
  for (Index idx : {Index::Up, Index::Down}) {
    if (family == CpFamily::Dirac) {
      for (Kind k : {Kind::Particle, Kind::Antiparticle})
        out.emplace_back([=](const FourMomentum& p) { return dirac_spinor(p, k, idx, basis, cfg).components(); });
    } else {
      for (Family f : {Family::Lambda, Family::Rho})
        for (Kind k : {Kind::S, Kind::A})
          out.emplace_back(
              [=](const FourMomentum& p) { return elko_spinor(p, f, k, idx, basis, cfg).components(); });
    }
  }
  return out;
}

}  // namespace

ActionClassification classify_cp_action(Basis basis, CpFamily family, std::uint64_t seed, std::size_t momenta,
                                        const PhaseConfig& cfg) {
  MomentumSampler sampler(seed);
  std::vector<FourMomentum> ps;
  ps.reserve(momenta);
  for (std::size_t i = 0; i < momenta; ++i) ps.push_back(sampler.next());
  const auto fields = family_fields(basis, family, cfg);

  // P^2 with the bare parity matrix measures R^2 on the family.
  const auto bare = parity_operator();
  Complex square{};
  {
    const auto& p = ps.front();
    const CVector psi = fields.front()(p);
    const CVector twice = apply(bare, apply(bare, fields.front()))(p);
    square = inner(psi, twice) / inner(psi, psi);
  }
  Complex eta = std::sqrt(1.0 / square);
  // Both roots give P^2 = 1; keep the one in the upper half plane.
  if (eta.imag() < -tol::kIdentity || (std::abs(eta.imag()) <= tol::kIdentity && eta.real() < 0.0)) eta = -eta;
  const Complex eta_unit = eta / std::abs(eta);

  const auto c_op = charge_conjugation(cfg);
  const auto p_op = parity_operator(eta_unit);
  double commute = 0.0;
  double anticommute = 0.0;
  for (const auto& field : fields) {
    const SpinorField cp = apply(c_op, apply(p_op, field));
    const SpinorField pc = apply(p_op, apply(c_op, field));
    for (const auto& p : ps) {
      const double scale = norm(field(p));
      const CVector a = cp(p);
      const CVector b = pc(p);
      commute = std::max(commute, norm(a - b) / scale);
      anticommute = std::max(anticommute, norm(a + b) / scale);
    }
  }

  ActionClassification out;
  out.parity_phase = eta_unit;
  out.samples = ps.size() * fields.size();
  if (commute <= tol::kIdentity && anticommute > tol::kIdentity) {
    out.relation = Relation::Commute;
    out.max_residual = commute;
    out.opposite_residual = anticommute;
  } else if (anticommute <= tol::kIdentity && commute > tol::kIdentity) {
    out.relation = Relation::Anticommute;
    out.max_residual = anticommute;
    out.opposite_residual = commute;
  } else {
    out.relation = Relation::Neither;
    out.max_residual = std::min(commute, anticommute);
    out.opposite_residual = std::max(commute, anticommute);
  }
  return out;
}

}  // namespace majorana
