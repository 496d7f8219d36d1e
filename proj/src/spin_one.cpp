#include "majorana/spin_one.hpp"

#include <cmath>
#include <numbers>

#include "majorana/errors.hpp"
#include "majorana/parallel.hpp"

namespace majorana {

const CMatrix& wigner_theta_one() {
  static const CMatrix theta(3, 3, {0, 0, 1, 0, -1, 0, 1, 0, 0});
  return theta;
}

CVector SpinOneOperator::act(const CVector& v) const { return phase * (matrix * (antilinear ? conj(v) : v)); }

SpinOneOperator compose(const SpinOneOperator& a, const SpinOneOperator& b) {
  return {a.matrix * (a.antilinear ? conj(b.matrix) : b.matrix), a.antilinear != b.antilinear,
          a.phase * (a.antilinear ? std::conj(b.phase) : b.phase)};
}

SpinOneOperator sc_one(double vartheta) {
  const CMatrix& t = wigner_theta_one();
  return {block(CMatrix::zero(3, 3), t, -t, CMatrix::zero(3, 3)), true, std::polar(1.0, vartheta)};
}

SpinOneOperator ss_one(double vartheta) {
  const CMatrix one = CMatrix::identity(3);
  return {block(CMatrix::zero(3, 3), one, one, CMatrix::zero(3, 3)), false, std::polar(1.0, vartheta)};
}

const CMatrix& gamma5_one() {
  static const CMatrix g = block_diag(CMatrix::identity(3), -CMatrix::identity(3));
  return g;
}

SpinOneOperator gamma5_sc_one(double vartheta) { return compose({gamma5_one(), false, 1.0}, sc_one(vartheta)); }

CVector spin_one_triplet(const AngularParams& a, int h, const PhaseConfig& cfg) {
  if (h < -1 || h > 1) throw DomainError("spin_one_triplet: h must be 1, 0 or -1");
  CVector basis(3);
  basis[static_cast<std::size_t>(1 - h)] = 1.0;
  const CMatrix rz = expm_spin_one(spin_one_generator(3), Complex(0.0, -a.phi));
  const CMatrix ry = expm_spin_one(spin_one_generator(2), Complex(0.0, -a.theta));
  const double phase = h == 1 ? cfg.theta1 : (h == -1 ? cfg.theta2 : 0.0);
  return std::polar(1.0, phase) * (rz * (ry * basis));
}

CVector spin1_lambda(const FourMomentum& p, Complex zeta, const AngularParams& a, int h, const PhaseConfig& cfg) {
  const CVector phi = spin_one_triplet(a, h, cfg);
  const CVector right = zeta * (wigner_theta_one() * conj(phi));
  return concat(boost_one(p, Side::Right) * right, boost_one(p, Side::Left) * phi);
}

CVector spin1_rho(const FourMomentum& p, Complex zeta, const AngularParams& a, int h, const PhaseConfig& cfg) {
  const CVector phi = spin_one_triplet(a, h, cfg);
  const CVector left = zeta * (wigner_theta_one() * conj(phi));
  return concat(boost_one(p, Side::Right) * phi, boost_one(p, Side::Left) * left);
}

std::string_view to_string(ScanOperator op) { return op == ScanOperator::Sc ? "Sc" : "Gamma5Sc"; }

namespace {

constexpr std::size_t kScanSamples = 720;
constexpr int kGoldenIterations = 80;

template <class F>
ScanMinimum minimize_on_circle(F&& residual) {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(kScanSamples);
  const auto values = sweep_parallel(kScanSamples, [&](std::size_t k) { return residual(step * static_cast<double>(k)); });
  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k] < values[best]) best = k;

  double lo = step * (static_cast<double>(best) - 1.0);
  double hi = step * (static_cast<double>(best) + 1.0);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - g * (hi - lo);
  double x2 = lo + g * (hi - lo);
  double f1 = residual(x1);
  double f2 = residual(x2);
  for (int it = 0; it < kGoldenIterations; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = residual(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = residual(x2);
    }
  }
  double t = step * static_cast<double>(best);
  double r = values[best];
  const double refined_t = f1 <= f2 ? x1 : x2;
  const double refined_r = std::min(f1, f2);
  if (refined_r < r) {
    t = refined_t;
    r = refined_r;
  }
  return {r, std::polar(1.0, t)};
}

}  // namespace

ConjugacyScan spin1_conjugacy_scan(const FourMomentum& p, ScanOperator op, const AngularParams& a, int h,
                                   double vartheta, const PhaseConfig& cfg) {
  const SpinOneOperator o = op == ScanOperator::Sc ? sc_one(vartheta) : gamma5_sc_one(vartheta);
  // psi(zeta) = zeta a + b, so O psi is affine in zeta (or in zeta^*) as well
  struct Affine {
    CVector a, b, oa, ob;
  };
  auto affine = [&](bool lambda) {
    const CVector b = lambda ? spin1_lambda(p, 0.0, a, h, cfg) : spin1_rho(p, 0.0, a, h, cfg);
    const CVector full = lambda ? spin1_lambda(p, 1.0, a, h, cfg) : spin1_rho(p, 1.0, a, h, cfg);
    const CVector da = full - b;
    return Affine{da, b, o.act(da), o.act(b)};
  };
  const Affine lam = affine(true);
  const Affine rho = affine(false);
  auto make = [&](const Affine& f, double sign) {
    return [&f, &o, sign](double t) {
      const Complex zeta = std::polar(1.0, t);
      const CVector psi = zeta * f.a + f.b;
      const CVector image = (o.antilinear ? std::conj(zeta) : zeta) * f.oa + f.ob;
      return norm(image - sign * psi) / norm(psi);
    };
  };
  return {minimize_on_circle(make(lam, 1.0)), minimize_on_circle(make(lam, -1.0)),
          minimize_on_circle(make(rho, 1.0)), minimize_on_circle(make(rho, -1.0))};
}

}  // namespace majorana
