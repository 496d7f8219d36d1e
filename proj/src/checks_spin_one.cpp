#include <cmath>
#include <numbers>

#include "checks_common.hpp"
#include "majorana/kinematics.hpp"
#include "majorana/sampling.hpp"
#include "majorana/spin_one.hpp"
#include "majorana/tolerances.hpp"

namespace majorana::detail {

namespace {

constexpr int kHelicities[] = {1, 0, -1};

CVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  CVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Complex(g(rng), g(rng));
  return v;
}

AngularParams random_angles(std::mt19937_64& rng) {
  return {std::acos(uniform(rng, -1.0, 1.0)), uniform(rng, 0.0, 2.0 * std::numbers::pi)};
}

// Taylor series of exp(a), summed until the terms stop contributing.
CMatrix series_exp(const CMatrix& a) {
  CMatrix sum = CMatrix::identity(a.rows());
  CMatrix term = sum;
  for (int k = 1; k < 200; ++k) {
    term = term * a * Complex(1.0 / k);
    sum += term;
    if (frobenius_norm(term) < 1e-18 * frobenius_norm(sum)) break;
  }
  return sum;
}

// scan minima are located to about 1e-8, so constants keep six decimals
Complex rounded(Complex z) {
  return {std::round(z.real() * 1e6) / 1e6 + 0.0, std::round(z.imag() * 1e6) / 1e6 + 0.0};
}

double worst_minimum(const ConjugacyScan& s) {
  return std::max({s.lambda_self.residual, s.lambda_anti.residual, s.rho_self.residual, s.rho_anti.residual});
}

double best_minimum(const ConjugacyScan& s) {
  return std::min({s.lambda_self.residual, s.lambda_anti.residual, s.rho_self.residual, s.rho_anti.residual});
}

}  // namespace

void add_spin_one_checks(std::vector<CheckSpec>& out) {
  const std::string g = "spin-one";

  out.push_back({"spin-one.theta-property", "Theta J Theta^-1 = -J^* for the spin-1 generators", g, tol::kAlgebra,
                 Expectation::Vanish, [](const SuiteContext&, std::mt19937_64&) {
                   CheckOutcome o;
                   const CMatrix& t = wigner_theta_one();
                   for (int k = 1; k <= 3; ++k) {
                     const CMatrix& j = spin_one_generator(k);
                     o.residual = std::max(o.residual, max_abs_diff(t * j * inverse(t), -conj(j)));
                     ++o.sample_count;
                   }
                   return o;
                 }});

  out.push_back({"spin-one.theta-orthogonal", "Theta is real orthogonal and Theta Theta^* = +1 for spin 1", g,
                 tol::kAlgebra, Expectation::Vanish, [](const SuiteContext&, std::mt19937_64&) {
                   CheckOutcome o;
                   const CMatrix& t = wigner_theta_one();
                   o.residual = std::max(max_abs_diff(t * transpose(t), CMatrix::identity(3)),
                                         max_abs_diff(t * conj(t), CMatrix::identity(3)));
                   o.sample_count = 1;
                   return o;
                 }});

  out.push_back({"spin-one.c-squared-minus-one", "(S^c) squared is -1 for the spin-1 conjugation operator", g,
                 tol::kAlgebra, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64& rng) {
                   CheckOutcome o;
                   for (std::size_t n = 0; n < ctx.samples; ++n) {
                     const auto sc = sc_one(uniform(rng, 0.0, 2.0 * std::numbers::pi));
                     const CVector psi = random_vector(rng, 6);
                     o.residual = std::max(o.residual, norm(sc.act(sc.act(psi)) + psi) / norm(psi));
                     ++o.sample_count;
                   }
                   return o;
                 }});

  out.push_back({"spin-one.gamma5-sc-squared", "(Gamma^5 S^c) squared is +1", g, tol::kAlgebra, Expectation::Vanish,
                 [](const SuiteContext& ctx, std::mt19937_64& rng) {
                   CheckOutcome o;
                   for (std::size_t n = 0; n < ctx.samples; ++n) {
                     const auto op = gamma5_sc_one(uniform(rng, 0.0, 2.0 * std::numbers::pi));
                     const CVector psi = random_vector(rng, 6);
                     o.residual = std::max(o.residual, distance(op.act(op.act(psi)), psi) / norm(psi));
                     ++o.sample_count;
                   }
                   o.residual = std::max(o.residual, frobenius_norm(anticommutator(gamma5_one(), sc_one().matrix)));
                   return o;
                 }});

  out.push_back({"spin-one.ss-squared", "S^s squared is e^{2i theta} times the identity", g, tol::kAlgebra,
                 Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64& rng) {
                   CheckOutcome o;
                   for (std::size_t n = 0; n < ctx.samples; ++n) {
                     const double v = uniform(rng, 0.0, 2.0 * std::numbers::pi);
                     const auto ss = ss_one(v);
                     const CMatrix sq = (ss.phase * ss.matrix) * (ss.phase * ss.matrix);
                     o.residual = std::max(o.residual, max_abs_diff(sq, std::polar(1.0, 2.0 * v) * CMatrix::identity(6)));
                     ++o.sample_count;
                   }
                   return o;
                 }});

  out.push_back({"spin-one.boost-closed-form",
                 "the closed-form spin-1 boosts equal exp(+-(J.n) eta), cosh eta = E/m, and invert each other", g,
                 tol::kIdentity, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64&) {
                   CheckOutcome o;
                   o.residual = max_over(ctx.momenta, [](const FourMomentum& p) {
                     if (p.magnitude() == 0.0) return 0.0;
                     const CMatrix r = boost_one(p, Side::Right);
                     const CMatrix l = boost_one(p, Side::Left);
                     const double eta = std::acosh(p.E() / p.m());
                     const CMatrix gen = spin_one_dot(p.direction());
                     const double scale = frobenius_norm(r);
                     return std::max({max_abs_diff(r, series_exp(Complex(eta) * gen)) / scale,
                                      max_abs_diff(l, series_exp(Complex(-eta) * gen)) / scale,
                                      max_abs_diff(r * l, CMatrix::identity(3))});
                   });
                   o.sample_count = ctx.momenta.size();
                   return o;
                 }});

  out.push_back({"spin-one.gamma5-sc-conjugacy",
                 "Gamma^5 S^c self/anti-self conjugate spin-1 lambda and rho exist at zeta = +1 / -1", g,
                 tol::kZetaMinimum, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64& rng) {
                   CheckOutcome o;
                   std::vector<AngularParams> dirs;
                   for (std::size_t n = 0; n < ctx.momenta.size(); ++n) dirs.push_back(random_angles(rng));
                   for (std::size_t n = 0; n < ctx.momenta.size(); ++n) {
                     for (int h : kHelicities) {
                       const auto s = spin1_conjugacy_scan(ctx.momenta[n], ScanOperator::Gamma5Sc, dirs[n], h);
                       double r = worst_minimum(s);
                       // the minimum must sit at the stated zeta, not elsewhere on the circle
                       if (std::abs(s.lambda_self.zeta - 1.0) > 1e-6 || std::abs(s.lambda_anti.zeta + 1.0) > 1e-6 ||
                           std::abs(s.rho_self.zeta - 1.0) > 1e-6 || std::abs(s.rho_anti.zeta + 1.0) > 1e-6)
                         r = std::numeric_limits<double>::infinity();
                       o.residual = std::max(o.residual, r);
                       o.sample_count += 4;
                     }
                   }
                   const auto ref = spin1_conjugacy_scan(reference_momentum(), ScanOperator::Gamma5Sc, {1.0, 2.0}, 1);
                   o.constants.emplace_back("zeta_lambda_self", rounded(ref.lambda_self.zeta));
                   o.constants.emplace_back("zeta_lambda_anti", rounded(ref.lambda_anti.zeta));
                   return o;
                 }});

  out.push_back({"spin-one.sc-no-solution",
                 "no zeta makes spin-1 lambda or rho an eigenspinor of S^c alone, at rest or boosted", g, tol::kFloor,
                 Expectation::ExceedFloor, [](const SuiteContext& ctx, std::mt19937_64& rng) {
                   CheckOutcome o;
                   std::vector<FourMomentum> ps{make_momentum(0.0, 0.0, 0.0, ctx.momenta.front().m())};
                   const std::size_t boosted = std::min<std::size_t>(ctx.momenta.size(), 20);
                   ps.insert(ps.end(), ctx.momenta.begin(), ctx.momenta.begin() + static_cast<long>(boosted));
                   o.residual = std::numeric_limits<double>::infinity();
                   for (const auto& p : ps) {
                     const auto a = random_angles(rng);
                     for (int h : kHelicities) {
                       o.residual = std::min(o.residual, best_minimum(spin1_conjugacy_scan(p, ScanOperator::Sc, a, h)));
                       o.sample_count += 4;
                     }
                   }
                   const auto rest = spin1_conjugacy_scan(make_momentum(0, 0, 0, 1), ScanOperator::Sc, {1.0, 2.0}, 1);
                   o.constants.emplace_back("rest_lambda_self_minimum", rest.lambda_self.residual);
                   return o;
                 }});

  out.push_back({"spin-one.scan-phase-covariance", "with S^c phase e^{i theta} the conjugacy minima move to zeta = +-e^{i theta}",
                 g, tol::kZetaMinimum, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64& rng) {
                   CheckOutcome o;
                   const std::size_t count = std::min<std::size_t>(ctx.momenta.size(), 20);
                   for (std::size_t n = 0; n < count; ++n) {
                     const double v = uniform(rng, 0.0, 2.0 * std::numbers::pi);
                     const auto a = random_angles(rng);
                     const auto s = spin1_conjugacy_scan(ctx.momenta[n], ScanOperator::Gamma5Sc, a, 1, v);
                     const Complex z = std::polar(1.0, v);
                     o.residual = std::max({o.residual, worst_minimum(s), std::abs(s.lambda_self.zeta - z),
                                            std::abs(s.lambda_anti.zeta + z), std::abs(s.rho_self.zeta - z),
                                            std::abs(s.rho_anti.zeta + z)});
                     o.sample_count += 4;
                   }
                   return o;
                 }});
}

}  // namespace majorana::detail
