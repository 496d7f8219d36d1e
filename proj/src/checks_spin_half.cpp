#include <cmath>
#include <numbers>

#include "checks_common.hpp"
#include "majorana/clifford.hpp"
#include "majorana/dynamics.hpp"
#include "majorana/spinors.hpp"
#include "majorana/symmetry.hpp"
#include "majorana/tolerances.hpp"

namespace majorana::detail {

namespace {

constexpr Kind kKinds[] = {Kind::S, Kind::A};
constexpr Index kIndices[] = {Index::Up, Index::Down};

// Worst relative residual of C psi = +-psi over the family, for phases theta_c in {0, pi/2, pi, random}.
double conjugacy_residual(const FourMomentum& p, Family family, Basis basis, const std::vector<double>& thetas) {
  double worst = 0.0;
  for (double theta : thetas) {
    PhaseConfig cfg;
    cfg.theta_c = theta;
    const auto c = charge_conjugation(cfg);
    const Complex rephase = std::polar(1.0, theta / 2.0);
    for (Kind k : kKinds) {
      const double sign = k == Kind::S ? 1.0 : -1.0;
      for (Index i : kIndices) {
        const CVector psi = rephase * elko_spinor(p, family, k, i, basis).components();
        worst = std::max(worst, norm(c.act(psi) - sign * psi) / norm(psi));
      }
    }
  }
  return worst;
}

std::vector<double> theta_set(std::mt19937_64& rng) {
  return {0.0, std::numbers::pi / 2.0, std::numbers::pi, uniform(rng, 0.0, 2.0 * std::numbers::pi)};
}

CheckOutcome conjugacy(const SuiteContext& ctx, std::mt19937_64& rng, Family family, Basis basis) {
  const auto thetas = theta_set(rng);
  CheckOutcome out;
  out.residual = max_over(ctx.momenta, [&](const FourMomentum& p) { return conjugacy_residual(p, family, basis, thetas); });
  out.sample_count = ctx.momenta.size() * 4 * thetas.size();
  out.constants.emplace_back("theta_c_random", thetas.back());
  return out;
}

double helicity_eigen_residual(const CMatrix& op, const CVector& v) {
  const Complex mu = inner(v, op * v) / inner(v, v);
  return norm(op * v - mu * v) / norm(v);
}

}  // namespace

void add_spin_half_checks(std::vector<CheckSpec>& out) {
  const std::string g = "spin-half";

  out.push_back({"spin-half.conjugacy.lambda", "C lambda^S = +lambda^S and C lambda^A = -lambda^A for boosted spinors",
                 g, tol::kIdentity, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64& rng) {
                   return conjugacy(ctx, rng, Family::Lambda, Basis::Spinorial);
                 }});

  out.push_back({"spin-half.conjugacy.rho", "C rho^S = +rho^S and C rho^A = -rho^A for boosted spinors", g,
                 tol::kIdentity, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64& rng) {
                   return conjugacy(ctx, rng, Family::Rho, Basis::Spinorial);
                 }});

  out.push_back({"spin-half.conjugacy.helicity-basis",
                 "helicity-basis lambda and rho are self/anti-self charge conjugate", g, tol::kIdentity,
                 Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64& rng) {
                   const auto thetas = theta_set(rng);
                   CheckOutcome o;
                   o.residual = max_over(ctx.momenta, [&](const FourMomentum& p) {
                     return std::max(conjugacy_residual(p, Family::Lambda, Basis::Helicity, thetas),
                                     conjugacy_residual(p, Family::Rho, Basis::Helicity, thetas));
                   });
                   o.sample_count = ctx.momenta.size() * 8 * thetas.size();
                   return o;
                 }});

  out.push_back({"spin-half.rest-spinors", "rest lambda = sqrt(m/2) times unit entries; rest rho = -+i / +-i lambda", g,
                 tol::kIdentity, Expectation::Vanish, [](const SuiteContext&, std::mt19937_64&) {
                   CheckOutcome o;
                   for (double m : {0.5, 1.0, 2.0}) {
                     const double root = std::sqrt(m / 2.0);
                     const CVector expected[] = {{0.0, kI, 1.0, 0.0}, {-kI, 0.0, 0.0, 1.0}, {0.0, -kI, 1.0, 0.0},
                                                 {kI, 0.0, 0.0, 1.0}, {1.0, 0.0, 0.0, -kI}, {0.0, 1.0, kI, 0.0},
                                                 {1.0, 0.0, 0.0, kI},  {0.0, 1.0, -kI, 0.0}};
                     std::size_t n = 0;
                     for (bool rho : {false, true}) {
                       for (Kind k : kKinds) {
                         for (Index i : kIndices) {
                           const CVector got = rho ? rest_rho(k, i, m).components() : rest_lambda(k, i, m).components();
                           o.residual = std::max(o.residual, distance(got, root * expected[n]) / root);
                           ++n;
                           ++o.sample_count;
                         }
                       }
                     }
                   }
                   return o;
                 }});

  out.push_back({"spin-half.rest-limit", "boosted lambda/rho at |p| <= 1e-8 m reduce to the rest spinors", g,
                 tol::kRestLimit, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64& rng) {
                   CheckOutcome o;
                   for (std::size_t n = 0; n < ctx.momenta.size(); ++n) {
                     const double m = ctx.momenta[n].m();
                     const double s = 1e-8 * m / std::sqrt(3.0);
                     const auto p = make_momentum(uniform(rng, -s, s), uniform(rng, -s, s), uniform(rng, -s, s), m);
                     for (Kind k : kKinds) {
                       for (Index i : kIndices) {
                         const double scale = std::sqrt(m);
                         o.residual = std::max(o.residual, distance(lambda_spinor(p, k, i).components(),
                                                                    rest_lambda(k, i, m).components()) / scale);
                         o.residual = std::max(
                             o.residual, distance(rho_spinor(p, k, i).components(), rest_rho(k, i, m).components()) / scale);
                         o.sample_count += 2;
                       }
                     }
                   }
                   return o;
                 }});

  out.push_back({"spin-half.boost-consistency",
                 "diag(Lambda_R, Lambda_L) applied to rest lambda/rho gives the boosted closed forms", g,
                 tol::kIdentity, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64&) {
                   CheckOutcome o;
                   auto residual = [](const FourMomentum& p) {
                     const CMatrix b = block_diag(boost_half(p, Side::Right), boost_half(p, Side::Left));
                     double worst = 0.0;
                     for (Kind k : kKinds) {
                       for (Index i : kIndices) {
                         const CVector l = lambda_spinor(p, k, i).components();
                         const CVector r = rho_spinor(p, k, i).components();
                         const CVector bl = b * rest_lambda(k, i, p.m()).components();
                         const CVector br = b * rest_rho(k, i, p.m()).components();
                         // one global phase per spinor, measured as the overlap phase
                         const Complex pl = inner(bl, l) / std::abs(inner(bl, l));
                         const Complex pr = inner(br, r) / std::abs(inner(br, r));
                         worst = std::max({worst, distance(pl * bl, l) / norm(l), distance(pr * br, r) / norm(r),
                                           std::abs(pl - 1.0), std::abs(pr - 1.0)});
                       }
                     }
                     return worst;
                   };
                   o.residual = max_over(ctx.momenta, residual);
                   o.sample_count = ctx.momenta.size() * 8;
                   o.constants.emplace_back("global_phase", Complex(1.0, 0.0));
                   return o;
                 }});

  out.push_back({"spin-half.helicity-non-eigen", "lambda and rho are not eigenspinors of the helicity operator", g,
                 tol::kFloor, Expectation::ExceedFloor, [](const SuiteContext& ctx, std::mt19937_64&) {
                   CheckOutcome o;
                   o.residual = min_over(ctx.momenta, [](const FourMomentum& p) {
                     const CMatrix h = helicity_operator(p).matrix();
                     double best = std::numeric_limits<double>::infinity();
                     for (Kind k : kKinds) {
                       for (Index i : kIndices) {
                         best = std::min(best, helicity_eigen_residual(h, lambda_spinor(p, k, i).components()));
                         best = std::min(best, helicity_eigen_residual(h, rho_spinor(p, k, i).components()));
                       }
                     }
                     return best;
                   });
                   o.sample_count = ctx.momenta.size() * 8;
                   const auto ref = reference_momentum();
                   o.constants.emplace_back("lambda_helicity_residual_ref",
                                            helicity_eigen_residual(helicity_operator(ref).matrix(),
                                                                    lambda_spinor(ref, Kind::S, Index::Up).components()));
                   return o;
                 }});

  out.push_back({"spin-half.chiral-helicity-eigen",
                 "eta = -gamma^5 h has eigenvalue +1/2 on lambda_up, -1/2 on lambda_down (rho opposite)", g,
                 tol::kIdentity, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64&) {
                   CheckOutcome o;
                   o.residual = max_over(ctx.momenta, [](const FourMomentum& p) {
                     const CMatrix eta = chiral_helicity_operator(p).matrix();
                     double worst = 0.0;
                     for (Kind k : kKinds) {
                       for (Index i : kIndices) {
                         const double label = i == Index::Up ? 0.5 : -0.5;
                         const CVector l = lambda_helicity(p, k, i).components();
                         const CVector r = rho_helicity(p, k, i).components();
                         worst = std::max(worst, norm(eta * l - label * l) / norm(l));
                         worst = std::max(worst, norm(eta * r + label * r) / norm(r));
                       }
                     }
                     return worst;
                   });
                   o.sample_count = ctx.momenta.size() * 8;
                   o.constants.emplace_back("lambda_up_eigenvalue", 0.5);
                   o.constants.emplace_back("rho_up_eigenvalue", -0.5);
                   return o;
                 }});

  out.push_back({"spin-half.parity-spinorial",
                 "gamma^0 lambda^S_updown(p') = +-i lambda^S_downup(p), gamma^0 lambda^A_updown(p') = -+i lambda^A_downup(p)",
                 g, tol::kIdentity, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64&) {
                   CheckOutcome o;
                   o.residual = max_over(ctx.momenta, [](const FourMomentum& p) {
                     const auto q = parity_reflect(p);
                     double worst = 0.0;
                     for (Kind k : kKinds) {
                       for (Index i : kIndices) {
                         const Index j = i == Index::Up ? Index::Down : Index::Up;
                         const double updown = i == Index::Up ? 1.0 : -1.0;
                         const Complex factor = (k == Kind::S ? updown : -updown) * kI;
                         const CVector lhs = gamma(0) * lambda_spinor(q, k, i).components();
                         const CVector rhs = factor * lambda_spinor(p, k, j).components();
                         worst = std::max(worst, distance(lhs, rhs) / norm(rhs));
                       }
                     }
                     return worst;
                   });
                   o.sample_count = ctx.momenta.size() * 4;
                   return o;
                 }});

  out.push_back({"spin-half.parity-helicity",
                 "R phi^-+ = -i e^{+-i(theta2 - theta1)} phi^+-, R Theta phi^-* = -i e^{-2i theta2} phi^-, R Theta phi^+* = +i e^{-2i theta1} phi^+",
                 g, tol::kIdentity, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64& rng) {
                   CheckOutcome o;
                   const CMatrix& th = wigner_theta_half();
                   for (std::size_t n = 0; n < ctx.samples; ++n) {
                     const AngularParams a{std::acos(uniform(rng, -1.0, 1.0)), uniform(rng, 0.0, 2.0 * std::numbers::pi)};
                     PhaseConfig cfg;
                     cfg.theta1 = uniform(rng, 0.0, 2.0 * std::numbers::pi);
                     cfg.theta2 = uniform(rng, 0.0, 2.0 * std::numbers::pi);
                     const AngularParams r{std::numbers::pi - a.theta, std::numbers::pi + a.phi};
                     const CVector plus = helicity_two_spinor(a, 1, cfg).components;
                     const CVector minus = helicity_two_spinor(a, -1, cfg).components;
                     const CVector rplus = helicity_two_spinor(r, 1, cfg).components;
                     const CVector rminus = helicity_two_spinor(r, -1, cfg).components;
                     const Complex d = std::polar(1.0, cfg.theta2 - cfg.theta1);
                     o.residual = std::max({o.residual, distance(rminus, -kI * d * plus),
                                            distance(rplus, -kI * std::conj(d) * minus),
                                            distance(th * conj(rminus), -kI * std::polar(1.0, -2.0 * cfg.theta2) * minus),
                                            distance(th * conj(rplus), kI * std::polar(1.0, -2.0 * cfg.theta1) * plus)});
                     o.sample_count += 4;
                   }
                   return o;
                 }});

  out.push_back({"spin-half.two-spinor-connection",
                 "xi_down = e^{i(beta - alpha)} [[0, e^{-i phi}], [-e^{i phi}, 0]] xi_up, and U^dagger maps back", g,
                 tol::kIdentity, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64& rng) {
                   CheckOutcome o;
                   for (std::size_t n = 0; n < ctx.samples; ++n) {
                     const AngularParams a{std::acos(uniform(rng, -1.0, 1.0)), uniform(rng, 0.0, 2.0 * std::numbers::pi)};
                     PhaseConfig cfg;
                     cfg.theta1 = cfg.alpha = uniform(rng, 0.0, 2.0 * std::numbers::pi);
                     cfg.theta2 = cfg.beta = uniform(rng, 0.0, 2.0 * std::numbers::pi);
                     const CMatrix u = helicity_connection(a, cfg);
                     const CVector up = helicity_two_spinor(a, 1, cfg).components;
                     const CVector down = helicity_two_spinor(a, -1, cfg).components;
                     o.residual = std::max({o.residual, distance(u * up, down), distance(adjoint(u) * down, up),
                                            max_abs_diff(u * adjoint(u), CMatrix::identity(2))});
                     ++o.sample_count;
                   }
                   return o;
                 }});

  out.push_back({"spin-half.dirac-equation", "(gamma.p - m) u = 0 and (gamma.p + m) v = 0 in both bases", g,
                 tol::kIdentity, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64&) {
                   CheckOutcome o;
                   o.residual = max_over(ctx.momenta, [](const FourMomentum& p) {
                     const CMatrix d = dirac_matrix(p);
                     double worst = 0.0;
                     for (Basis b : {Basis::Spinorial, Basis::Helicity}) {
                       for (Index i : kIndices) {
                         const CVector u = dirac_spinor(p, Kind::Particle, i, b).components();
                         const CVector v = dirac_spinor(p, Kind::Antiparticle, i, b).components();
                         worst = std::max(worst, norm(d * u - p.m() * u) / norm(u));
                         worst = std::max(worst, norm(d * v + p.m() * v) / norm(v));
                       }
                     }
                     return worst;
                   });
                   o.sample_count = ctx.momenta.size() * 8;
                   return o;
                 }});

  out.push_back({"spin-half.dirac-normalization", "u~u = 2m and v~v = -2m", g, tol::kIdentity, Expectation::Vanish,
                 [](const SuiteContext& ctx, std::mt19937_64&) {
                   CheckOutcome o;
                   o.residual = max_over(ctx.momenta, [](const FourMomentum& p) {
                     double worst = 0.0;
                     for (Index i : kIndices) {
                       const auto u = dirac_spinor(p, Kind::Particle, i, Basis::Spinorial);
                       const auto v = dirac_spinor(p, Kind::Antiparticle, i, Basis::Spinorial);
                       worst = std::max(worst, std::abs(bar_product(u, u) - 2.0 * p.m()) / p.E());
                       worst = std::max(worst, std::abs(bar_product(v, v) + 2.0 * p.m()) / p.E());
                     }
                     return worst;
                   });
                   o.sample_count = ctx.momenta.size() * 4;
                   return o;
                 }});

  out.push_back({"spin-half.bar-products",
                 "lambda~S_up lambda^S_up = 0, lambda~S_up lambda^S_down = -i m, lambda~S_up rho^A_up = m", g,
                 tol::kIdentity, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64&) {
                   CheckOutcome o;
                   o.residual = max_over(ctx.momenta, [](const FourMomentum& p) {
                     const auto su = lambda_spinor(p, Kind::S, Index::Up);
                     const auto sd = lambda_spinor(p, Kind::S, Index::Down);
                     const auto ra = rho_spinor(p, Kind::A, Index::Up);
                     return std::max({std::abs(bar_product(su, su)), std::abs(bar_product(su, sd) + kI * p.m()),
                                      std::abs(bar_product(su, ra) - p.m())}) / p.E();
                   });
                   o.sample_count = ctx.momenta.size() * 3;
                   const auto ref = reference_momentum();
                   const auto su = lambda_spinor(ref, Kind::S, Index::Up);
                   o.constants.emplace_back("lambdaS_up_lambdaS_down_over_m",
                                            bar_product(su, lambda_spinor(ref, Kind::S, Index::Down)) / ref.m());
                   o.constants.emplace_back("lambdaS_up_rhoA_up_over_m",
                                            bar_product(su, rho_spinor(ref, Kind::A, Index::Up)) / ref.m());
                   return o;
                 }});
}

}  // namespace majorana::detail
