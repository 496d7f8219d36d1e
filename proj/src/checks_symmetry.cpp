#include <cmath>
#include <numbers>

#include "checks_common.hpp"
#include "majorana/clifford.hpp"
#include "majorana/dynamics.hpp"
#include "majorana/sampling.hpp"
#include "majorana/spinors.hpp"
#include "majorana/symmetry.hpp"
#include "majorana/tolerances.hpp"

namespace majorana::detail {

namespace {

constexpr Index kIndices[] = {Index::Up, Index::Down};

CVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  CVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Complex(g(rng), g(rng));
  return v;
}

CMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  CMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
  return a * Complex(1.0 / frobenius_norm(a));
}

// unit quaternion (c0, c) drawn uniformly on S^3
std::pair<double, std::array<double, 3>> random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::array<double, 4> q{g(rng), g(rng), g(rng), g(rng)};
  const double n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  for (double& x : q) x /= n;
  return {q[0], {q[1], q[2], q[3]}};
}

const CMatrix& diag_target() {
  static const CMatrix t = CMatrix::diagonal({1.0, 1.0, -1.0, -1.0});
  return t;
}

CheckOutcome classify(const SuiteContext& ctx, Basis basis, CpFamily family, Relation expected) {
  const auto c = classify_cp_action(basis, family, ctx.seed, ctx.samples);
  CheckOutcome o;
  o.residual = c.max_residual;
  o.sample_count = c.samples;
  o.classified_pass = c.relation == expected && c.max_residual <= tol::kIdentity && c.opposite_residual > tol::kFloor;
  o.constants.emplace_back("relation", std::string(to_string(c.relation)));
  o.constants.emplace_back("parity_phase", c.parity_phase);
  return o;
}

}  // namespace

void add_symmetry_checks(std::vector<CheckSpec>& out) {
  const std::string g = "symmetry";

  out.push_back({"symmetry.c-squared", "C^2 = +1 for C = -e^{i theta} gamma^2 K at any theta", g, tol::kAlgebra,
                 Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64& rng) {
                   CheckOutcome o;
                   for (std::size_t n = 0; n < ctx.samples; ++n) {
                     PhaseConfig cfg;
                     cfg.theta_c = uniform(rng, 0.0, 2.0 * std::numbers::pi);
                     const auto c = charge_conjugation(cfg);
                     const CVector psi = random_vector(rng, 4);
                     o.residual = std::max(o.residual, distance(c.act(c.act(psi)), psi) / norm(psi));
                     ++o.sample_count;
                   }
                   return o;
                 }});

  out.push_back({"symmetry.c-gamma5-anticommute", "C anticommutes with gamma^5", g, tol::kAlgebra,
                 Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64& rng) {
                   CheckOutcome o;
                   const auto c = charge_conjugation();
                   const auto g5 = chirality();
                   for (std::size_t n = 0; n < ctx.samples; ++n) {
                     const CVector psi = random_vector(rng, 4);
                     o.residual = std::max(o.residual, norm(c.act(g5.act(psi)) + g5.act(c.act(psi))) / norm(psi));
                     ++o.sample_count;
                   }
                   return o;
                 }});

  out.push_back({"symmetry.composition-associative",
                 "operator composition is associative and agrees with successive action", g, tol::kAlgebra,
                 Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64& rng) {
                   CheckOutcome o;
                   auto random_op = [&](bool anti, bool refl) {
                     return SymmetryOperator(random_matrix(rng, 4), anti, refl,
                                             std::polar(1.0, uniform(rng, 0.0, 2.0 * std::numbers::pi)));
                   };
                   for (std::size_t n = 0; n < ctx.samples; ++n) {
                     const auto a = random_op(n % 2 == 0, n % 3 == 0);
                     const auto b = random_op(n % 4 < 2, false);
                     const auto c = random_op(true, n % 5 == 0);
                     const auto left = compose(compose(a, b), c);
                     const auto right = compose(a, compose(b, c));
                     const CVector psi = random_vector(rng, 4);
                     double r = max_abs_diff(left.matrix(), right.matrix()) + std::abs(left.phase() - right.phase());
                     if (left.antilinear() != right.antilinear() || left.reflects_momentum() != right.reflects_momentum())
                       r = 1.0;
                     r = std::max(r, distance(left.act(psi), a.act(b.act(c.act(psi)))) / norm(psi));
                     o.residual = std::max(o.residual, r);
                     ++o.sample_count;
                   }
                   return o;
                 }});

  out.push_back({"symmetry.parity-dirac", "P u = +u, P v = -v and P^2 = 1 on Dirac spinors with P = gamma^0 R", g,
                 tol::kIdentity, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64&) {
                   CheckOutcome o;
                   const auto p_op = parity_operator();
                   o.residual = max_over(ctx.momenta, [&](const FourMomentum& p) {
                     double worst = 0.0;
                     for (Index i : kIndices) {
                       SpinorField u = [i](const FourMomentum& k) {
                         return dirac_spinor(k, Kind::Particle, i, Basis::Spinorial).components();
                       };
                       SpinorField v = [i](const FourMomentum& k) {
                         return dirac_spinor(k, Kind::Antiparticle, i, Basis::Spinorial).components();
                       };
                       const CVector up = u(p);
                       const CVector vp = v(p);
                       worst = std::max({worst, distance(apply(p_op, u)(p), up) / norm(up),
                                         distance(apply(p_op, v)(p), -vp) / norm(vp),
                                         distance(apply(p_op, apply(p_op, u))(p), up) / norm(up)});
                     }
                     return worst;
                   });
                   o.sample_count = ctx.momenta.size() * 2;
                   return o;
                 }});

  out.push_back({"symmetry.c-on-u-in-v-span", "C u lies in the span of the v spinors", g, tol::kIdentity,
                 Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64&) {
                   CheckOutcome o;
                   const auto c = charge_conjugation();
                   o.residual = max_over(ctx.momenta, [&](const FourMomentum& p) {
                     double worst = 0.0;
                     for (Index i : kIndices) {
                       const CVector cu = c.act(dirac_spinor(p, Kind::Particle, i, Basis::Spinorial).components());
                       const CVector va = dirac_spinor(p, Kind::Antiparticle, Index::Up, Basis::Spinorial).components();
                       const CVector vb = dirac_spinor(p, Kind::Antiparticle, Index::Down, Basis::Spinorial).components();
                       const CVector proj = (inner(va, cu) / inner(va, va)) * va + (inner(vb, cu) / inner(vb, vb)) * vb;
                       worst = std::max(worst, distance(cu, proj) / norm(cu));
                     }
                     return worst;
                   });
                   o.sample_count = ctx.momenta.size() * 2;
                   return o;
                 }});

  out.push_back({"symmetry.unitary-determinants", "det u1 = 1, det u2 = det u3 = -1, all unitary", g, tol::kIdentity,
                 Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64&) {
                   CheckOutcome o;
                   const CMatrix id = CMatrix::identity(4);
                   o.residual = max_over(ctx.momenta, [&](const FourMomentum& p) {
                     const CMatrix u = u1(p);
                     return std::max(std::abs(det(u) - 1.0), max_abs_diff(u * adjoint(u), id));
                   });
                   o.residual = std::max({o.residual, std::abs(det(u2()) + 1.0), std::abs(det(u3()) + 1.0),
                                          max_abs_diff(u2() * adjoint(u2()), id),
                                          max_abs_diff(u3() * adjoint(u3()), id)});
                   o.sample_count = ctx.momenta.size() + 2;
                   o.constants.emplace_back("det_u2", det(u2()));
                   o.constants.emplace_back("det_u3", det(u3()));
                   return o;
                 }});

  out.push_back({"symmetry.helicity-chain", "u1 h u1^-1 = diag(sigma3, sigma3)/2, then u3 conjugation gives diag(1,1,-1,-1)/2",
                 g, tol::kIdentity, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64&) {
                   CheckOutcome o;
                   const CMatrix mid = 0.5 * block_diag(pauli(3), pauli(3));
                   o.residual = max_over(ctx.momenta, [&](const FourMomentum& p) {
                     const CMatrix u = u1(p);
                     const CMatrix h = u * helicity_operator(p).matrix() * inverse(u);
                     return std::max(max_abs_diff(h, mid),
                                     max_abs_diff(u3() * h * inverse(u3()), 0.5 * diag_target()));
                   });
                   o.sample_count = ctx.momenta.size();
                   return o;
                 }});

  out.push_back({"symmetry.chiral-helicity-chain", "u1 (alpha.n) u1^-1 then u2 conjugation gives diag(1,1,-1,-1)", g,
                 tol::kIdentity, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64&) {
                   CheckOutcome o;
                   o.residual = max_over(ctx.momenta, [&](const FourMomentum& p) {
                     const CMatrix u = u1(p);
                     const CMatrix a = u * alpha_dot(p.direction()) * inverse(u);
                     return max_abs_diff(u2() * a * inverse(u2()), diag_target());
                   });
                   o.sample_count = ctx.momenta.size();
                   return o;
                 }});

  out.push_back({"symmetry.xi-intertwiner", "Xi Lambda Xi^-1 = Lambda^* for both boosts", g, tol::kIdentity,
                 Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64&) {
                   CheckOutcome o;
                   o.residual = max_over(ctx.momenta, [](const FourMomentum& p) {
                     const CMatrix x = xi_matrix(p);
                     const CMatrix l = boost_half(p, Side::Left);
                     const CMatrix r = boost_half(p, Side::Right);
                     return std::max(intertwiner_residual(x, l, conj(l)) / frobenius_norm(l),
                                     intertwiner_residual(x, r, conj(r)) / frobenius_norm(r));
                   });
                   o.sample_count = ctx.momenta.size();
                   const CMatrix x = xi_matrix(reference_momentum());
                   o.constants.emplace_back("xi_11", x(0, 0));
                   o.constants.emplace_back("xi_22", x(1, 1));
                   return o;
                 }});

  out.push_back({"symmetry.xi-transforms",
                 "the four Xi transforms map helicity lambda^S to lambda^A*, -i lambda^S*, i gamma^0 lambda^A*, gamma^0 lambda^S*",
                 g, tol::kIdentity, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64&) {
                   CheckOutcome o;
                   o.residual = max_over(ctx.momenta, [](const FourMomentum& p) {
                     const auto t = lambda_basis_transforms(p);
                     double worst = max_abs_diff(conj(t.matrices[0]) * t.matrices[0], CMatrix::identity(4));
                     for (Index i : kIndices) {
                       const CVector ls = lambda_helicity(p, Kind::S, i).components();
                       const CVector la = lambda_helicity(p, Kind::A, i).components();
                       const std::array<CVector, 4> targets = {conj(la), -kI * conj(ls), kI * (gamma(0) * conj(la)),
                                                               gamma(0) * conj(ls)};
                       for (std::size_t k = 0; k < 4; ++k)
                         worst = std::max(worst, distance(t.matrices[k] * ls, targets[k]) / norm(ls));
                     }
                     return worst;
                   });
                   o.sample_count = ctx.momenta.size() * 8;
                   o.constants.emplace_back("alignment_ref", lambda_basis_transforms(reference_momentum()).alignment);
                   return o;
                 }});

  out.push_back({"symmetry.xi-transforms-conjugacy", "the Xi transforms preserve self charge conjugacy", g,
                 tol::kIdentity, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64&) {
                   CheckOutcome o;
                   const auto c = charge_conjugation();
                   o.residual = max_over(ctx.momenta, [&](const FourMomentum& p) {
                     const auto t = lambda_basis_transforms(p);
                     double worst = 0.0;
                     for (Index i : kIndices) {
                       const CVector ls = lambda_helicity(p, Kind::S, i).components();
                       for (const auto& m : t.matrices) {
                         const CVector image = m * ls;
                         worst = std::max(worst, distance(c.act(image), image) / norm(image));
                       }
                     }
                     return worst;
                   });
                   o.sample_count = ctx.momenta.size() * 8;
                   return o;
                 }});

  out.push_back({"symmetry.chiral-gauge-conjugacy",
                 "e^{-i alpha gamma^5} lambda^S stays self-conjugate, e^{+i alpha gamma^5} rho^A stays anti-self-conjugate",
                 g, tol::kIdentity, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64& rng) {
                   CheckOutcome o;
                   const auto c = charge_conjugation();
                   for (std::size_t n = 0; n < 20; ++n) {
                     const double alpha = uniform(rng, -std::numbers::pi, std::numbers::pi);
                     const CMatrix gl = chiral_gauge_transform(alpha, Family::Lambda);
                     const CMatrix gr = chiral_gauge_transform(alpha, Family::Rho);
                     o.residual = std::max(o.residual, max_over(ctx.momenta, [&](const FourMomentum& p) {
                       double worst = 0.0;
                       for (Index i : kIndices) {
                         const CVector l = gl * lambda_spinor(p, Kind::S, i).components();
                         const CVector r = gr * rho_spinor(p, Kind::A, i).components();
                         worst = std::max({worst, distance(c.act(l), l) / norm(l), distance(c.act(r), -r) / norm(r)});
                       }
                       return worst;
                     }));
                     o.sample_count += ctx.momenta.size() * 4;
                   }
                   return o;
                 }});

  out.push_back({"symmetry.chiral-gauge-mass-term", "the lambda/rho mass term is invariant under chiral gauge transforms",
                 g, tol::kIdentity, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64& rng) {
                   CheckOutcome o;
                   std::vector<MassTermFields> fields;
                   for (const auto& p : ctx.momenta) fields.push_back(mixed_mass_term_fields(p, rng));
                   for (std::size_t n = 0; n < 20; ++n) {
                     const double alpha = uniform(rng, -std::numbers::pi, std::numbers::pi);
                     const auto values = sweep_parallel(ctx.momenta.size(), [&](std::size_t k) {
                       const double m = ctx.momenta[k].m();
                       const Complex before = lagrangian_mass_term(fields[k], m);
                       const Complex after = lagrangian_mass_term(gauge_transformed(fields[k], alpha), m);
                       return std::abs(after - before) / mass_term_scale(fields[k], m);
                     });
                     for (double v : values) o.residual = std::max(o.residual, v);
                     o.sample_count += ctx.momenta.size();
                   }
                   std::mt19937_64 fixed(7);
                   const auto ref = reference_momentum();
                   o.constants.emplace_back("mixed_mass_term_ref",
                                            lagrangian_mass_term(mixed_mass_term_fields(ref, fixed), ref.m()));
                   return o;
                 }});

  out.push_back({"symmetry.su2-closure", "products of SU(2) phase transforms are SU(2) phase transforms", g,
                 tol::kAlgebra, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64& rng) {
                   CheckOutcome o;
                   for (std::size_t n = 0; n < ctx.samples; ++n) {
                     const auto [a0, a] = random_su2(rng);
                     const auto [b0, b] = random_su2(rng);
                     const CMatrix prod = su2_phase_transform(a0, a) * su2_phase_transform(b0, b);
                     // quaternion product of (a0, a) and (b0, b) in the i tau convention
                     const double c0 = a0 * b0 - (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]);
                     const std::array<double, 3> c{a0 * b[0] + b0 * a[0] - (a[1] * b[2] - a[2] * b[1]),
                                                   a0 * b[1] + b0 * a[1] - (a[2] * b[0] - a[0] * b[2]),
                                                   a0 * b[2] + b0 * a[2] - (a[0] * b[1] - a[1] * b[0])};
                     const double len = std::sqrt(c0 * c0 + c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
                     const CMatrix expected = su2_phase_transform(c0 / len, {c[0] / len, c[1] / len, c[2] / len});
                     o.residual = std::max({o.residual, max_abs_diff(prod, expected), std::abs(det(prod) - 1.0),
                                            max_abs_diff(prod * adjoint(prod), CMatrix::identity(2))});
                     ++o.sample_count;
                   }
                   return o;
                 }});

  out.push_back({"symmetry.su2-mass-term", "the mass term is invariant under SU(2) rotations of the doublets", g,
                 tol::kIdentity, Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64& rng) {
                   CheckOutcome o;
                   std::vector<CMatrix> us;
                   std::vector<MassTermFields> fields;
                   for (const auto& p : ctx.momenta) {
                     const auto [c0, c] = random_su2(rng);
                     us.push_back(su2_phase_transform(c0, c));
                     fields.push_back(mixed_mass_term_fields(p, rng));
                   }
                   const auto values = sweep_parallel(ctx.momenta.size(), [&](std::size_t n) {
                     const double m = ctx.momenta[n].m();
                     const Complex before = lagrangian_mass_term(fields[n], m);
                     const Complex after = lagrangian_mass_term(su2_transformed(fields[n], us[n]), m);
                     return std::abs(after - before) / mass_term_scale(fields[n], m);
                   });
                   for (double v : values) o.residual = std::max(o.residual, v);
                   o.sample_count = ctx.momenta.size();
                   return o;
                 }});

  out.push_back({"symmetry.cp-dirac", "C and P anticommute on Dirac u/v spinors", g, tol::kIdentity,
                 Expectation::Classify, [](const SuiteContext& ctx, std::mt19937_64&) {
                   return classify(ctx, Basis::Spinorial, CpFamily::Dirac, Relation::Anticommute);
                 }});

  out.push_back({"symmetry.cp-elko", "C and P commute on helicity-basis lambda/rho spinors", g, tol::kIdentity,
                 Expectation::Classify, [](const SuiteContext& ctx, std::mt19937_64&) {
                   return classify(ctx, Basis::Helicity, CpFamily::Elko, Relation::Commute);
                 }});

  out.push_back({"symmetry.helicity-parity-anticommute", "h(p) gamma^0 = -gamma^0 h(-p)", g, tol::kAlgebra,
                 Expectation::Vanish, [](const SuiteContext& ctx, std::mt19937_64&) {
                   CheckOutcome o;
                   o.residual = max_over(ctx.momenta, [](const FourMomentum& p) {
                     const CMatrix hp = helicity_operator(p).matrix();
                     const CMatrix hq = helicity_operator(parity_reflect(p)).matrix();
                     return max_abs_diff(hp * gamma(0), -(gamma(0) * hq));
                   });
                   o.sample_count = ctx.momenta.size();
                   return o;
                 }});
}

}  // namespace majorana::detail
