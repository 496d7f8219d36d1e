#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "majorana/clifford.hpp"
#include "majorana/dynamics.hpp"
#include "majorana/errors.hpp"
#include "majorana/sampling.hpp"
#include "majorana/symmetry.hpp"

using namespace majorana;
using testing::diff;

TEST_CASE("Dirac matrix") {
  const auto rest = make_momentum(0, 0, 0, 3);
  CHECK(diff(dirac_matrix(rest), 3.0 * gamma(0)) == 0.0);
  MomentumSampler s(41);
  for (int n = 0; n < 20; ++n) {
    const auto p = s.next();
    const CMatrix d = dirac_matrix(p);
    CHECK(diff(d * d, p.m() * p.m() * CMatrix::identity(4)) <= 1e-12 * p.E() * p.E());
  }
}

TEST_CASE("coupled system at rest") {
  const auto rest = make_momentum(0, 0, 0, 2);
  for (double r : coupled_system_residual(rest, {1})) CHECK(r == 0.0);
  for (double r : coupled_system_residual(rest, {-1})) CHECK(r == doctest::Approx(4.0));
}

TEST_CASE("exactly one frequency convention works") {
  MomentumSampler s(42);
  std::vector<FourMomentum> ps;
  for (int n = 0; n < 100; ++n) ps.push_back(s.next());
  const auto d = discover_convention(ps);
  REQUIRE(d.working.size() == 1);
  CHECK(d.working[0] == 1);
  CHECK(d.trials[0].max_residual <= 1e-12);
  CHECK(d.trials[1].min_over_mass > 0.5);
}

TEST_CASE("Markov superposition") {
  MomentumSampler s(43);
  for (int n = 0; n < 20; ++n) {
    const auto p = s.next();
    const auto pair = markov_superposition(p);
    CHECK(markov_residual(p, pair) <= 1e-12 * p.E());
    CHECK(dirac_span_residual(p, pair.chi) <= 1e-12);
    CHECK(dirac_span_residual(p, pair.eta) <= 1e-12);
    const CVector u = dirac_spinor(p, Kind::Particle, Index::Up, Basis::Spinorial).components();
    const CVector v = dirac_spinor(p, Kind::Antiparticle, Index::Up, Basis::Spinorial).components();
    const double before = norm(u) * norm(u) + norm(v) * norm(v);
    const double after = norm(pair.chi) * norm(pair.chi) + norm(pair.eta) * norm(pair.eta);
    CHECK(after == doctest::Approx(before).epsilon(1e-14));
    // Psi2 = 0
    const CVector zero(4);
    const auto degenerate = markov_superposition(u, zero);
    CHECK(diff(degenerate.chi, degenerate.eta) == 0.0);
    CHECK(markov_residual(p, degenerate) <= 1e-12 * p.E());
  }
}

TEST_CASE("Sen Gupta equation") {
  // m2 = 0 is the Dirac equation
  const auto p = make_momentum(0.3, 0.4, -1.0, 1.5);
  const CVector u = dirac_spinor(p, Kind::Particle, Index::Up, Basis::Spinorial).components();
  CHECK(sen_gupta_residual(p.E(), p.three(), p.m(), 0.0, u) < 1e-13);

  // m1 = 2, m2 = 1, p^2 = 3
  const auto q = make_momentum(1.0, -2.0, 0.5, std::sqrt(3.0));
  const CMatrix n = sen_gupta_null_space(q.E(), q.three(), 2.0, 1.0);
  REQUIRE(n.cols() == 2);
  const auto eq = sen_gupta_equivalence(2.0, 1.0);
  CHECK(eq.mass == doctest::Approx(std::sqrt(3.0)));
  const CMatrix op = sen_gupta_operator(q.E(), q.three(), 2.0, 1.0);
  CHECK(diff(op, eq.s * (dirac_matrix(q) - eq.mass * CMatrix::identity(4)) * eq.s) < 1e-13);
  for (std::size_t k = 0; k < n.cols(); ++k) {
    const CVector mapped = eq.s * n.col(k);
    CHECK(norm(dirac_matrix(q) * mapped - eq.mass * mapped) <= 1e-12 * norm(mapped) * q.E());
  }

  // off shell: no solutions
  CHECK(sen_gupta_null_space(q.E() + 0.1, q.three(), 2.0, 1.0).rows() == 0);
  CHECK_THROWS_AS(sen_gupta_equivalence(1.0, 1.0), DomainError);
}

TEST_CASE("massless limits of the two-mass equation") {
  MomentumSampler s(44);
  for (int n = 0; n < 20; ++n) {
    const auto dir = s.direction();
    const std::array<double, 3> nhat{std::sin(dir.theta) * std::cos(dir.phi), std::sin(dir.theta) * std::sin(dir.phi),
                                     std::cos(dir.theta)};
    const double m2 = s.uniform(0.2, 3.0);
    const double e = m2 * s.uniform(0.0, 5.0);
    // m1 = 0: p^2 = -m2^2; the witness equals m2/|p|
    const double k = std::sqrt(e * e + m2 * m2);
    const std::array<double, 3> p{k * nhat[0], k * nhat[1], k * nhat[2]};
    CHECK(sen_gupta_null_space(e, p, 0.0, m2).cols() == 2);
    CHECK(sen_gupta_massless_witness(e, p, 0.0, m2) > 0.1);
    CHECK(sen_gupta_massless_witness(e, p, 0.0, m2) == doctest::Approx(m2 / k));
    // m1 = m2: p^2 = 0
    const double e0 = s.uniform(0.5, 5.0);
    const std::array<double, 3> p0{e0 * nhat[0], e0 * nhat[1], e0 * nhat[2]};
    CHECK(sen_gupta_null_space(e0, p0, m2, m2).cols() == 2);
    // here the null space does contain eigenvectors of gamma^0 (gamma.n)
    CHECK(sen_gupta_massless_witness(e0, p0, m2, m2) < 1e-12);
  }
}

TEST_CASE("eight-component form") {
  const CMatrix l5 = lambda5();
  CHECK(diff(l5 * l5, CMatrix::identity(8)) == 0.0);
  MomentumSampler s(45);
  for (int n = 0; n < 20; ++n) {
    const auto p = s.next();
    const CMatrix d = dirac_matrix(p);
    const CMatrix kinetic = block_diag(d, d);
    const CMatrix z = CMatrix::zero(4, 4);
    const CMatrix mass = block(z, CMatrix::identity(4), CMatrix::identity(4), z);
    CHECK(frobenius_norm(anticommutator(l5, kinetic)) < 1e-12 * p.E());
    CHECK(frobenius_norm(anticommutator(l5, mass)) == 0.0);
    CHECK(frobenius_norm(commutator(l5, kinetic)) > 0.1);
    CHECK(eight_component_residual(p, {1}) <= 1e-12 * p.E());
    CHECK(eight_component_residual(p, {1}, 0.7) <= 1e-12 * p.E());
    CHECK(eight_component_residual(p, {-1}) > 0.5 * p.m());
  }
  CHECK(eight_component_residual(make_momentum(0, 0, 0, 1), {1}) == 0.0);
}

TEST_CASE("mass term") {
  MomentumSampler s(46);
  std::mt19937_64 rng(47);
  std::normal_distribution<double> g;
  auto amp = [&] { return Complex(g(rng), g(rng)); };
  for (int n = 0; n < 20; ++n) {
    const auto p = s.next();
    const auto up = mass_term_fields(p, Index::Up);
    const auto down = mass_term_fields(p, Index::Down);
    // with one index the four bilinears cancel pairwise
    CHECK(std::abs(lagrangian_mass_term(up, p.m())) <= 1e-12 * p.E() * p.m());
    const MassTermFields f{amp() * up.lambda_s + amp() * down.lambda_s, amp() * up.rho_a + amp() * down.rho_a,
                           amp() * up.lambda_a + amp() * down.lambda_a, amp() * up.rho_s + amp() * down.rho_s};
    const double scale = p.m() * (norm(f.lambda_s) * norm(f.lambda_s) + norm(f.rho_a) * norm(f.rho_a) +
                                  norm(f.lambda_a) * norm(f.lambda_a) + norm(f.rho_s) * norm(f.rho_s));
    const Complex value = lagrangian_mass_term(f, p.m());
    CHECK(std::abs(value) > 1e-6 * scale);
    CHECK(std::abs(value.imag()) <= 1e-12 * scale);
    const double a = s.uniform(0, 3.14);
    const std::array<double, 3> c{0.3 * std::sin(a), -0.5 * std::sin(a), std::sqrt(1 - 0.34) * std::sin(a)};
    const CMatrix u = su2_phase_transform(std::cos(a), c);
    CHECK(std::abs(lagrangian_mass_term(su2_transformed(f, u), p.m()) - value) <= 1e-12 * scale);
    CHECK(std::abs(lagrangian_mass_term(gauge_transformed(f, a), p.m()) - value) <= 1e-12 * scale);
  }
}
