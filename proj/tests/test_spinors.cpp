#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "majorana/clifford.hpp"
#include "majorana/dynamics.hpp"
#include "majorana/errors.hpp"
#include "majorana/sampling.hpp"
#include "majorana/spinors.hpp"
#include "majorana/symmetry.hpp"

using namespace majorana;
using testing::diff;

TEST_CASE("rest lambda") {
  CHECK(rest_lambda(Kind::S, Index::Up, 2).components() == CVector{0.0, kI, 1.0, 0.0});
  CHECK(rest_lambda(Kind::A, Index::Down, 2).components() == CVector{kI, 0.0, 0.0, 1.0});
  CHECK(diff(rest_lambda(Kind::S, Index::Down, 8).components(), CVector{-2.0 * kI, 0.0, 0.0, 2.0}) < 1e-15);
  CHECK_THROWS_AS(rest_lambda(Kind::S, Index::Up, 0.0), DomainError);
  CHECK_THROWS_AS(rest_lambda(Kind::Particle, Index::Up, 1.0), DomainError);
}

TEST_CASE("rest rho") {
  CHECK(diff(rest_rho(Kind::S, Index::Up, 2).components(), CVector{1.0, 0.0, 0.0, -kI}) < 1e-15);
  CHECK(diff(rest_rho(Kind::A, Index::Up, 2).components(), CVector{1.0, 0.0, 0.0, kI}) < 1e-15);
  CHECK_THROWS_AS(rest_rho(Kind::A, Index::Up, -1.0), DomainError);
}

TEST_CASE("boosted forms reduce to the rest forms") {
  for (Kind k : {Kind::S, Kind::A}) {
    for (Index i : {Index::Up, Index::Down}) {
      const auto rest = make_momentum(0, 0, 0, 2);
      CHECK(diff(lambda_spinor(rest, k, i).components(), rest_lambda(k, i, 2).components()) < 1e-15);
      CHECK(diff(rho_spinor(rest, k, i).components(), rest_rho(k, i, 2).components()) < 1e-15);
      const auto near = make_momentum(1e-9, -2e-9, 5e-9, 1.0);
      CHECK(diff(lambda_spinor(near, k, i).components(), rest_lambda(k, i, 1).components()) < 1e-7);
      CHECK(diff(rho_spinor(near, k, i).components(), rest_rho(k, i, 1).components()) < 1e-7);
    }
  }
}

TEST_CASE("lambda^S_down along z") {
  const auto p = make_momentum(0, 0, 1, 1);
  const double e = std::sqrt(2.0);
  const double f = 1.0 / (2.0 * std::sqrt(e + 1.0));
  const CVector expected{-kI * (e + 2.0) * f, 0.0, 0.0, (e + 2.0) * f};
  CHECK(diff(lambda_spinor(p, Kind::S, Index::Down).components(), expected) < 1e-15);
  const auto q = make_momentum(1, 0, 0, 1);
  CHECK(std::abs(rho_spinor(q, Kind::A, Index::Down).components()[0] - 1.0 / (2.0 * std::sqrt(q.E() + 1.0))) <
        1e-15);
}

TEST_CASE("boosting the rest spinors reproduces the closed forms") {
  MomentumSampler s(21);
  for (int n = 0; n < 50; ++n) {
    const auto p = s.next();
    const CMatrix b = block_diag(boost_half(p, Side::Right), boost_half(p, Side::Left));
    for (Kind k : {Kind::S, Kind::A}) {
      for (Index i : {Index::Up, Index::Down}) {
        const CVector boosted_l = b * rest_lambda(k, i, p.m()).components();
        const CVector boosted_r = b * rest_rho(k, i, p.m()).components();
        const CVector l = lambda_spinor(p, k, i).components();
        const CVector r = rho_spinor(p, k, i).components();
        // measured global phase is exactly one
        CHECK(diff(boosted_l, l) <= 1e-12 * norm(l));
        CHECK(diff(boosted_r, r) <= 1e-12 * norm(r));
      }
    }
  }
}

TEST_CASE("self and anti-self conjugacy") {
  MomentumSampler s(22);
  const auto c = charge_conjugation();
  for (int n = 0; n < 50; ++n) {
    const auto p = s.next();
    for (Basis basis : {Basis::Spinorial, Basis::Helicity}) {
      for (Family f : {Family::Lambda, Family::Rho}) {
        for (Index i : {Index::Up, Index::Down}) {
          const CVector sv = elko_spinor(p, f, Kind::S, i, basis).components();
          const CVector av = elko_spinor(p, f, Kind::A, i, basis).components();
          CHECK(diff(c.act(sv), sv) <= 1e-12 * norm(sv));
          CHECK(diff(c.act(av), -av) <= 1e-12 * norm(av));
        }
      }
    }
  }
}

TEST_CASE("spinorial lambda is an eta eigenstate only along z") {
  const auto along = make_momentum(0, 0, 2, 1);
  const CMatrix eta = chiral_helicity_operator(along).matrix();
  const CVector up = lambda_spinor(along, Kind::S, Index::Up).components();
  CHECK(diff(eta * up, 0.5 * up) < 1e-14);
  const auto generic = make_momentum(1, 2, 3, 1);
  const CMatrix eta2 = chiral_helicity_operator(generic).matrix();
  const CVector v = lambda_spinor(generic, Kind::S, Index::Up).components();
  const Complex mu = inner(v, eta2 * v) / inner(v, v);
  CHECK(norm(eta2 * v - mu * v) / norm(v) > 0.1);
}

TEST_CASE("helicity-basis lambda and rho are eta eigenstates") {
  MomentumSampler s(23);
  for (int n = 0; n < 50; ++n) {
    const auto p = s.next();
    const CMatrix eta = chiral_helicity_operator(p).matrix();
    for (Kind k : {Kind::S, Kind::A}) {
      for (Index i : {Index::Up, Index::Down}) {
        const double label = i == Index::Up ? 0.5 : -0.5;
        const CVector l = lambda_helicity(p, k, i).components();
        const CVector r = rho_helicity(p, k, i).components();
        CHECK(diff(eta * l, label * l) <= 1e-12 * norm(l));
        CHECK(diff(eta * r, -label * r) <= 1e-12 * norm(r));
      }
    }
  }
}

TEST_CASE("helicity-basis lambda matches the rest spinor at theta = 0") {
  const auto rest = make_momentum(0, 0, 0, 2);
  CHECK(diff(lambda_helicity(rest, Kind::S, Index::Up).components(), rest_lambda(Kind::S, Index::Up, 2).components()) <
        1e-15);
}

TEST_CASE("gamma0 maps reflected lambda onto the opposite index") {
  MomentumSampler s(24);
  for (int n = 0; n < 50; ++n) {
    const auto p = s.next();
    const auto q = parity_reflect(p);
    auto l = [&](const FourMomentum& k, Kind kind, Index i) { return lambda_spinor(k, kind, i).components(); };
    const CMatrix& g0 = gamma(0);
    CHECK(diff(g0 * l(q, Kind::S, Index::Up), kI * l(p, Kind::S, Index::Down)) < 1e-12 * std::sqrt(p.E()));
    CHECK(diff(g0 * l(q, Kind::S, Index::Down), -kI * l(p, Kind::S, Index::Up)) < 1e-12 * std::sqrt(p.E()));
    CHECK(diff(g0 * l(q, Kind::A, Index::Up), -kI * l(p, Kind::A, Index::Down)) < 1e-12 * std::sqrt(p.E()));
    CHECK(diff(g0 * l(q, Kind::A, Index::Down), kI * l(p, Kind::A, Index::Up)) < 1e-12 * std::sqrt(p.E()));
  }
}

TEST_CASE("helicity two-spinors") {
  const auto up = helicity_two_spinor({0.0, 0.0}, 1);
  CHECK(up.components == CVector{1.0, 0.0});
  MomentumSampler s(25);
  for (int n = 0; n < 100; ++n) {
    const AngularParams a = s.direction();
    PhaseConfig cfg;
    cfg.theta1 = s.uniform(0, 6.3);
    cfg.theta2 = s.uniform(0, 6.3);
    const std::array<double, 3> dir{std::sin(a.theta) * std::cos(a.phi), std::sin(a.theta) * std::sin(a.phi),
                                    std::cos(a.theta)};
    const auto plus = helicity_two_spinor(a, 1, cfg).components;
    const auto minus = helicity_two_spinor(a, -1, cfg).components;
    CHECK(std::abs(norm(plus) - 1.0) <= 1e-14);
    CHECK(std::abs(norm(minus) - 1.0) <= 1e-14);
    CHECK(diff(sigma_dot(dir) * plus, plus) < 1e-14);
    CHECK(diff(sigma_dot(dir) * minus, -minus) < 1e-14);

    const AngularParams r{std::numbers::pi - a.theta, std::numbers::pi + a.phi};
    const auto rplus = helicity_two_spinor(r, 1, cfg).components;
    const auto rminus = helicity_two_spinor(r, -1, cfg).components;
    const Complex d21 = std::polar(1.0, cfg.theta2 - cfg.theta1);
    CHECK(diff(rminus, -kI * d21 * plus) < 1e-14);
    CHECK(diff(rplus, -kI * std::conj(d21) * minus) < 1e-14);
    const CMatrix& th = wigner_theta_half();
    CHECK(diff(th * conj(rminus), -kI * std::polar(1.0, -2 * cfg.theta2) * minus) < 1e-14);
    CHECK(diff(th * conj(rplus), kI * std::polar(1.0, -2 * cfg.theta1) * plus) < 1e-14);

    PhaseConfig link = cfg;
    link.alpha = cfg.theta1;
    link.beta = cfg.theta2;
    const CMatrix u = helicity_connection(a, link);
    CHECK(diff(u * plus, minus) < 1e-14);
    CHECK(diff(adjoint(u) * minus, plus) < 1e-14);
    CHECK(diff(u * adjoint(u), CMatrix::identity(2)) < 1e-15);
  }
}

TEST_CASE("Dirac spinors") {
  MomentumSampler s(26);
  for (int n = 0; n < 50; ++n) {
    const auto p = s.next();
    const CMatrix d = dirac_matrix(p);
    for (Basis b : {Basis::Spinorial, Basis::Helicity}) {
      for (Index i : {Index::Up, Index::Down}) {
        const auto u = dirac_spinor(p, Kind::Particle, i, b);
        const auto v = dirac_spinor(p, Kind::Antiparticle, i, b);
        CHECK(norm(d * u.components() - p.m() * u.components()) <= 1e-12 * p.E() * norm(u.components()));
        CHECK(norm(d * v.components() + p.m() * v.components()) <= 1e-12 * p.E() * norm(v.components()));
        CHECK(std::abs(bar_product(u, u) - 2.0 * p.m()) < 1e-12 * p.E());
        CHECK(std::abs(bar_product(v, v) + 2.0 * p.m()) < 1e-12 * p.E());
      }
    }
    const auto a = p.angles();
    const std::array<double, 3> dir{std::sin(a.theta) * std::cos(a.phi), std::sin(a.theta) * std::sin(a.phi),
                                    std::cos(a.theta)};
    const auto u = dirac_spinor(p, Kind::Particle, Index::Up, Basis::Helicity).components();
    const CVector block = slice(u, 2, 2);
    CHECK(diff(sigma_dot(dir) * block, block) < 1e-12 * norm(block));
  }
  const auto rest = make_momentum(0, 0, 0, 4);
  const CVector u = dirac_spinor(rest, Kind::Particle, Index::Up, Basis::Spinorial).components();
  CHECK(diff(u, CVector{2.0, 0.0, 2.0, 0.0}) < 1e-15);
  CHECK(diff(gamma(0) * u, u) == 0.0);
}

TEST_CASE("bar products of lambda spinors") {
  MomentumSampler s(27);
  for (int n = 0; n < 50; ++n) {
    const auto p = s.next();
    const auto su = lambda_spinor(p, Kind::S, Index::Up);
    const auto sd = lambda_spinor(p, Kind::S, Index::Down);
    CHECK(std::abs(bar_product(su, su)) < 1e-12 * p.E());
    CHECK(std::abs(bar_product(su, sd) - Complex(0.0, -p.m())) < 1e-12 * p.E());
    CHECK(std::abs(bar_product(su, rho_spinor(p, Kind::A, Index::Up)) - p.m()) < 1e-12 * p.E());
  }
}

TEST_CASE("golden file round trip") {
  std::vector<GoldenRecord> records;
  const auto p = make_momentum(1, 2, 3, 2);
  records.push_back({Family::Lambda, Kind::S, Index::Up, 1, 2, 3, 2, lambda_spinor(p, Kind::S, Index::Up).components()});
  records.push_back({Family::Rho, Kind::A, Index::Down, 1, 2, 3, 2, rho_spinor(p, Kind::A, Index::Down).components()});
  std::stringstream buf;
  write_golden(buf, records);
  const auto back = read_golden(buf);
  REQUIRE(back.size() == 2);
  CHECK(back[1].components == records[1].components);
  std::stringstream bad("no header\n");
  CHECK_THROWS_AS(read_golden(bad), UsageError);
}

TEST_CASE("regression against the stored golden file") {
  std::ifstream in(MAJORANA_GOLDEN_FILE);
  REQUIRE(in.good());
  const auto records = read_golden(in);
  REQUIRE(records.size() >= 8);
  for (const auto& r : records) CHECK(diff(evaluate_golden(r), r.components) <= 1e-12 * norm(r.components));
}
