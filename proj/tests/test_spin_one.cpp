#include <cmath>
#include <numbers>

#include "doctest.h"
#include "helpers.hpp"
#include "majorana/sampling.hpp"
#include "majorana/spin_one.hpp"

using namespace majorana;
using testing::diff;

TEST_CASE("Wigner matrix for spin 1") {
  const CMatrix& t = wigner_theta_one();
  CHECK(diff(t * t, CMatrix::identity(3)) == 0.0);
  CHECK(t == transpose(t));
  CHECK(diff(t * transpose(t), CMatrix::identity(3)) == 0.0);
  for (int k = 1; k <= 3; ++k) {
    const CMatrix& j = spin_one_generator(k);
    CHECK(diff(t * j * inverse(t), -conj(j)) <= 1e-14);
  }
  CHECK(diff(t * spin_one_generator(3) * inverse(t), -spin_one_generator(3)) == 0.0);
}

TEST_CASE("conjugation operator squares") {
  std::mt19937_64 rng(51);
  for (double v : {0.0, 0.7, 2.0, -1.3}) {
    const auto sc = sc_one(v);
    const auto g = gamma5_sc_one(v);
    for (int n = 0; n < 10; ++n) {
      const CVector psi = testing::random_matrix(rng, 6, 1).col(0);
      CHECK(diff(sc.act(sc.act(psi)), -psi) <= 1e-13 * norm(psi));
      CHECK(diff(g.act(g.act(psi)), psi) <= 1e-13 * norm(psi));
    }
    CHECK(frobenius_norm(anticommutator(gamma5_one(), sc.matrix)) == 0.0);
  }
  const auto ss = ss_one();
  CHECK(diff(ss.matrix * ss.matrix, CMatrix::identity(6)) == 0.0);
}

TEST_CASE("rest-frame spin-1 lambda") {
  const auto rest = make_momentum(0, 0, 0, 1);
  const AngularParams a{0.4, 1.0};
  const CVector phi = spin_one_triplet(a, 1);
  const CVector l = spin1_lambda(rest, 1.0, a, 1);
  CHECK(diff(l, concat(wigner_theta_one() * conj(phi), phi)) < 1e-15);
  const std::array<double, 3> dir{std::sin(0.4) * std::cos(1.0), std::sin(0.4) * std::sin(1.0), std::cos(0.4)};
  CHECK(diff(spin_one_dot(dir) * phi, phi) < 1e-14);
}

TEST_CASE("Gamma5 Sc conjugacy scan") {
  MomentumSampler s(52);
  for (int n = 0; n < 5; ++n) {
    const auto p = s.next();
    const auto a = s.direction();
    for (int h : {1, 0, -1}) {
      const auto scan = spin1_conjugacy_scan(p, ScanOperator::Gamma5Sc, a, h);
      CHECK(scan.lambda_self.residual <= 1e-10);
      CHECK(scan.lambda_anti.residual <= 1e-10);
      CHECK(scan.rho_self.residual <= 1e-10);
      CHECK(scan.rho_anti.residual <= 1e-10);
      CHECK(std::abs(scan.lambda_self.zeta - 1.0) < 1e-8);
      CHECK(std::abs(scan.lambda_anti.zeta + 1.0) < 1e-8);
      CHECK(std::abs(scan.rho_self.zeta - 1.0) < 1e-8);
      CHECK(std::abs(scan.rho_anti.zeta + 1.0) < 1e-8);
    }
  }
}

TEST_CASE("Sc alone has no solution") {
  MomentumSampler s(53);
  const auto rest = make_momentum(0, 0, 0, 1);
  const auto a = s.direction();
  const auto at_rest = spin1_conjugacy_scan(rest, ScanOperator::Sc, a, 1);
  CHECK(at_rest.lambda_self.residual > 0.1);
  CHECK(at_rest.lambda_anti.residual > 0.1);
  CHECK(at_rest.rho_self.residual > 0.1);
  CHECK(at_rest.rho_anti.residual > 0.1);
  for (int n = 0; n < 5; ++n) {
    const auto scan = spin1_conjugacy_scan(s.next(), ScanOperator::Sc, s.direction(), -1);
    CHECK(scan.lambda_self.residual > 0.1);
    CHECK(scan.rho_anti.residual > 0.1);
  }
}

TEST_CASE("scan is phase covariant") {
  const auto p = make_momentum(0.5, -0.2, 1.0, 1.0);
  const AngularParams a{1.0, 2.0};
  const double v = 0.9;
  const auto scan = spin1_conjugacy_scan(p, ScanOperator::Gamma5Sc, a, 1, v);
  CHECK(std::abs(scan.lambda_self.zeta - std::polar(1.0, v)) < 1e-8);
  CHECK(std::abs(scan.lambda_anti.zeta + std::polar(1.0, v)) < 1e-8);
}
