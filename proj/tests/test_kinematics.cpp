#include <cmath>
#include <numbers>

#include "doctest.h"
#include "helpers.hpp"
#include "majorana/clifford.hpp"
#include "majorana/errors.hpp"
#include "majorana/kinematics.hpp"
#include "majorana/sampling.hpp"

using namespace majorana;
using testing::diff;

TEST_CASE("momentum at rest") {
  const auto p = make_momentum(0, 0, 0, 1);
  CHECK(p.E() == 1.0);
  CHECK(p.p_plus() == 1.0);
  CHECK(p.p_minus() == 1.0);
  CHECK(p.p_r() == Complex{});
  CHECK(p.p_l() == Complex{});
  CHECK_THROWS_AS(p.direction(), DirectionUndefinedError);
}

TEST_CASE("derived scalars") {
  const auto p = make_momentum(3, 4, 0, 0.5);
  CHECK(p.E() == doctest::Approx(std::sqrt(25.25)));
  CHECK(p.p_r() == Complex(3, 4));
  CHECK(p.p_l() == Complex(3, -4));
  const auto q = make_momentum(0, 0, -2, 1);
  CHECK(q.p_plus() == doctest::Approx(std::sqrt(5.0) - 2.0));
  CHECK(q.p_minus() == doctest::Approx(std::sqrt(5.0) + 2.0));
  CHECK(q.angles().theta == std::numbers::pi);
}

TEST_CASE("mass must be positive") {
  CHECK_THROWS_AS(make_momentum(1, 0, 0, 0), DomainError);
  CHECK_THROWS_AS(make_momentum(1, 0, 0, -1), DomainError);
}

TEST_CASE("on shell within 1e-14") {
  MomentumSampler s(1);
  for (int i = 0; i < 200; ++i) {
    const auto p = s.next();
    const double mag2 = p.px() * p.px() + p.py() * p.py() + p.pz() * p.pz();
    CHECK(std::abs(p.E() - std::sqrt(mag2 + p.m() * p.m())) <= 1e-14 * p.E());
  }
}

TEST_CASE("parity reflection") {
  const auto rest = make_momentum(0, 0, 0, 2);
  CHECK(parity_reflect(rest) == rest);
  const auto p = make_momentum(1, 2, 3, 2);
  const auto q = parity_reflect(p);
  CHECK(q.px() == -1.0);
  CHECK(q.py() == -2.0);
  CHECK(q.pz() == -3.0);
  CHECK(q.E() == p.E());
  CHECK(parity_reflect(q) == p);

  const auto a = momentum_from_angles(1.0, {std::numbers::pi / 3, std::numbers::pi / 4}, 1.0);
  const auto b = parity_reflect(a);
  CHECK(b.angles().theta == doctest::Approx(2 * std::numbers::pi / 3));
  CHECK(b.angles().phi == doctest::Approx(5 * std::numbers::pi / 4));
}

TEST_CASE("spin-1/2 boosts") {
  CHECK(diff(boost_half(make_momentum(0, 0, 0, 3), Side::Right), CMatrix::identity(2)) == 0.0);
  MomentumSampler s(2);
  for (int i = 0; i < 50; ++i) {
    const auto p = s.next();
    const CMatrix r = boost_half(p, Side::Right);
    const CMatrix l = boost_half(p, Side::Left);
    CHECK(std::abs(det(r) - 1.0) < 1e-12);
    CHECK(std::abs(det(l) - 1.0) < 1e-12);
    CHECK(diff(r, adjoint(r)) < 1e-12);
    const auto ev = hermitian_eigen(r).values;
    CHECK(ev[0] > 0.0);
    CHECK(diff(l, inverse(adjoint(r))) <= 1e-12 * frobenius_norm(l));
  }
  const auto p = make_momentum(1, 2, 3, 2);
  CHECK(diff(boost_half(p, Side::Right) * adjoint(boost_half(p, Side::Left)), CMatrix::identity(2)) < 1e-12);
  CHECK(diff(boost_half(p, Side::Right) * boost_half(p, Side::Right), CMatrix::identity(2)) > 0.1);
}

TEST_CASE("spin-1 generators") {
  for (int i = 1; i <= 3; ++i) {
    const CMatrix& a = spin_one_generator(i);
    const CMatrix& b = spin_one_generator(i % 3 + 1);
    const CMatrix& c = spin_one_generator((i + 1) % 3 + 1);
    CHECK(diff(commutator(a, b), kI * c) < 1e-15);
  }
  const CMatrix j2 = spin_one_generator(1) * spin_one_generator(1) + spin_one_generator(2) * spin_one_generator(2) +
                     spin_one_generator(3) * spin_one_generator(3);
  CHECK(diff(j2, 2.0 * CMatrix::identity(3)) < 1e-15);
}

namespace {

CMatrix series_exp(const CMatrix& a, int terms) {
  CMatrix sum = CMatrix::identity(a.rows());
  CMatrix term = CMatrix::identity(a.rows());
  for (int k = 1; k < terms; ++k) {
    term = term * a * Complex(1.0 / k);
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("spin-1 boost closed form against series") {
  MomentumSampler s(4);
  for (int i = 0; i < 40; ++i) {
    const double m = s.uniform(0.5, 2.0);
    const double ratio = s.uniform(1.0, 10.0);
    const auto p = momentum_from_angles(m * std::sqrt(ratio * ratio - 1.0), s.direction(), m);
    const CMatrix g = spin_one_dot(p.direction());
    CHECK(diff(g * g * g, g) < 1e-14);
    const double eta = std::acosh(p.E() / p.m());
    // the series needs many terms at large rapidity; 20 terms suffice only for modest E/m
    const int terms = ratio <= 3.0 ? 20 : 60;
    const CMatrix closed = boost_one(p, Side::Right);
    CHECK(diff(closed, series_exp(eta * g, terms)) <= 1e-12 * frobenius_norm(closed));
    CHECK(diff(boost_one(p, Side::Left), series_exp(-eta * g, terms)) <= 1e-12 * frobenius_norm(closed));
  }
  CHECK(diff(boost_one(make_momentum(0, 0, 0, 1), Side::Right), CMatrix::identity(3)) == 0.0);
}

TEST_CASE("spin-1 boost along z") {
  const auto p = make_momentum(0, 0, std::sqrt(3.0), 1.0);  // E/m = 2
  const CMatrix b = boost_one(p, Side::Right);
  CHECK(diff(b, CMatrix::diagonal({2.0 + std::sqrt(3.0), 1.0, 2.0 - std::sqrt(3.0)})) < 1e-14);
}

TEST_CASE("sampler avoids the -z axis and is reproducible") {
  MomentumSampler a(99);
  MomentumSampler b(99);
  for (int i = 0; i < 100; ++i) {
    const auto p = a.next();
    CHECK(p == b.next());
    CHECK(p.m() >= 0.1);
    CHECK(p.m() <= 10.0);
    CHECK(p.magnitude() <= 10.0 * p.m());
  }
}
