#pragma once

#include <random>

#include "majorana/matrix.hpp"

namespace testing {

using majorana::CMatrix;
using majorana::Complex;
using majorana::CVector;

inline CMatrix random_matrix(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::normal_distribution<double> g;
  CMatrix a(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) a(i, j) = Complex(g(rng), g(rng));
  return a;
}

inline CMatrix random_unit(std::mt19937_64& rng, std::size_t n) {
  CMatrix a = random_matrix(rng, n, n);
  return a * Complex(1.0 / majorana::frobenius_norm(a));
}

/// Gram-Schmidt on the columns of a random matrix.
inline CMatrix random_unitary(std::mt19937_64& rng, std::size_t n) {
  CMatrix a = random_matrix(rng, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex d{};
      for (std::size_t i = 0; i < n; ++i) d += std::conj(a(i, k)) * a(i, j);
      for (std::size_t i = 0; i < n; ++i) a(i, j) -= d * a(i, k);
    }
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::norm(a(i, j));
    for (std::size_t i = 0; i < n; ++i) a(i, j) /= std::sqrt(s);
  }
  return a;
}

inline double diff(const CMatrix& a, const CMatrix& b) { return majorana::max_abs_diff(a, b); }
inline double diff(const CVector& a, const CVector& b) { return majorana::distance(a, b); }

}  // namespace testing
