#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace majorana {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

class CVector;

/*!
 * Dense complex matrix, row-major. All library objects are at most 8x8
 * (the intertwiner solver builds n^2 x n^2 systems internally).
 * Shape mismatches throw DimensionError.
 */
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> entries);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static CMatrix identity(std::size_t n);
  static CMatrix zero(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }
  static CMatrix diagonal(std::initializer_list<Complex> entries);
  /// Single column built from a vector.
  static CMatrix column(const CVector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const noexcept { return data_; }
  CVector col(std::size_t c) const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Complex s);

  bool operator==(const CMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Component storage for spinors. dim is one of 2, 3, 4, 6, 8.
class CVector {
 public:
  CVector() = default;
  explicit CVector(std::size_t dim);
  CVector(std::initializer_list<Complex> entries);
  explicit CVector(std::vector<Complex> entries);

  std::size_t dim() const noexcept { return data_.size(); }
  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }
  std::span<const Complex> entries() const noexcept { return data_; }

  CVector& operator+=(const CVector& other);
  CVector& operator-=(const CVector& other);
  CVector& operator*=(Complex s);

  bool operator==(const CVector&) const = default;

 private:
  std::vector<Complex> data_;
};

bool supported_vector_dim(std::size_t dim) noexcept;

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a);
CMatrix operator*(Complex s, CMatrix a);
CMatrix operator*(CMatrix a, Complex s);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CVector operator*(const CMatrix& a, const CVector& v);

CVector operator+(CVector a, const CVector& b);
CVector operator-(CVector a, const CVector& b);
CVector operator-(CVector a);
CVector operator*(Complex s, CVector a);
CVector operator*(CVector a, Complex s);

CMatrix mul(const CMatrix& a, const CMatrix& b);
CMatrix adjoint(const CMatrix& a);
CMatrix conj(const CMatrix& a);
CMatrix transpose(const CMatrix& a);
Complex det(const CMatrix& a);
Complex trace(const CMatrix& a);
CMatrix inverse(const CMatrix& a);
double frobenius_norm(const CMatrix& a);
/// Largest entry modulus of a - b.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

CMatrix commutator(const CMatrix& a, const CMatrix& b);
CMatrix anticommutator(const CMatrix& a, const CMatrix& b);

/// [[a, b], [c, d]] from four equally-shaped blocks.
CMatrix block(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& d);
CMatrix block_diag(const CMatrix& a, const CMatrix& b);
CMatrix kron(const CMatrix& a, const CMatrix& b);

CVector conj(const CVector& v);
/// v^H w
Complex inner(const CVector& v, const CVector& w);
double norm(const CVector& v);
double distance(const CVector& a, const CVector& b);
CVector concat(const CVector& upper, const CVector& lower);
CVector slice(const CVector& v, std::size_t begin, std::size_t count);

/// Eigen-decomposition of a Hermitian matrix; values ascending, vectors as columns.
struct HermitianEigen {
  std::vector<double> values;
  CMatrix vectors;
};
HermitianEigen hermitian_eigen(const CMatrix& a);

/// Singular values (descending) of any matrix.
std::vector<double> singular_values(const CMatrix& a);

/// Orthonormal basis (columns) of {x : A x = 0}; singular values below
/// rel_tol * sigma_max (or below rel_tol when A = 0) count as zero.
CMatrix null_space(const CMatrix& a, double rel_tol);

/// One (A, B) constraint for X A = B X.
struct IntertwinerPair {
  CMatrix a;
  CMatrix b;
};

/*!
 * Nonzero X with X A - B X = 0, found as the null space of the n^2 x n^2
 * map X -> X A - B X. Normalized to unit Frobenius norm with the first
 * nonzero entry (row-major) real positive.
 *
 * Throws NoIntertwinerError for a trivial null space and
 * AmbiguousIntertwinerError when it is more than one-dimensional.
 */
CMatrix solve_intertwiner(const CMatrix& a, const CMatrix& b);
/// Simultaneous solution of every pair; all pairs must share one square shape.
CMatrix solve_intertwiner(std::span<const IntertwinerPair> pairs);

/// ||X A - B X||_F
double intertwiner_residual(const CMatrix& x, const CMatrix& a, const CMatrix& b);

}  // namespace majorana
