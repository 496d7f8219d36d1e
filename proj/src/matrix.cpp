#include "majorana/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "majorana/errors.hpp"

namespace majorana {

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

void require_square(const CMatrix& a, const char* op) {
  if (!a.square()) {
    throw DimensionError(std::string(op) + ": matrix is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", expected square");
  }
}

void require_same_dim(const CVector& a, const CVector& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": vector dims " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

void require_supported(std::size_t dim) {
  if (!supported_vector_dim(dim)) {
    throw DimensionError("CVector: unsupported dimension " + std::to_string(dim));
  }
}

// Unitary 2x2 rotation (as J) that zeroes the off-diagonal of the Hermitian
// block [[app, apq], [conj(apq), aqq]] under J^H A J.
struct JacobiRotation {
  Complex pp, pq, qp, qq;
};

JacobiRotation jacobi_rotation(double app, double aqq, Complex apq) {
  const double mag = std::abs(apq);
  const Complex phase = apq / mag;
  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  // J = diag(1, conj(phase)) * [[c, s], [-s, c]]
  return {c, s, -s * std::conj(phase), c * std::conj(phase)};
}

}  // namespace

// ---------------------------------------------------------------------------
// CMatrix

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw DimensionError("CMatrix: zero extent");
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> entries)
    : CMatrix(rows, cols, std::vector<Complex>(entries)) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionError("CMatrix: zero extent");
  if (data_.size() != rows * cols) {
    throw DimensionError("CMatrix: " + std::to_string(data_.size()) + " entries for " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::initializer_list<Complex> entries) {
  CMatrix m(entries.size(), entries.size());
  std::size_t i = 0;
  for (const auto& e : entries) {
    m(i, i) = e;
    ++i;
  }
  return m;
}

CMatrix CMatrix::column(const CVector& v) {
  return CMatrix(v.dim(), 1, std::vector<Complex>(v.entries().begin(), v.entries().end()));
}

CVector CMatrix::col(std::size_t c) const {
  std::vector<Complex> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return CVector(std::move(out));
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
  for (auto& e : data_) e *= s;
  return *this;
}

// ---------------------------------------------------------------------------
// CVector

bool supported_vector_dim(std::size_t dim) noexcept {
  return dim == 2 || dim == 3 || dim == 4 || dim == 6 || dim == 8;
}

CVector::CVector(std::size_t dim) : data_(dim) { require_supported(dim); }

CVector::CVector(std::initializer_list<Complex> entries) : data_(entries) {
  require_supported(data_.size());
}

CVector::CVector(std::vector<Complex> entries) : data_(std::move(entries)) {
  require_supported(data_.size());
}

CVector& CVector::operator+=(const CVector& other) {
  require_same_dim(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CVector& CVector::operator-=(const CVector& other) {
  require_same_dim(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CVector& CVector::operator*=(Complex s) {
  for (auto& e : data_) e *= s;
  return *this;
}

// ---------------------------------------------------------------------------
// arithmetic

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator-(CMatrix a) { return a *= -1.0; }
CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
CMatrix operator*(CMatrix a, Complex s) { return a *= s; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

CVector operator*(const CMatrix& a, const CVector& v) {
  if (a.cols() != v.dim()) {
    throw DimensionError("mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times vector of dim " + std::to_string(v.dim()));
  }
  std::vector<Complex> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex acc{};
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * v[k];
    out[i] = acc;
  }
  return CVector(std::move(out));
}

CVector operator+(CVector a, const CVector& b) { return a += b; }
CVector operator-(CVector a, const CVector& b) { return a -= b; }
CVector operator-(CVector a) { return a *= -1.0; }
CVector operator*(Complex s, CVector a) { return a *= s; }
CVector operator*(CVector a, Complex s) { return a *= s; }

CMatrix mul(const CMatrix& a, const CMatrix& b) { return a * b; }

CMatrix adjoint(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

CMatrix conj(const CMatrix& a) {
  CMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = std::conj(a(i, j));
  return out;
}

CMatrix transpose(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Complex det(const CMatrix& a) {
  require_square(a, "det");
  const std::size_t n = a.rows();
  CMatrix lu = a;
  Complex result = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(lu(r, k)) > std::abs(lu(pivot, k))) pivot = r;
    if (lu(pivot, k) == Complex{}) return Complex{};
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(k, c), lu(pivot, c));
      result = -result;
    }
    result *= lu(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const Complex f = lu(r, k) / lu(k, k);
      for (std::size_t c = k; c < n; ++c) lu(r, c) -= f * lu(k, c);
    }
  }
  return result;
}

Complex trace(const CMatrix& a) {
  require_square(a, "trace");
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

CMatrix inverse(const CMatrix& a) {
  require_square(a, "inverse");
  const std::size_t n = a.rows();
  CMatrix work = a;
  CMatrix inv = CMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(work(r, k)) > std::abs(work(pivot, k))) pivot = r;
    if (std::abs(work(pivot, k)) == 0.0) throw DomainError("inverse: singular matrix");
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(k, c), work(pivot, c));
        std::swap(inv(k, c), inv(pivot, c));
      }
    }
    const Complex d = work(k, k);
    for (std::size_t c = 0; c < n; ++c) {
      work(k, c) /= d;
      inv(k, c) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k) continue;
      const Complex f = work(r, k);
      if (f == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= f * work(k, c);
        inv(r, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

double frobenius_norm(const CMatrix& a) {
  double s = 0.0;
  for (const auto& e : a.entries()) s += std::norm(e);
  return std::sqrt(s);
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }
CMatrix anticommutator(const CMatrix& a, const CMatrix& b) { return a * b + b * a; }

CMatrix block(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& d) {
  require_same_shape(a, b, "block");
  require_same_shape(a, c, "block");
  require_same_shape(a, d, "block");
  const std::size_t r = a.rows();
  const std::size_t k = a.cols();
  CMatrix out(2 * r, 2 * k);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      out(i, j) = a(i, j);
      out(i, j + k) = b(i, j);
      out(i + r, j) = c(i, j);
      out(i + r, j + k) = d(i, j);
    }
  }
  return out;
}

CMatrix block_diag(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

CVector conj(const CVector& v) {
  CVector out = v;
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = std::conj(v[i]);
  return out;
}

Complex inner(const CVector& v, const CVector& w) {
  require_same_dim(v, w, "inner");
  Complex acc{};
  for (std::size_t i = 0; i < v.dim(); ++i) acc += std::conj(v[i]) * w[i];
  return acc;
}

double norm(const CVector& v) {
  double s = 0.0;
  for (const auto& e : v.entries()) s += std::norm(e);
  return std::sqrt(s);
}

double distance(const CVector& a, const CVector& b) { return norm(a - b); }

CVector concat(const CVector& upper, const CVector& lower) {
  std::vector<Complex> out(upper.entries().begin(), upper.entries().end());
  out.insert(out.end(), lower.entries().begin(), lower.entries().end());
  return CVector(std::move(out));
}

CVector slice(const CVector& v, std::size_t begin, std::size_t count) {
  if (begin + count > v.dim()) throw DimensionError("slice: out of range");
  return CVector(std::vector<Complex>(v.entries().begin() + static_cast<std::ptrdiff_t>(begin),
                                      v.entries().begin() + static_cast<std::ptrdiff_t>(begin + count)));
}

// ---------------------------------------------------------------------------
// decompositions

HermitianEigen hermitian_eigen(const CMatrix& a) {
  require_square(a, "hermitian_eigen");
  const std::size_t n = a.rows();
  CMatrix w = a;
  CMatrix v = CMatrix::identity(n);
  const double scale = std::max(frobenius_norm(a), 1e-300);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(w(p, q));
    if (std::sqrt(off) <= 1e-17 * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(w(p, q)) <= 1e-300) continue;
        const auto j = jacobi_rotation(w(p, p).real(), w(q, q).real(), w(p, q));
        for (std::size_t r = 0; r < n; ++r) {  // w <- w J
          const Complex wp = w(r, p);
          const Complex wq = w(r, q);
          w(r, p) = wp * j.pp + wq * j.qp;
          w(r, q) = wp * j.pq + wq * j.qq;
        }
        for (std::size_t c = 0; c < n; ++c) {  // w <- J^H w
          const Complex wp = w(p, c);
          const Complex wq = w(q, c);
          w(p, c) = std::conj(j.pp) * wp + std::conj(j.qp) * wq;
          w(q, c) = std::conj(j.pq) * wp + std::conj(j.qq) * wq;
        }
        for (std::size_t r = 0; r < n; ++r) {  // v <- v J
          const Complex vp = v(r, p);
          const Complex vq = v(r, q);
          v(r, p) = vp * j.pp + vq * j.qp;
          v(r, q) = vp * j.pq + vq * j.qq;
        }
        w(p, q) = 0.0;
        w(q, p) = 0.0;
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return w(x, x).real() < w(y, y).real(); });
  HermitianEigen out{std::vector<double>(n), CMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = w(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

namespace {

// One-sided Jacobi: returns W = A V with mutually orthogonal columns and the
// unitary V. Column norms of W are the singular values.
std::pair<CMatrix, CMatrix> one_sided_jacobi(const CMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  CMatrix w = a;
  CMatrix v = CMatrix::identity(n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma{};
        for (std::size_t r = 0; r < m; ++r) {
          alpha += std::norm(w(r, p));
          beta += std::norm(w(r, q));
          gamma += std::conj(w(r, p)) * w(r, q);
        }
        if (std::abs(gamma) <= 1e-16 * std::sqrt(alpha * beta) || std::abs(gamma) <= 1e-300) continue;
        rotated = true;
        const auto j = jacobi_rotation(alpha, beta, gamma);
        for (std::size_t r = 0; r < m; ++r) {
          const Complex wp = w(r, p);
          const Complex wq = w(r, q);
          w(r, p) = wp * j.pp + wq * j.qp;
          w(r, q) = wp * j.pq + wq * j.qq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const Complex vp = v(r, p);
          const Complex vq = v(r, q);
          v(r, p) = vp * j.pp + vq * j.qp;
          v(r, q) = vp * j.pq + vq * j.qq;
        }
      }
    }
    if (!rotated) break;
  }
  return {std::move(w), std::move(v)};
}

std::vector<double> column_norms(const CMatrix& w) {
  std::vector<double> out(w.cols(), 0.0);
  for (std::size_t c = 0; c < w.cols(); ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < w.rows(); ++r) s += std::norm(w(r, c));
    out[c] = std::sqrt(s);
  }
  return out;
}

}  // namespace

std::vector<double> singular_values(const CMatrix& a) {
  auto [w, v] = one_sided_jacobi(a);
  auto s = column_norms(w);
  std::sort(s.begin(), s.end(), std::greater<>());
  if (a.rows() < a.cols()) s.resize(a.rows());
  return s;
}

CMatrix null_space(const CMatrix& a, double rel_tol) {
  auto [w, v] = one_sided_jacobi(a);
  const auto s = column_norms(w);
  const double smax = s.empty() ? 0.0 : *std::max_element(s.begin(), s.end());
  const double cutoff = smax > 0.0 ? rel_tol * smax : rel_tol;
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < s.size(); ++c)
    if (s[c] <= cutoff) keep.push_back(c);
  if (keep.empty()) return CMatrix();
  CMatrix out(a.cols(), keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (std::size_t r = 0; r < a.cols(); ++r) out(r, k) = v(r, keep[k]);
  return out;
}

CMatrix solve_intertwiner(const CMatrix& a, const CMatrix& b) {
  const IntertwinerPair pair{a, b};
  return solve_intertwiner(std::span<const IntertwinerPair>(&pair, 1));
}

CMatrix solve_intertwiner(std::span<const IntertwinerPair> pairs) {
  if (pairs.empty()) throw DimensionError("solve_intertwiner: no constraints");
  const std::size_t n = pairs.front().a.rows();
  for (const auto& pr : pairs) {
    require_square(pr.a, "solve_intertwiner");
    require_square(pr.b, "solve_intertwiner");
    if (pr.a.rows() != n || pr.b.rows() != n) throw DimensionError("solve_intertwiner: mixed shapes");
  }

  // vec(X) row-major: index i*n + j.
  const std::size_t nn = n * n;
  CMatrix system(pairs.size() * nn, nn);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto& A = pairs[p].a;
    const auto& B = pairs[p].b;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t row = p * nn + i * n + j;
        for (std::size_t k = 0; k < n; ++k) {
          system(row, i * n + k) += A(k, j);  // (X A)_ij
          system(row, k * n + j) -= B(i, k);  // (B X)_ij
        }
      }
    }
  }

  const CMatrix basis = null_space(system, 1e-10);
  if (basis.rows() == 0) throw NoIntertwinerError("solve_intertwiner: only the trivial solution");
  if (basis.cols() > 1) {
    throw AmbiguousIntertwinerError(
        "solve_intertwiner: solution space has dimension " + std::to_string(basis.cols()),
        basis.cols());
  }

  std::vector<Complex> entries(nn);
  for (std::size_t k = 0; k < nn; ++k) entries[k] = basis(k, 0);
  CMatrix x(n, n, std::move(entries));

  const double fn = frobenius_norm(x);
  Complex lead{};
  for (const auto& e : x.entries()) {
    if (std::abs(e) > 1e-12 * fn) {
      lead = e;
      break;
    }
  }
  x *= std::conj(lead) / (std::abs(lead) * fn);
  // Cancellation noise below the threshold is set to exact zero.
  CMatrix cleaned = x;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(x(i, j)) <= 1e-15) cleaned(i, j) = 0.0;
  return cleaned;
}

double intertwiner_residual(const CMatrix& x, const CMatrix& a, const CMatrix& b) {
  return frobenius_norm(x * a - b * x);
}

}  // namespace majorana
