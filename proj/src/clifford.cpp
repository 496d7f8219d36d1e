#include "majorana/clifford.hpp"

#include "majorana/errors.hpp"

namespace majorana {

namespace {

const std::array<CMatrix, 4>& pauli_table() {
  static const std::array<CMatrix, 4> table = {
      CMatrix(2, 2, {1.0, 0.0, 0.0, 1.0}),
      CMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}),
      CMatrix(2, 2, {0.0, -kI, kI, 0.0}),
      CMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}),
  };
  return table;
}

const std::array<CMatrix, 4>& gamma_table() {
  static const std::array<CMatrix, 4> table = [] {
    const CMatrix zero = CMatrix::zero(2, 2);
    const auto& s = pauli_table();
    return std::array<CMatrix, 4>{
        block(zero, s[0], s[0], zero),
        block(zero, -s[1], s[1], zero),
        block(zero, -s[2], s[2], zero),
        block(zero, -s[3], s[3], zero),
    };
  }();
  return table;
}

}  // namespace

const CMatrix& pauli(int k) {
  if (k < 0 || k > 3) throw DimensionError("pauli: index out of range");
  return pauli_table()[static_cast<std::size_t>(k)];
}

CMatrix sigma_dot(const std::array<double, 3>& n) {
  CMatrix out(2, 2);
  for (int k = 0; k < 3; ++k) out += n[static_cast<std::size_t>(k)] * pauli(k + 1);
  return out;
}

const CMatrix& gamma(int mu) {
  if (mu < 0 || mu > 3) throw DimensionError("gamma: index out of range");
  return gamma_table()[static_cast<std::size_t>(mu)];
}

const CMatrix& gamma5() {
  static const CMatrix g5 = CMatrix::diagonal({1.0, 1.0, -1.0, -1.0});
  return g5;
}

CMatrix alpha_dot(const std::array<double, 3>& n) {
  const CMatrix s = sigma_dot(n);
  return block_diag(s, -s);
}

const CMatrix& wigner_theta_half() {
  static const CMatrix theta(2, 2, {0.0, -1.0, 1.0, 0.0});
  return theta;
}

}  // namespace majorana
