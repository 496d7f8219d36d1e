#pragma once

// Every numeric threshold used by the library, the suite and the tests.

namespace majorana::tol {

/// Identities that must vanish (unit-normalized residuals).
inline constexpr double kIdentity = 1e-12;
/// Pure matrix-algebra identities (C^2, Γ5 S^c squares, associativity).
inline constexpr double kAlgebra = 1e-13;
/// |phase| = 1, unit-norm 2-spinors.
inline constexpr double kUnitModulus = 1e-14;
/// Floor a residual must exceed for a "cannot be satisfied" / "is not" claim.
inline constexpr double kFloor = 0.1;
/// Spin-1 ζ-scan minima for Γ5 S^c conjugacy.
inline constexpr double kZetaMinimum = 1e-10;
/// Wrong frequency convention must leave residuals above this multiple of m.
inline constexpr double kWrongConventionFactor = 0.5;
/// Singular values below kNullSpace * largest singular value count as zero.
inline constexpr double kNullSpace = 1e-10;
/// Momentum sampler resamples when |p| + pz < kMinusZ * |p|.
inline constexpr double kMinusZ = 1e-6;
/// Rest-limit comparison of boosted spinors.
inline constexpr double kRestLimit = 1e-7;
/// Relative off-shell tolerance for the Sen Gupta mass shell.
inline constexpr double kShell = 1e-10;

}  // namespace majorana::tol
