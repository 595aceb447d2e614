#pragma once

#include <complex>
#include <vector>

#include "twodir/types.hpp"

namespace twodir {

inline constexpr double kEigenOneTolerance = 1e-9;

/// Eigenvalues of a small dense real matrix, with multiplicity, sorted by
/// descending real part then descending imaginary part.
std::vector<std::complex<double>> eigenvalues(const Matrix& a);

/// Outcome of testing "simple eigenvalue 1, every other eigenvalue strictly
/// inside the unit disk".
struct ConditionEReport {
  std::vector<std::complex<double>> eigenvalues;
  bool has_simple_one = false;
  bool spectral_ok = false;
  bool satisfied = false;
  double tolerance_used = kEigenOneTolerance;
};

/// Eigenvalue 1 is detected as |lambda - 1| <= tol and must occur exactly
/// once; the remaining eigenvalues must satisfy |lambda| < 1 - tol.
ConditionEReport condition_e(const Matrix& a, double tol = kEigenOneTolerance);

/// Unit eigenvector for the simple eigenvalue 1 of a. The sign is fixed so
/// that the entry of largest magnitude is positive (lowest index on ties).
/// Throws ConditionEError when eigenvalue 1 is absent or not simple.
Vector unit_eigvec(const Matrix& a, double tol = kEigenOneTolerance);

/// Gaussian elimination with partial pivoting. Throws SingularSystemError
/// when a pivot falls below n * eps * max|a_ij|.
Vector solve(const Matrix& a, const Vector& b);

}  // namespace twodir
