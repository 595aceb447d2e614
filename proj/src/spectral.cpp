#include "twodir/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "twodir/errors.hpp"

namespace twodir {

std::vector<std::complex<double>> eigenvalues(const Matrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw std::invalid_argument("eigenvalues: matrix must be square and nonempty");
  }
  if (!a.allFinite()) throw std::invalid_argument("eigenvalues: non-finite entry");

  Eigen::EigenSolver<Matrix> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("eigenvalues: QR iteration did not converge for " +
                           std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                           " matrix");
  }
  const auto& ev = solver.eigenvalues();
  std::vector<std::complex<double>> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), [](auto x, auto y) {
    return x.real() != y.real() ? x.real() > y.real() : x.imag() > y.imag();
  });
  return out;
}

ConditionEReport condition_e(const Matrix& a, double tol) {
  ConditionEReport report;
  report.eigenvalues = eigenvalues(a);
  report.tolerance_used = tol;

  int ones = 0;
  bool others_inside = true;
  for (const auto& lambda : report.eigenvalues) {
    if (std::abs(lambda - 1.0) <= tol) {
      ++ones;
    } else if (!(std::abs(lambda) < 1.0 - tol)) {
      others_inside = false;
    }
  }
  report.has_simple_one = ones == 1;
  report.spectral_ok = others_inside;
  report.satisfied = report.has_simple_one && report.spectral_ok;
  return report;
}

Vector unit_eigvec(const Matrix& a, double tol) {
  const auto eig = eigenvalues(a);
  const auto ones = std::count_if(eig.begin(), eig.end(),
                                  [tol](auto l) { return std::abs(l - 1.0) <= tol; });
  if (ones != 1) {
    throw ConditionEError(
        "Condition E prerequisite failed: eigenvalue 1 " +
        std::string(ones == 0 ? "is absent" : "is not simple") + " (tolerance " +
        std::to_string(tol) + ")");
  }

  const Matrix shifted = a - Matrix::Identity(a.rows(), a.cols());
  Eigen::JacobiSVD<Matrix> svd(shifted, Eigen::ComputeFullV);
  Vector v = svd.matrixV().col(a.cols() - 1);
  v.normalize();

  Eigen::Index lead = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    if (std::abs(v(i)) > std::abs(v(lead))) lead = i;
  }
  if (v(lead) < 0) v = -v;

  if ((a * v - v).norm() > tol) {
    throw ConditionEError("Condition E prerequisite failed: eigenvector residual " +
                          std::to_string((a * v - v).norm()) + " exceeds tolerance");
  }
  return v;
}

Vector solve(const Matrix& a, const Vector& b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.size() != n) {
    throw std::invalid_argument("solve: dimension mismatch");
  }
  Matrix lu = a;
  Vector x = b;
  const double threshold = static_cast<double>(std::max<Eigen::Index>(n, 1)) *
                           std::numeric_limits<double>::epsilon() *
                           std::max(a.cwiseAbs().maxCoeff(), 1e-300);

  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot_row;
    const double pivot = lu.col(col).tail(n - col).cwiseAbs().maxCoeff(&pivot_row);
    pivot_row += col;
    if (!(pivot > threshold)) {
      throw SingularSystemError("singular system: pivot " + std::to_string(pivot) +
                                    " in column " + std::to_string(col),
                                pivot);
    }
    if (pivot_row != col) {
      lu.row(col).swap(lu.row(pivot_row));
      std::swap(x(col), x(pivot_row));
    }
    for (Eigen::Index row = col + 1; row < n; ++row) {
      const double factor = lu(row, col) / lu(col, col);
      lu.row(row).tail(n - col) -= factor * lu.row(col).tail(n - col);
      x(row) -= factor * x(col);
    }
  }
  for (Eigen::Index row = n - 1; row >= 0; --row) {
    const double tail = lu.row(row).tail(n - row - 1).dot(x.tail(n - row - 1));
    x(row) = (x(row) - tail) / lu(row, row);
  }
  return x;
}

}  // namespace twodir
