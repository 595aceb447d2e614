#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/SVD>

#include "support/random_masks.hpp"
#include "support/reference_values.hpp"
#include "twodir/discrete_moments.hpp"
#include "twodir/errors.hpp"
#include "twodir/mask_io.hpp"
#include "twodir/spectral.hpp"

using namespace twodir;
using namespace twodir::testing;

namespace {

Matrix scalar_example_symbol() {
  Matrix a(2, 2);
  a << 5 - kSqrt7, 3 + kSqrt7, 3 + kSqrt7, 5 - kSqrt7;
  return a / 8;
}

double smallest_singular_value(const Matrix& a, std::complex<double> lambda) {
  const Eigen::MatrixXcd shifted =
      a.cast<std::complex<double>>() - lambda * Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted);
  return svd.singularValues().minCoeff();
}

}  // namespace

TEST_CASE("eigenvalues of the scalar example symbol") {
  const auto eig = eigenvalues(scalar_example_symbol());
  REQUIRE(eig.size() == 2);
  CHECK(std::abs(eig[0] - 1.0) < 1e-12);
  CHECK(std::abs(eig[1] - kLambda51) < 1e-12);
  CHECK(eig[1].real() == doctest::Approx(-0.4114378).epsilon(1e-7));
}

TEST_CASE("eigenvalues of identity") {
  const auto eig = eigenvalues(Matrix::Identity(3, 3));
  REQUIRE(eig.size() == 3);
  for (const auto& l : eig) CHECK(std::abs(l - 1.0) < 1e-15);
}

TEST_CASE("eigenvalues of the multiplicity-two example") {
  const auto eig = eigenvalues(doubled_mask_at_one(bundled_example("example_5_2").scaling));
  REQUIRE(eig.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(eig[i] - kLambda52[i]) < 1e-10);
  CHECK(eig[2].real() == doctest::Approx(-0.2057).epsilon(1e-4));
  CHECK(eig[3].real() == doctest::Approx(-0.4114).epsilon(1e-4));
}

TEST_CASE("eigenvalues reject bad input") {
  CHECK_THROWS_AS(eigenvalues(Matrix(2, 3)), std::invalid_argument);
  Matrix nan = Matrix::Identity(2, 2);
  nan(0, 0) = std::nan("");
  CHECK_THROWS_AS(eigenvalues(nan), std::invalid_argument);
}

TEST_CASE("property: eigenvalue residuals on matrices with known spectra") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    Matrix block = Matrix::Zero(n, n);
    std::vector<std::complex<double>> expected;
    int i = 0;
    while (i < n) {
      if (i + 1 < n && trial % 2) {
        // rotation-scaling block: eigenvalues a +- ib
        const double a = u(rng), b = 0.2 + std::abs(u(rng));
        block(i, i) = a;
        block(i, i + 1) = b;
        block(i + 1, i) = -b;
        block(i + 1, i + 1) = a;
        expected.emplace_back(a, b);
        expected.emplace_back(a, -b);
        i += 2;
      } else {
        block(i, i) = u(rng);
        expected.emplace_back(block(i, i), 0.0);
        ++i;
      }
    }
    const Matrix v = Matrix::Identity(n, n) + random_matrix(rng, n, n, 0.3);
    const Matrix a = v * block * v.inverse();
    const auto eig = eigenvalues(a);
    REQUIRE(eig.size() == static_cast<std::size_t>(n));
    const double norm = a.norm();
    for (const auto& l : eig) CHECK(smallest_singular_value(a, l) <= 1e-8 * norm);
    for (const auto& e : expected) {
      const double best = std::abs(*std::min_element(eig.begin(), eig.end(), [&](auto x, auto y) {
                                     return std::abs(x - e) < std::abs(y - e);
                                   }) - e);
      CHECK(best < 1e-8);
    }
  }
}

TEST_CASE("condition E verdicts") {
  const auto ok = condition_e(scalar_example_symbol());
  CHECK(ok.satisfied);
  CHECK(ok.has_simple_one);
  CHECK(ok.spectral_ok);
  CHECK(ok.tolerance_used == kEigenOneTolerance);

  const auto identity = condition_e(Matrix::Identity(2, 2));
  CHECK_FALSE(identity.satisfied);
  CHECK_FALSE(identity.has_simple_one);

  const auto half = condition_e(0.5 * Matrix::Identity(2, 2));
  CHECK_FALSE(half.satisfied);
  CHECK_FALSE(half.has_simple_one);
  CHECK(half.spectral_ok);

  Matrix outside(2, 2);
  outside << 1, 0, 0, -1.5;
  const auto big = condition_e(outside);
  CHECK(big.has_simple_one);
  CHECK_FALSE(big.spectral_ok);
  CHECK_FALSE(big.satisfied);

  Matrix rotation(3, 3);
  rotation << 1, 0, 0, 0, 0, -1, 0, 1, 0;  // eigenvalues 1, +-i on the unit circle
  CHECK_FALSE(condition_e(rotation).satisfied);
}

TEST_CASE("unit eigenvector for eigenvalue 1") {
  const Vector v = unit_eigvec(scalar_example_symbol());
  CHECK(v(0) == doctest::Approx(1 / kSqrt2).epsilon(1e-12));
  CHECK(v(1) == doctest::Approx(1 / kSqrt2).epsilon(1e-12));

  Matrix diag = Matrix::Zero(2, 2);
  diag(0, 0) = 1.0;
  diag(1, 1) = 0.3;
  const Vector e = unit_eigvec(diag);
  CHECK(e(0) == doctest::Approx(1.0));
  CHECK(std::abs(e(1)) < 1e-15);

  const auto m0 = discrete_moment_phi(bundled_example("example_5_2").scaling, 0).total;
  const Vector w = unit_eigvec(m0);
  CHECK(w(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(w(1)) < 1e-12);
}

TEST_CASE("unit eigenvector sign convention and failure modes") {
  Matrix a(2, 2);
  a << 0.2, 0.0, 0.0, 1.0;
  CHECK(unit_eigvec(a)(1) == doctest::Approx(1.0));
  CHECK_THROWS_WITH_AS(unit_eigvec(Matrix::Identity(2, 2)),
                       doctest::Contains("Condition E prerequisite failed"), ConditionEError);
  CHECK_THROWS_WITH_AS(unit_eigvec(0.5 * Matrix::Identity(2, 2)),
                       doctest::Contains("Condition E prerequisite failed"), ConditionEError);
}

TEST_CASE("property: unit eigenvector normalization and residual") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    Vector eigs(n);
    eigs(0) = 1.0;
    std::uniform_real_distribution<double> inside(-0.9, 0.9);
    for (int i = 1; i < n; ++i) eigs(i) = inside(rng);
    const Matrix a = with_spectrum(rng, eigs);
    const Vector v = unit_eigvec(a);
    CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK((a * v - v).norm() <= 1e-9);
    Eigen::Index lead;
    v.cwiseAbs().maxCoeff(&lead);
    CHECK(v(lead) > 0);
  }
}

TEST_CASE("solve") {
  const Vector b = Vector::LinSpaced(3, 1.0, 3.0);
  CHECK((solve(Matrix::Identity(3, 3), b) - b).cwiseAbs().maxCoeff() == 0.0);

  Matrix a(2, 2);
  a << 2, 0, 0, 4;
  const Vector x = solve(a, Vector::Ones(2));
  CHECK(x(0) == 0.5);
  CHECK(x(1) == 0.25);

  // first continuous moment of the scalar example's doubled function
  const auto bundle = bundled_example("example_5_1");
  const Matrix m0 = discrete_moment_phi(bundle.scaling, 0).doubled;
  const Matrix m1 = discrete_moment_phi(bundle.scaling, 1).doubled;
  const Vector seed = Vector::Constant(2, kM0);
  const Vector first = solve(2 * Matrix::Identity(2, 2) - m0, m1 * seed);
  CHECK(first(0) == doctest::Approx(kM1).epsilon(1e-13));
  CHECK(first(1) == doctest::Approx(-kM1).epsilon(1e-13));
}

TEST_CASE("solve reports singular systems") {
  Matrix a(2, 2);
  a << 1, 2, 2, 4;
  try {
    solve(a, Vector::Ones(2));
    FAIL("expected SingularSystemError");
  } catch (const SingularSystemError& e) {
    CHECK(std::string(e.what()).find("singular system") != std::string::npos);
    CHECK(e.pivot() < 1e-12);
  }
  CHECK_THROWS_AS(solve(Matrix::Zero(3, 3), Vector::Ones(3)), SingularSystemError);
  CHECK_THROWS_AS(solve(Matrix::Identity(2, 2), Vector::Ones(3)), std::invalid_argument);
}

TEST_CASE("property: solve residual on random well-conditioned systems") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 8;
    const Matrix a = Matrix::Identity(n, n) * 2.0 + random_matrix(rng, n, n, 1.0);
    const Vector b = random_matrix(rng, n, 1, 5.0);
    const Vector x = solve(a, b);
    CHECK((a * x - b).norm() <= 1e-10 * (a.norm() * x.norm() + b.norm()));
  }
}
