#pragma once

// Random masks whose doubled symbol at 1 satisfies Condition E by
// construction. The doubled symbol [[A, B], [B, A]] has the spectrum of
// A + B together with that of A - B, so both sums are steered to targets
// V diag(...) V^-1 with prescribed eigenvalues by correcting one translation.

#include <random>

#include "twodir/mask.hpp"

namespace twodir::testing {

inline Matrix random_matrix(std::mt19937& rng, int rows, int cols, double half_width) {
  std::uniform_real_distribution<double> u(-half_width, half_width);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = u(rng);
  return m;
}

/// V diag(eigs) V^-1 with V = I + small perturbation (well conditioned).
inline Matrix with_spectrum(std::mt19937& rng, const Vector& eigs) {
  const int n = static_cast<int>(eigs.size());
  const Matrix v = Matrix::Identity(n, n) + random_matrix(rng, n, n, 0.3);
  return v * eigs.asDiagonal() * v.inverse();
}

inline MaskBundle random_condition_e_bundle(std::mt19937& rng, int r, int d, int k_lo,
                                            int k_hi, int branches = 1) {
  std::uniform_real_distribution<double> inside(-0.6, 0.6);
  MaskBundle b;
  b.scaling.name = "random";
  b.scaling.dilation = d;
  b.scaling.multiplicity = r;
  b.scaling.support = {k_lo, k_hi};
  for (int k = k_lo; k <= k_hi; ++k) {
    b.scaling.positive[k] = random_matrix(rng, r, r, 0.5);
    b.scaling.negative[k] = random_matrix(rng, r, r, 0.5);
  }
  const double root_d = std::sqrt(static_cast<double>(d));
  Matrix sum_pos = Matrix::Zero(r, r), sum_neg = Matrix::Zero(r, r);
  for (int k = k_lo; k <= k_hi; ++k) {
    sum_pos += b.scaling.positive[k];
    sum_neg += b.scaling.negative[k];
  }
  Vector plus_eigs(r), minus_eigs(r);
  plus_eigs(0) = 1.0;
  for (int i = 1; i < r; ++i) plus_eigs(i) = inside(rng);
  for (int i = 0; i < r; ++i) minus_eigs(i) = inside(rng);
  const Matrix target_plus = with_spectrum(rng, plus_eigs);
  const Matrix target_minus = with_spectrum(rng, minus_eigs);
  const Matrix delta_plus = target_plus - (sum_pos + sum_neg) / root_d;
  const Matrix delta_minus = target_minus - (sum_pos - sum_neg) / root_d;
  b.scaling.positive[k_lo] += root_d * (delta_plus + delta_minus) / 2;
  b.scaling.negative[k_lo] += root_d * (delta_plus - delta_minus) / 2;

  for (int s = 1; s <= branches && s < d; ++s) {
    WaveletMask w;
    w.branch = s;
    w.support = {k_lo, k_hi};
    for (int k = k_lo; k <= k_hi; ++k) {
      w.positive[k] = random_matrix(rng, r, r, 0.5);
      w.negative[k] = random_matrix(rng, r, r, 0.5);
    }
    b.wavelets.push_back(std::move(w));
  }
  return b;
}

}  // namespace twodir::testing
