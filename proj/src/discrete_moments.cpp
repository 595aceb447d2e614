#include "twodir/discrete_moments.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace twodir {

namespace {

// 0^0 == 1 so that order 0 reduces to the plain coefficient sum.
double int_pow(int k, int j) {
  double result = 1.0;
  for (int i = 0; i < j; ++i) result *= k;
  return result;
}

Matrix weighted_sum(const std::map<int, Matrix>& table, int r, int j, bool reflect) {
  Matrix sum = Matrix::Zero(r, r);
  for (const auto& [k, m] : table) {
    // sum_k k^j X_{-k} == sum_k (-k)^j X_k
    sum += int_pow(reflect ? -k : k, j) * m;
  }
  return sum;
}

DiscreteMomentSet assemble(const std::map<int, Matrix>& pos,
                           const std::map<int, Matrix>& neg, int d, int r, int j,
                           int max_order) {
  if (j < 0 || j > max_order) {
    throw std::out_of_range("discrete moment order " + std::to_string(j) +
                            " outside [0, " + std::to_string(max_order) + "]");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  DiscreteMomentSet set;
  set.order = j;
  set.positive = scale * weighted_sum(pos, r, j, false);
  set.negative = scale * weighted_sum(neg, r, j, false);
  set.total = set.positive + set.negative;
  set.doubled.resize(2 * r, 2 * r);
  set.doubled.topLeftCorner(r, r) = set.positive;
  set.doubled.topRightCorner(r, r) = set.negative;
  set.doubled.bottomLeftCorner(r, r) = scale * weighted_sum(neg, r, j, true);
  set.doubled.bottomRightCorner(r, r) = scale * weighted_sum(pos, r, j, true);
  return set;
}

}  // namespace

DiscreteMomentSet discrete_moment_phi(const CoefficientMask& mask, int order,
                                      int max_order) {
  return assemble(mask.positive, mask.negative, mask.dilation, mask.multiplicity,
                  order, max_order);
}

DiscreteMomentSet discrete_moment_psi(const WaveletMask& wmask, int dilation,
                                      int multiplicity, int order, int max_order) {
  return assemble(wmask.positive, wmask.negative, dilation, multiplicity, order,
                  max_order);
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n || n > 62) {
    throw std::out_of_range("binomial(" + std::to_string(n) + ", " +
                            std::to_string(k) + ")");
  }
  if (k > n - k) k = n - k;
  std::uint64_t c = 1;
  // c * (n - k + i) / i stays integral at each step.
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / i;
  return c;
}

}  // namespace twodir
