#include "twodir/doubling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "twodir/discrete_moments.hpp"
#include "twodir/errors.hpp"

namespace twodir {

Vector extract_upper(const Vector& v) {
  if (v.size() % 2 != 0) {
    throw std::invalid_argument("extract_upper: odd length " + std::to_string(v.size()));
  }
  return v.head(v.size() / 2);
}

DoubledMoments moments_by_doubling(const MaskBundle& bundle, int order_max,
                                   const MomentOptions& options) {
  if (order_max < 0 || order_max > kDefaultMaxOrder) {
    throw std::out_of_range("moment order " + std::to_string(order_max) +
                            " outside [0, " + std::to_string(kDefaultMaxOrder) + "]");
  }
  const auto& mask = bundle.scaling;
  const int d = mask.dilation;
  const int n = 2 * mask.multiplicity;

  std::vector<Matrix> big_m;
  for (int j = 0; j <= order_max; ++j) big_m.push_back(discrete_moment_phi(mask, j).doubled);

  const auto report = condition_e(big_m[0], options.eigen_tolerance);
  if (!report.satisfied) {
    throw ConditionEError("Condition E fails for the doubled mask symbol at 1");
  }

  DoubledMoments out;
  out.order_max = order_max;
  out.m_doubled.push_back(unit_eigvec(big_m[0], options.eigen_tolerance));
  if (options.flip_sign) out.m_doubled[0] = -out.m_doubled[0];

  const Matrix identity = Matrix::Identity(n, n);
  for (int j = 1; j <= order_max; ++j) {
    Vector rhs = Vector::Zero(n);
    for (int l = 0; l < j; ++l) {
      rhs += static_cast<double>(binomial(j, l)) * (big_m[j - l] * out.m_doubled[l]);
    }
    const Matrix lhs = std::pow(static_cast<double>(d), j) * identity - big_m[0];
    try {
      out.m_doubled.push_back(solve(lhs, rhs));
    } catch (const SingularSystemError& e) {
      throw SingularSystemError("doubling recursion at j = " + std::to_string(j) + ": " +
                                    e.what(),
                                e.pivot());
    }
  }

  for (const auto& w : bundle.wavelets) {
    std::vector<Matrix> big_n;
    for (int j = 0; j <= order_max; ++j) {
      big_n.push_back(discrete_moment_psi(w, d, mask.multiplicity, j).doubled);
    }
    auto& series = out.n_doubled[w.branch];
    for (int j = 0; j <= order_max; ++j) {
      Vector acc = Vector::Zero(n);
      for (int l = 0; l <= j; ++l) {
        acc += static_cast<double>(binomial(j, l)) * (big_n[j - l] * out.m_doubled[l]);
      }
      series.push_back(acc / std::pow(static_cast<double>(d), j));
    }
  }

  out.extracted.method = Method::Doubling;
  out.extracted.order_max = order_max;
  for (const auto& m : out.m_doubled) out.extracted.phi.push_back(extract_upper(m));
  for (const auto& [s, series] : out.n_doubled) {
    auto& dst = out.extracted.psi[s];
    for (const auto& v : series) dst.push_back(extract_upper(v));
  }
  return out;
}

}  // namespace twodir
