#include "twodir/separation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "twodir/discrete_moments.hpp"
#include "twodir/errors.hpp"
#include "twodir/spectral.hpp"

namespace twodir {

namespace {

Vector normalized_zeroth_moment(const Matrix& m0, const MomentOptions& options) {
  const auto report = condition_e(m0, options.eigen_tolerance);
  if (!report.satisfied) {
    throw ConditionEError("Condition E fails for the zeroth discrete moment M_0");
  }
  Vector v = unit_eigvec(m0, options.eigen_tolerance) * std::sqrt(0.5);
  return options.flip_sign ? Vector(-v) : v;
}

}  // namespace

MomentTable moments_by_separation(const MaskBundle& bundle, int order_max,
                                  const MomentOptions& options) {
  if (order_max < 0 || order_max > kDefaultMaxOrder) {
    throw std::out_of_range("moment order " + std::to_string(order_max) +
                            " outside [0, " + std::to_string(kDefaultMaxOrder) + "]");
  }
  const auto& mask = bundle.scaling;
  const int d = mask.dilation;
  const int r = mask.multiplicity;

  std::vector<DiscreteMomentSet> big_m;
  for (int j = 0; j <= order_max; ++j) big_m.push_back(discrete_moment_phi(mask, j));

  MomentTable out;
  out.method = Method::Separation;
  out.order_max = order_max;
  out.phi.push_back(normalized_zeroth_moment(big_m[0].total, options));

  const Matrix identity = Matrix::Identity(r, r);
  for (int j = 1; j <= order_max; ++j) {
    Vector rhs = Vector::Zero(r);
    for (int l = 0; l < j; ++l) {
      rhs += static_cast<double>(binomial(j, l)) * (big_m[j - l].signed_sum(l) * out.phi[l]);
    }
    const Matrix lhs = std::pow(static_cast<double>(d), j) * identity - big_m[0].signed_sum(j);
    try {
      out.phi.push_back(solve(lhs, rhs));
    } catch (const SingularSystemError& e) {
      throw SingularSystemError("separation recursion at j = " + std::to_string(j) + ": " +
                                    e.what(),
                                e.pivot());
    }
  }

  for (const auto& w : bundle.wavelets) {
    auto& series = out.psi[w.branch];
    std::vector<DiscreteMomentSet> big_n;
    for (int j = 0; j <= order_max; ++j) big_n.push_back(discrete_moment_psi(w, d, r, j));
    for (int j = 0; j <= order_max; ++j) {
      Vector acc = Vector::Zero(r);
      for (int l = 0; l <= j; ++l) {
        acc += static_cast<double>(binomial(j, l)) * (big_n[j - l].signed_sum(l) * out.phi[l]);
      }
      series.push_back(acc / std::pow(static_cast<double>(d), j));
    }
  }
  return out;
}

ClosedFormReport closed_form_check(const MaskBundle& bundle, const MomentOptions& options) {
  const auto& mask = bundle.scaling;
  const double d = mask.dilation;
  const int r = mask.multiplicity;
  const Matrix id = Matrix::Identity(r, r);

  DiscreteMomentSet M[4];
  for (int j = 0; j < 4; ++j) M[j] = discrete_moment_phi(mask, j);

  Vector m[4];
  m[0] = normalized_zeroth_moment(M[0].total, options);
  m[1] = solve(d * id - M[0].positive + M[0].negative, M[1].total * m[0]);
  m[2] = solve(d * d * id - M[0].total,
               M[2].total * m[0] + 2.0 * (M[1].positive - M[1].negative) * m[1]);
  m[3] = solve(d * d * d * id - M[0].positive + M[0].negative,
               M[3].total * m[0] + 3.0 * (M[2].positive - M[2].negative) * m[1] +
                   3.0 * M[1].total * m[2]);

  const MomentTable general = moments_by_separation(bundle, 3, options);

  ClosedFormReport report;
  auto record = [&report](int j, const Vector& a, const Vector& b) {
    const double dev = (a - b).cwiseAbs().maxCoeff();
    report.max_abs_deviation[j] = std::max(report.max_abs_deviation[j], dev);
    report.overall = std::max(report.overall, dev);
  };
  for (int j = 0; j < 4; ++j) record(j, m[j], general.phi[j]);

  for (const auto& w : bundle.wavelets) {
    DiscreteMomentSet N[4];
    for (int j = 0; j < 4; ++j) N[j] = discrete_moment_psi(w, mask.dilation, r, j);
    Vector n[4];
    n[0] = N[0].total * m[0];
    n[1] = (N[1].total * m[0] + (N[0].positive - N[0].negative) * m[1]) / d;
    n[2] = (N[2].total * m[0] + 2.0 * (N[1].positive - N[1].negative) * m[1] +
            N[0].total * m[2]) /
           (d * d);
    n[3] = (N[3].total * m[0] + 3.0 * (N[2].positive - N[2].negative) * m[1] +
            3.0 * N[1].total * m[2] + (N[0].positive - N[0].negative) * m[3]) /
           (d * d * d);
    const auto& series = general.psi.at(w.branch);
    for (int j = 0; j < 4; ++j) record(j, n[j], series[j]);
  }
  return report;
}

}  // namespace twodir
