#include "twodir/analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "twodir/separation.hpp"

namespace twodir {

namespace {

double max_abs_diff(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("compare: vector length " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
  }
  return a.size() ? (a - b).cwiseAbs().maxCoeff() : 0.0;
}

}  // namespace

ComparisonReport compare_tables(const MomentTable& a, const MomentTable& b, double tol) {
  if (a.phi.size() != b.phi.size()) {
    throw std::invalid_argument("compare: tables have different orders");
  }
  if (a.psi.size() != b.psi.size()) {
    throw std::invalid_argument("compare: tables have different wavelet branches");
  }
  ComparisonReport report;
  report.tolerance = tol;
  report.per_order.assign(a.phi.size(), 0.0);
  for (std::size_t j = 0; j < a.phi.size(); ++j) {
    report.per_order[j] = max_abs_diff(a.phi[j], b.phi[j]);
  }
  for (const auto& [s, series] : a.psi) {
    auto it = b.psi.find(s);
    if (it == b.psi.end() || it->second.size() != series.size()) {
      throw std::invalid_argument("compare: branch " + std::to_string(s) + " mismatch");
    }
    for (std::size_t j = 0; j < series.size(); ++j) {
      report.per_order[j] =
          std::max(report.per_order[j], max_abs_diff(series[j], it->second[j]));
    }
  }
  for (double v : report.per_order) report.overall = std::max(report.overall, v);
  report.pass = report.overall <= tol;
  return report;
}

ComparisonReport compare_methods(const MaskBundle& bundle, int order_max, double tol,
                                 const MomentOptions& options) {
  const auto doubled = moments_by_doubling(bundle, order_max, options);
  const auto separated = moments_by_separation(bundle, order_max, options);
  return compare_tables(doubled.extracted, separated, tol);
}

VanishingReport vanishing_moments(std::span<const Vector> n_series, double tol) {
  if (n_series.empty()) throw std::invalid_argument("vanishing_moments: empty series");
  VanishingReport report;
  for (const auto& n : n_series) {
    const double norm = n.size() ? n.cwiseAbs().maxCoeff() : 0.0;
    if (!(norm <= tol)) return report;
    ++report.count;
  }
  report.exhausted = true;
  return report;
}

}  // namespace twodir
