#pragma once

#include <span>
#include <string>
#include <vector>

#include "twodir/doubling.hpp"
#include "twodir/mask.hpp"
#include "twodir/moment_table.hpp"

namespace twodir {

struct ComparisonReport {
  /// Largest |a - b| over m_j and every n_j^(s) entry, per order j.
  std::vector<double> per_order;
  double overall = 0;
  double tolerance = 0;
  bool pass = false;
};

/// Elementwise comparison of two moment tables of the same shape.
ComparisonReport compare_tables(const MomentTable& a, const MomentTable& b, double tol);

/// Runs both pipelines and compares the doubling-extracted moments with the
/// separation moments.
ComparisonReport compare_methods(const MaskBundle& bundle, int order_max, double tol,
                                 const MomentOptions& options = {});

struct VanishingReport {
  /// Largest p with ||n_j||_inf <= tol for all j < p.
  int count = 0;
  /// True when every supplied order vanished, so count is only a lower bound.
  bool exhausted = false;
};

VanishingReport vanishing_moments(std::span<const Vector> n_series, double tol);

// ---------------------------------------------------------------------------
// Cascade oracle

enum class Execution { Serial, Parallel };

/// Piecewise-constant samples of Phi on cells [x_i, x_i + spacing),
/// x_i = x_min + i * spacing, spacing = d^-level.
struct SampledFunction {
  int dilation = 2;
  int level = 0;
  int iterations = 0;
  int components = 0;
  double x_min = 0;
  double spacing = 1;
  std::vector<double> values;  // point-major, `components` values per cell

  std::size_t points() const noexcept {
    return components ? values.size() / static_cast<std::size_t>(components) : 0;
  }
  double x(std::size_t i) const noexcept { return x_min + static_cast<double>(i) * spacing; }
  double x_max() const noexcept { return x(points()); }
  double value(std::size_t i, int component) const noexcept {
    return values[i * static_cast<std::size_t>(components) + component];
  }
};

/// Half-width R of the symmetric grid [-R, R]: the support of the doubled
/// refinement, [k_lo, k_hi] / (d - 1), rounded out to integers and
/// symmetrized, and never smaller than 1 so the initial box fits.
int cascade_radius(const CoefficientMask& mask);

/// Applies the doubled refinement operator `iterations` times to the box
/// profile m_0^{+-} * chi_[0,1). Requires iterations <= level so that every
/// iterate is exactly representable on the grid.
SampledFunction cascade_samples(const CoefficientMask& mask, int iterations, int level,
                                 Execution exec = Execution::Parallel,
                                 const MomentOptions& options = {});

/// Midpoint-rule approximation of int x^j f(x) dx, one entry per component.
Vector quadrature_moment(const SampledFunction& f, int order,
                         Execution exec = Execution::Parallel);

struct OracleReport {
  int iterations = 0;
  int level = 0;
  /// max_i |quadrature m_j^{+-}(i) - recursion m_j^{+-}(i)| for j = 0..order_max.
  std::vector<double> deviation;
  std::vector<Vector> quadrature;
  std::vector<Vector> recursion;
};

OracleReport oracle_check(const MaskBundle& bundle, int iterations, int level,
                          int order_max, const MomentOptions& options = {});

/// Writes `x,component_1,...,component_{2r}` followed by one row per cell.
void write_csv(const SampledFunction& f, const std::string& path);

}  // namespace twodir
