#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <stdexcept>
#include <string>

#include "twodir/analysis.hpp"
#include "twodir/discrete_moments.hpp"
#include "twodir/errors.hpp"
#include "twodir/kernels.hpp"
#include "twodir/spectral.hpp"

namespace twodir {

namespace {

constexpr std::int64_t kMaxGridPoints = std::int64_t{1} << 27;

kernels::RefinementPlan make_plan(const CoefficientMask& mask, int level) {
  kernels::RefinementPlan plan;
  plan.dilation = mask.dilation;
  plan.components = 2 * mask.multiplicity;
  plan.radius = cascade_radius(mask);

  std::int64_t scale = 1;
  for (int i = 0; i < level; ++i) {
    scale *= mask.dilation;
    if (scale > kMaxGridPoints) break;
  }
  plan.cells_per_unit = scale;
  plan.points = 2 * plan.radius * scale;
  if (scale > kMaxGridPoints || plan.points > kMaxGridPoints) {
    throw std::invalid_argument("cascade grid too large: level " + std::to_string(level) +
                                " at dilation " + std::to_string(mask.dilation));
  }

  const double root_d = std::sqrt(static_cast<double>(mask.dilation));
  const Support range = doubled_support(mask);
  for (int k = range.lo; k <= range.hi; ++k) {
    const Matrix c = doubled_coefficient(mask, k);
    if (c.isZero(0.0)) continue;
    std::vector<double> block(static_cast<std::size_t>(c.size()));
    for (int row = 0; row < c.rows(); ++row) {
      for (int col = 0; col < c.cols(); ++col) {
        block[static_cast<std::size_t>(row * c.cols() + col)] = root_d * c(row, col);
      }
    }
    plan.shifts.push_back(k);
    plan.blocks.push_back(std::move(block));
  }
  return plan;
}

}  // namespace

int cascade_radius(const CoefficientMask& mask) {
  const Support range = doubled_support(mask);
  const int span = std::max(range.hi, -range.lo);
  const int d1 = mask.dilation - 1;
  return std::max(1, (span + d1 - 1) / d1);
}

SampledFunction cascade_samples(const CoefficientMask& mask, int iterations, int level,
                                 Execution exec, const MomentOptions& options) {
  if (iterations < 0) throw std::invalid_argument("cascade: negative iteration count");
  if (level < iterations) {
    throw std::invalid_argument("cascade grid/support mismatch: level " +
                                std::to_string(level) + " cannot resolve " +
                                std::to_string(iterations) + " iterations");
  }
  const Matrix m0 = doubled_mask_at_one(mask);
  if (!condition_e(m0, options.eigen_tolerance).satisfied) {
    throw ConditionEError("Condition E fails for the doubled mask symbol at 1");
  }
  Vector start = unit_eigvec(m0, options.eigen_tolerance);
  if (options.flip_sign) start = -start;

  const auto plan = make_plan(mask, level);
  SampledFunction f;
  f.dilation = mask.dilation;
  f.level = level;
  f.iterations = iterations;
  f.components = plan.components;
  f.x_min = -plan.radius;
  f.spacing = 1.0 / static_cast<double>(plan.cells_per_unit);
  f.values.assign(static_cast<std::size_t>(plan.points * plan.components), 0.0);

  // chi_[0,1): cells radius*d^L .. (radius+1)*d^L - 1
  const std::int64_t first = plan.radius * plan.cells_per_unit;
  for (std::int64_t i = first; i < first + plan.cells_per_unit; ++i) {
    for (int c = 0; c < plan.components; ++c) {
      f.values[static_cast<std::size_t>(i * plan.components + c)] = start(c);
    }
  }

  std::vector<double> scratch(f.values.size());
  for (int it = 0; it < iterations; ++it) {
    if (exec == Execution::Parallel) {
      kernels::refine_parallel(plan, f.values, scratch);
    } else {
      kernels::refine_serial(plan, f.values, scratch);
    }
    f.values.swap(scratch);
  }
  return f;
}

Vector quadrature_moment(const SampledFunction& f, int order, Execution exec) {
  Vector result = Vector::Zero(f.components);
  if (f.components == 0) return result;
  std::span<double> out(result.data(), static_cast<std::size_t>(result.size()));
  if (exec == Execution::Parallel) {
    kernels::moment_parallel(f.x_min, f.spacing, f.components, f.values, order, out);
  } else {
    kernels::moment_serial(f.x_min, f.spacing, f.components, f.values, order, out);
  }
  return result;
}

OracleReport oracle_check(const MaskBundle& bundle, int iterations, int level,
                          int order_max, const MomentOptions& options) {
  const auto recursion = moments_by_doubling(bundle, order_max, options);
  const auto f = cascade_samples(bundle.scaling, iterations, level, Execution::Parallel,
                                 options);
  OracleReport report;
  report.iterations = iterations;
  report.level = level;
  for (int j = 0; j <= order_max; ++j) {
    Vector q = quadrature_moment(f, j);
    report.deviation.push_back((q - recursion.m_doubled[j]).cwiseAbs().maxCoeff());
    report.quadrature.push_back(std::move(q));
    report.recursion.push_back(recursion.m_doubled[j]);
  }
  return report;
}

void write_csv(const SampledFunction& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << "x";
  for (int c = 1; c <= f.components; ++c) out << ",component_" << c;
  out << '\n' << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t i = 0; i < f.points(); ++i) {
    out << f.x(i);
    for (int c = 0; c < f.components; ++c) out << ',' << f.value(i, c);
    out << '\n';
  }
  if (!out) throw Error("write failed: " + path);
}

}  // namespace twodir
