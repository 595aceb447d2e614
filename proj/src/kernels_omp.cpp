#include <algorithm>
#include <cmath>

#include "twodir/kernels.hpp"

namespace twodir::kernels {

void refine_parallel(const RefinementPlan& plan, std::span<const double> in,
                     std::span<double> out) {
  const int c = plan.components;
  const std::int64_t points = plan.points;
  const std::size_t shifts = plan.shifts.size();
  const double* src_data = in.data();
  double* dst_data = out.data();

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < points; ++i) {
    double* dst = dst_data + i * c;
    for (int row = 0; row < c; ++row) dst[row] = 0.0;
    for (std::size_t s = 0; s < shifts; ++s) {
      const std::int64_t src = plan.source(i, s);
      if (src < 0 || src >= points) continue;
      const double* x = src_data + src * c;
      const double* a = plan.blocks[s].data();
      for (int row = 0; row < c; ++row) {
        double acc = 0.0;
        for (int col = 0; col < c; ++col) acc += a[row * c + col] * x[col];
        dst[row] += acc;
      }
    }
  }
}

void moment_parallel(double x_min, double spacing, int components,
                     std::span<const double> values, int order, std::span<double> result) {
  std::fill(result.begin(), result.end(), 0.0);
  const std::int64_t points = static_cast<std::int64_t>(values.size()) / components;
  const double* v = values.data();
  double* acc = result.data();

#pragma omp parallel for schedule(static) reduction(+ : acc[:components])
  for (std::int64_t i = 0; i < points; ++i) {
    const double mid = x_min + (static_cast<double>(i) + 0.5) * spacing;
    const double w = std::pow(mid, order) * spacing;
    for (int c = 0; c < components; ++c) acc[c] += w * v[i * components + c];
  }
}

}  // namespace twodir::kernels
