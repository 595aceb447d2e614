#include <algorithm>
#include <cmath>

#include "twodir/kernels.hpp"

namespace twodir::kernels {

void refine_serial(const RefinementPlan& plan, std::span<const double> in,
                   std::span<double> out) {
  const int c = plan.components;
  std::fill(out.begin(), out.end(), 0.0);
  for (std::int64_t i = 0; i < plan.points; ++i) {
    double* dst = out.data() + i * c;
    for (std::size_t s = 0; s < plan.shifts.size(); ++s) {
      const std::int64_t src = plan.source(i, s);
      if (src < 0 || src >= plan.points) continue;
      const double* x = in.data() + src * c;
      const double* a = plan.blocks[s].data();
      for (int row = 0; row < c; ++row) {
        double acc = 0.0;
        for (int col = 0; col < c; ++col) acc += a[row * c + col] * x[col];
        dst[row] += acc;
      }
    }
  }
}

void moment_serial(double x_min, double spacing, int components,
                   std::span<const double> values, int order, std::span<double> result) {
  std::fill(result.begin(), result.end(), 0.0);
  const std::int64_t points = static_cast<std::int64_t>(values.size()) / components;
  for (std::int64_t i = 0; i < points; ++i) {
    const double mid = x_min + (static_cast<double>(i) + 0.5) * spacing;
    const double w = std::pow(mid, order) * spacing;
    for (int c = 0; c < components; ++c) result[c] += w * values[i * components + c];
  }
}

}  // namespace twodir::kernels
