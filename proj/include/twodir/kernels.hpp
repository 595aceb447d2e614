#pragma once

// Data-parallel inner loops of the cascade oracle. Each kernel has a serial
// reference and an OpenMP version; the two must agree (bit-exactly for the
// refinement step, to rounding for the reductions).

#include <cstdint>
#include <span>
#include <vector>

#include "twodir/types.hpp"

namespace twodir::kernels {

/// Precomputed data for one application of
///   Phi_new(x) = sqrt(d) sum_k C_k Phi_old(d x - k)
/// on the cell grid x_i = -radius + i * d^-level, i = 0..points-1.
struct RefinementPlan {
  int dilation = 2;
  int components = 2;
  int radius = 1;
  std::int64_t cells_per_unit = 1;  // d^level
  std::int64_t points = 0;
  std::vector<int> shifts;
  /// sqrt(d) * C_k for each shift, row-major components x components.
  std::vector<std::vector<double>> blocks;

  /// Source cell index of d x_i - k, or a value outside [0, points).
  std::int64_t source(std::int64_t i, std::size_t shift_index) const noexcept {
    return dilation * i -
           (static_cast<std::int64_t>(dilation - 1) * radius + shifts[shift_index]) *
               cells_per_unit;
  }
};

void refine_serial(const RefinementPlan& plan, std::span<const double> in,
                   std::span<double> out);
void refine_parallel(const RefinementPlan& plan, std::span<const double> in,
                     std::span<double> out);

/// Midpoint rule for int x^j f(x) dx over piecewise-constant cells
/// [x_min + i h, x_min + (i+1) h); writes one value per component.
void moment_serial(double x_min, double spacing, int components,
                   std::span<const double> values, int order, std::span<double> result);
void moment_parallel(double x_min, double spacing, int components,
                     std::span<const double> values, int order, std::span<double> result);

}  // namespace twodir::kernels
