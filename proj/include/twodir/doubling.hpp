#pragma once

#include <map>
#include <vector>

#include "twodir/mask.hpp"
#include "twodir/moment_table.hpp"
#include "twodir/spectral.hpp"

namespace twodir {

inline constexpr int kDefaultOrder = 8;

struct MomentOptions {
  double eigen_tolerance = kEigenOneTolerance;
  /// Flip the global sign of the zeroth moment (and hence of every moment).
  bool flip_sign = false;
};

/// Moments of the doubled functions Phi = [phi(x), phi(-x)] and
/// Psi^(s) = [psi^(s)(x), psi^(s)(-x)], plus the phi/psi moments read off
/// their upper halves.
struct DoubledMoments {
  int order_max = 0;
  std::vector<Vector> m_doubled;
  std::map<int, std::vector<Vector>> n_doubled;
  MomentTable extracted;
};

/// m_0 is the unit eigenvector of M_0^{+-} for eigenvalue 1. For j >= 1,
///   (d^j I - M_0^{+-}) m_j = sum_{l<j} C(j,l) M_{j-l}^{+-} m_l,
/// and for every branch s and j >= 0,
///   n_j^(s) = d^-j sum_{l<=j} C(j,l) N_{j-l}^(s){+-} m_l.
/// Throws ConditionEError if the doubled mask at 1 fails the eigenvalue test.
DoubledMoments moments_by_doubling(const MaskBundle& bundle, int order_max,
                                   const MomentOptions& options = {});

/// First half of an even-length vector.
Vector extract_upper(const Vector& v);

}  // namespace twodir
