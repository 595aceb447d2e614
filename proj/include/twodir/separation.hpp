#pragma once

#include "twodir/doubling.hpp"
#include "twodir/mask.hpp"
#include "twodir/moment_table.hpp"

namespace twodir {

/// Moments of phi and psi^(s) computed at size r from the positive/negative
/// split of the discrete moments:
///   m_0 = M_0 m_0 with m_0^T m_0 = 1/2,
///   (d^j I - [M_0^+ + (-1)^j M_0^-]) m_j
///       = sum_{l<j} C(j,l) [M_{j-l}^+ + (-1)^l M_{j-l}^-] m_l,
///   n_j^(s) = d^-j sum_{l<=j} C(j,l) [N_{j-l}^(s)+ + (-1)^l N_{j-l}^(s)-] m_l.
/// Throws ConditionEError if M_0 = M_0^+ + M_0^- fails the eigenvalue test.
MomentTable moments_by_separation(const MaskBundle& bundle, int order_max,
                                  const MomentOptions& options = {});

struct ClosedFormReport {
  /// max_abs_deviation[j] covers m_j and every n_j^(s), j = 0..3.
  double max_abs_deviation[4] = {0, 0, 0, 0};
  double overall = 0;
};

/// Evaluates the unrolled j <= 3 formulas for m_j and n_j^(s) term by term
/// and compares them with moments_by_separation.
ClosedFormReport closed_form_check(const MaskBundle& bundle,
                                   const MomentOptions& options = {});

}  // namespace twodir
