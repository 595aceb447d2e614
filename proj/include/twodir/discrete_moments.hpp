#pragma once

#include <cstdint>
#include <map>

#include "twodir/mask.hpp"
#include "twodir/types.hpp"

namespace twodir {

/// Largest discrete-moment order accepted; k^j grows fast for wide supports.
inline constexpr int kDefaultMaxOrder = 16;

/// Discrete moments of order j of one coefficient family (scaling P or a
/// wavelet branch Q):
///   positive = (1/sqrt d) sum_k k^j P_k^+
///   negative = (1/sqrt d) sum_k k^j P_k^-
///   total    = positive + negative
///   doubled  = (1/sqrt d) sum_k k^j [[P_k^+, P_k^-], [P_{-k}^-, P_{-k}^+]]
struct DiscreteMomentSet {
  int order = 0;
  Matrix total;
  Matrix positive;
  Matrix negative;
  Matrix doubled;

  /// positive + (-1)^l negative, the combination used by the separated
  /// recursions.
  Matrix signed_sum(int l) const { return l % 2 == 0 ? total : Matrix(positive - negative); }
};

DiscreteMomentSet discrete_moment_phi(const CoefficientMask& mask, int order,
                                      int max_order = kDefaultMaxOrder);

DiscreteMomentSet discrete_moment_psi(const WaveletMask& wmask, int dilation,
                                      int multiplicity, int order,
                                      int max_order = kDefaultMaxOrder);

/// Exact binomial coefficient C(n, k) for 0 <= k <= n <= 62.
std::uint64_t binomial(int n, int k);

}  // namespace twodir
