#pragma once

#include <map>
#include <string>
#include <vector>

#include "twodir/types.hpp"

namespace twodir {

/// Closed integer interval [lo, hi] of translation indices k.
struct Support {
  int lo = 0;
  int hi = 0;

  bool contains(int k) const noexcept { return lo <= k && k <= hi; }
  bool empty() const noexcept { return hi < lo; }
  bool operator==(const Support&) const = default;
};

/// Coefficients of a two-direction refinement relation
///
///   phi(x) = sqrt(d) * sum_k [ P_k^+ phi(d x - k) + P_k^- phi(k - d x) ].
///
/// Only nonzero translations need to be present in the maps; a missing key
/// means the zero matrix.
struct CoefficientMask {
  std::string name;
  int dilation = 2;
  int multiplicity = 1;
  Support support;
  std::map<int, Matrix> positive;
  std::map<int, Matrix> negative;
};

/// Coefficients Q_k^(s)+, Q_k^(s)- of one multiwavelet branch s in 1..d-1.
struct WaveletMask {
  int branch = 1;
  Support support;
  std::map<int, Matrix> positive;
  std::map<int, Matrix> negative;
};

struct MaskBundle {
  CoefficientMask scaling;
  std::vector<WaveletMask> wavelets;
};

enum class ViolationKind {
  InvalidDilation,
  InvalidMultiplicity,
  DimensionMismatch,
  NonFiniteEntry,
  OutsideSupport,
  EmptySupport,
  InvalidBranch,
  DuplicateBranch,
  TooManyBranches,
};

const char* to_string(ViolationKind kind) noexcept;

struct Violation {
  ViolationKind kind;
  std::string where;

  std::string message() const;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(ViolationKind kind) const noexcept;
  std::string summary() const;
};

ValidationReport validate(const MaskBundle& bundle);

/// Symbol of the doubled (2r x 2r) refinement mask at z = 1:
/// (1/sqrt d) sum_k [[P_k^+, P_k^-], [P_{-k}^-, P_{-k}^+]].
Matrix doubled_mask_at_one(const CoefficientMask& mask);

/// Block coefficient C_k = [[P_k^+, P_k^-], [P_{-k}^-, P_{-k}^+]] of the
/// one-direction refinement equation satisfied by Phi(x) = [phi(x), phi(-x)].
Matrix doubled_coefficient(const CoefficientMask& mask, int k);

/// Translation range carrying nonzero doubled coefficients C_k.
Support doubled_support(const CoefficientMask& mask);

}  // namespace twodir
