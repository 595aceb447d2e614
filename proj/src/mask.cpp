#include "twodir/mask.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace twodir {

const char* to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::InvalidDilation: return "invalid dilation";
    case ViolationKind::InvalidMultiplicity: return "invalid multiplicity";
    case ViolationKind::DimensionMismatch: return "dimension mismatch";
    case ViolationKind::NonFiniteEntry: return "non-finite entry";
    case ViolationKind::OutsideSupport: return "coefficient outside support";
    case ViolationKind::EmptySupport: return "empty support";
    case ViolationKind::InvalidBranch: return "invalid branch";
    case ViolationKind::DuplicateBranch: return "duplicate branch";
    case ViolationKind::TooManyBranches: return "too many branches";
  }
  return "unknown";
}

std::string Violation::message() const {
  return std::string(to_string(kind)) + ": " + where;
}

bool ValidationReport::has(ViolationKind kind) const noexcept {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].message();
  }
  return os.str();
}

namespace {

void check_table(const std::map<int, Matrix>& table, int r, const Support& support,
                 const std::string& label, std::vector<Violation>& out) {
  for (const auto& [k, m] : table) {
    const std::string where = label + "[" + std::to_string(k) + "]";
    if (m.rows() != r || m.cols() != r) {
      out.push_back({ViolationKind::DimensionMismatch,
                     where + " is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected " + std::to_string(r) +
                         "x" + std::to_string(r)});
    } else if (!m.allFinite()) {
      out.push_back({ViolationKind::NonFiniteEntry, where});
    }
    if (!support.contains(k)) {
      out.push_back({ViolationKind::OutsideSupport,
                     where + " not in [" + std::to_string(support.lo) + ", " +
                         std::to_string(support.hi) + "]"});
    }
  }
}

}  // namespace

ValidationReport validate(const MaskBundle& bundle) {
  ValidationReport report;
  auto& out = report.violations;
  const auto& s = bundle.scaling;

  if (s.dilation < 2) {
    out.push_back({ViolationKind::InvalidDilation, "d = " + std::to_string(s.dilation)});
  }
  if (s.multiplicity < 1) {
    out.push_back({ViolationKind::InvalidMultiplicity,
                   "r = " + std::to_string(s.multiplicity)});
    return report;
  }
  if (s.support.empty()) {
    out.push_back({ViolationKind::EmptySupport, "scaling"});
  }
  check_table(s.positive, s.multiplicity, s.support, "P+", out);
  check_table(s.negative, s.multiplicity, s.support, "P-", out);

  if (s.dilation >= 2 && static_cast<int>(bundle.wavelets.size()) > s.dilation - 1) {
    out.push_back({ViolationKind::TooManyBranches,
                   std::to_string(bundle.wavelets.size()) + " branches for d = " +
                       std::to_string(s.dilation)});
  }
  std::set<int> seen;
  for (const auto& w : bundle.wavelets) {
    const std::string tag = "Q(" + std::to_string(w.branch) + ")";
    if (w.branch < 1 || w.branch > s.dilation - 1) {
      out.push_back({ViolationKind::InvalidBranch, tag});
    }
    if (!seen.insert(w.branch).second) {
      out.push_back({ViolationKind::DuplicateBranch, tag});
    }
    if (w.support.empty()) {
      out.push_back({ViolationKind::EmptySupport, tag});
    }
    check_table(w.positive, s.multiplicity, w.support, tag + "+", out);
    check_table(w.negative, s.multiplicity, w.support, tag + "-", out);
  }
  return report;
}

namespace {

const Matrix* lookup(const std::map<int, Matrix>& table, int k) {
  auto it = table.find(k);
  return it == table.end() ? nullptr : &it->second;
}

}  // namespace

Matrix doubled_coefficient(const CoefficientMask& mask, int k) {
  const int r = mask.multiplicity;
  Matrix c = Matrix::Zero(2 * r, 2 * r);
  if (auto* p = lookup(mask.positive, k)) c.topLeftCorner(r, r) = *p;
  if (auto* p = lookup(mask.negative, k)) c.topRightCorner(r, r) = *p;
  if (auto* p = lookup(mask.negative, -k)) c.bottomLeftCorner(r, r) = *p;
  if (auto* p = lookup(mask.positive, -k)) c.bottomRightCorner(r, r) = *p;
  return c;
}

Support doubled_support(const CoefficientMask& mask) {
  return {std::min(mask.support.lo, -mask.support.hi),
          std::max(mask.support.hi, -mask.support.lo)};
}

Matrix doubled_mask_at_one(const CoefficientMask& mask) {
  const int r = mask.multiplicity;
  Matrix sum = Matrix::Zero(2 * r, 2 * r);
  const Support range = doubled_support(mask);
  for (int k = range.lo; k <= range.hi; ++k) sum += doubled_coefficient(mask, k);
  return sum / std::sqrt(static_cast<double>(mask.dilation));
}

}  // namespace twodir
