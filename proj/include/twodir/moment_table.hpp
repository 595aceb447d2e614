#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "twodir/types.hpp"

namespace twodir {

enum class Method { Doubling, Separation };

constexpr std::string_view to_string(Method m) noexcept {
  return m == Method::Doubling ? "doubling" : "separation";
}

/// Continuous moments m_j = int x^j phi(x) dx and n_j^(s) = int x^j psi^(s)(x) dx
/// for j = 0..order_max, tagged with the method that produced them.
struct MomentTable {
  Method method = Method::Separation;
  int order_max = 0;
  std::vector<Vector> phi;
  std::map<int, std::vector<Vector>> psi;
};

}  // namespace twodir
