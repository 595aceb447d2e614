// Scaling and wavelet masks of the two reference examples: a scalar
// (r = 1, d = 2) two-direction scaling function supported on [0, 2], and an
// r = 2, d = 2 multiscaling function built from it.

#include <algorithm>
#include <array>
#include <string>

#include "twodir/errors.hpp"
#include "twodir/mask_io.hpp"

namespace twodir {

namespace {

constexpr std::string_view kExample51 = R"json({
  "name": "example_5_1",
  "dilation": 2,
  "multiplicity": 1,
  "note": "Coefficients carry a 1/sqrt(2) factor relative to the Yang-Xie construction (different normalization of the refinement relation).",
  "scaling": {
    "support": [1, 3],
    "positive": {
      "1": [["3/4/sqrt(2)"]],
      "2": [["(2-sqrt(7))/4/sqrt(2)"]]
    },
    "negative": {
      "2": [["(2+sqrt(7))/4/sqrt(2)"]],
      "3": [["1/4/sqrt(2)"]]
    }
  },
  "wavelets": [
    {
      "branch": 1,
      "support": [-3, -1],
      "positive": {
        "-3": [["-(2-sqrt(7))/4/sqrt(2)"]],
        "-2": [["3/4/sqrt(2)"]]
      },
      "negative": {
        "-2": [["1/4/sqrt(2)"]],
        "-1": [["-(2+sqrt(7))/4/sqrt(2)"]]
      }
    }
  ]
}
)json";

constexpr std::string_view kExample52 = R"json({
  "name": "example_5_2",
  "dilation": 2,
  "multiplicity": 2,
  "note": "Coefficients carry a 1/sqrt(2) factor relative to the Wang-Zhou-Wang construction (different normalization of the refinement relation).",
  "scaling": {
    "support": [-3, 3],
    "positive": {
      "-3": [[0, 0], ["(-2*sqrt(3)+sqrt(21))/(8*sqrt(2))", 0]],
      "-2": [[0, 0], ["3*sqrt(3)/(8*sqrt(2))", 0]],
      "1":  [["6/(8*sqrt(2))", 0], [0, "3/(8*sqrt(2))"]],
      "2":  [["(4-2*sqrt(7))/(8*sqrt(2))", 0], [0, "(2-sqrt(7))/(8*sqrt(2))"]]
    },
    "negative": {
      "-2": [[0, 0], ["sqrt(3)/(8*sqrt(2))", 0]],
      "-1": [[0, 0], ["(-2*sqrt(3)-sqrt(21))/(8*sqrt(2))", 0]],
      "2":  [["(4+2*sqrt(7))/(8*sqrt(2))", 0], [0, "(2+sqrt(7))/(8*sqrt(2))"]],
      "3":  [["2/(8*sqrt(2))", 0], [0, "1/(8*sqrt(2))"]]
    }
  },
  "wavelets": [
    {
      "branch": 1,
      "support": [-3, 3],
      "positive": {
        "-3": [[0, "(-4+2*sqrt(7))/(8*sqrt(2))"], ["(-2+sqrt(7))/(8*sqrt(2))", 0]],
        "-2": [[0, "6/(8*sqrt(2))"], ["3/(8*sqrt(2))", 0]],
        "1":  [[0, 0], [0, "-3*sqrt(3)/(8*sqrt(2))"]],
        "2":  [[0, 0], [0, "(-2*sqrt(3)+sqrt(21))/(8*sqrt(2))"]]
      },
      "negative": {
        "-2": [[0, "2/(8*sqrt(2))"], ["1/(8*sqrt(2))", 0]],
        "-1": [[0, "(-4-2*sqrt(7))/(8*sqrt(2))"], ["(-2-sqrt(7))/(8*sqrt(2))", 0]],
        "2":  [[0, 0], [0, "(-2*sqrt(3)-sqrt(21))/(8*sqrt(2))"]],
        "3":  [[0, 0], [0, "-sqrt(3)/(8*sqrt(2))"]]
      }
    }
  ]
}
)json";

struct Entry {
  std::string_view name;
  std::string_view text;
};

constexpr std::array<Entry, 2> kBundled{{
    {"example_5_1", kExample51},
    {"example_5_2", kExample52},
}};

}  // namespace

std::vector<std::string> bundled_example_names() {
  std::vector<std::string> names;
  for (const auto& e : kBundled) names.emplace_back(e.name);
  return names;
}

std::string_view bundled_example_text(std::string_view name) {
  auto it = std::find_if(kBundled.begin(), kBundled.end(),
                         [name](const Entry& e) { return e.name == name; });
  if (it == kBundled.end()) {
    throw MaskFileError("unknown bundled example '" + std::string(name) + "'");
  }
  return it->text;
}

MaskBundle bundled_example(std::string_view name) {
  return parse_mask(bundled_example_text(name), std::string(name));
}

}  // namespace twodir
