#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "twodir/mask.hpp"

namespace twodir {

/// Mask document schema (JSON):
///
///   {
///     "name": "example",
///     "dilation": 2,
///     "multiplicity": 1,
///     "note": "optional free text",
///     "scaling": {
///       "support": [k_min, k_max],
///       "positive": { "<k>": [[e, ...], ...], ... },
///       "negative": { "<k>": [[e, ...], ...], ... }
///     },
///     "wavelets": [
///       { "branch": 1, "support": [k_min, k_max], "positive": {...}, "negative": {...} }
///     ]
///   }
///
/// Each matrix is a list of r rows of r entries; an entry is a JSON number or
/// a string holding a constant expression such as "(2-sqrt(7))/4/sqrt(2)".
MaskBundle mask_from_json(const nlohmann::json& doc);

/// Parses and validates a mask document; `source` names it in error messages.
MaskBundle parse_mask(std::string_view text, const std::string& source = "<memory>");

MaskBundle load_mask(const std::string& path);

/// Serializes every coefficient as a JSON number; parse_mask(to_json) is
/// bit-exact.
nlohmann::json mask_to_json(const MaskBundle& bundle);
void save_mask(const MaskBundle& bundle, const std::string& path);

std::vector<std::string> bundled_example_names();
/// Source text of a bundled example; throws MaskFileError for unknown names.
std::string_view bundled_example_text(std::string_view name);
MaskBundle bundled_example(std::string_view name);

/// Loads `spec` as a file when it exists, otherwise as a bundled example name.
MaskBundle resolve_mask(const std::string& spec);

}  // namespace twodir
