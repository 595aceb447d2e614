#pragma once

#include <iosfwd>

#include <json.hpp>

#include "twodir/moment_table.hpp"

namespace twodir {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Full-precision JSON form of a moment table:
///   {"method": "...", "max_order": J, "phi": [[...], ...], "psi": {"1": [[...], ...]}}
nlohmann::json moment_table_to_json(const MomentTable& table);
MomentTable moment_table_from_json(const nlohmann::json& doc);

/// Entry point of the command-line tool; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twodir
