#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qstirl/registry.hpp"

namespace qstirl::cli {

enum ExitCode : int { kPass = 0, kInequality = 1, kBadParams = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
nlohmann::ordered_json to_json(const Integer& c);
nlohmann::ordered_json to_json(const IdentityValue& v);
nlohmann::ordered_json to_json(const Certificate& c);
nlohmann::ordered_json to_json(const WitnessSummary& s);
nlohmann::ordered_json to_json(const IdentityReport& r);

/// Cap on enumeration sizes, from QSTIRL_MAX_CELLS (default 10^6).
std::size_t max_cells();

}  // namespace qstirl::cli
