#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace cyclometria {

/// Exit codes: 0 success, 1 usage error, 2 `audit --strict` found a
/// misprint, 3 the computation itself failed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Library operations each subcommand exercises, keyed by subcommand path
/// ("pi", "construct kochanski", ...).
const std::map<std::string, std::vector<std::string>>& subcommand_operations();

}  // namespace cyclometria
