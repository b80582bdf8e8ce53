#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superalg::cli {

enum Exit : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

// Runs one command. `args` excludes the program name. `terminal` tells
// whether `out` is an interactive terminal, which matters only when
// SUPERALG_COLOR is "auto" or unset.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool terminal = false);

// Names accepted by `construct KIND`.
std::vector<std::string> construction_kinds();

}  // namespace superalg::cli
