#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tgraph::cli {

/// Runs the `tg` command line given argv-style arguments (program name not
/// included). All regular output goes to `out`, diagnostics to `err`.
///
/// Exit codes: 0 success / property holds, 1 property fails, 2 usage or
/// input error, 3 enumeration guard exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tgraph::cli
