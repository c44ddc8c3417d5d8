#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chainmod::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kNegative = 1, kInvalidInput = 2, kInvariantBreach = 3 };

/// Runs one command line (without the program name). JSON, or the
/// `--pretty` rendering of the same tree, goes to `out`; diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Text rendering of a JSON document used by `--pretty`. Every scalar is
/// printed verbatim, so numeric content matches the JSON mode exactly.
std::string render_pretty(const std::string& json_text);

}  // namespace chainmod::cli
