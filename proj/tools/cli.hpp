#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace apexkit::cli {

enum ExitCode { kOk = 0, kDomainFailure = 1, kUsage = 2 };

/// Runs the apexkit command line; args excludes the program name.
/// Payloads go to `out` (or the --output file), diagnostics and stats to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace apexkit::cli
