#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace netproj {

// Exit status contract of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitDataError = 1, kExitUsage = 2 };

// Entry point behind the `netproj` executable. `args` excludes the program
// name. Subcommands: ingest-stats, simgen, project, backbone, metrics,
// pipeline. Global flags: --seed, --workers, --out-dir, --config.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Hex SHA-256 of a file's bytes.
std::string sha256_file(const std::string& path);

}  // namespace netproj
