#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace windguide {

enum class Command { run, heading_sweep, frequency_sweep, validate_config };

struct RunManifest {
    Command command = Command::run;
    std::string config_path;  ///< empty: defaults only
    std::string output_dir;   ///< empty: $WINDGUIDE_OUT, then "."
    std::vector<std::string> overrides;
    std::optional<std::uint64_t> seed;
};

/// Runs one CLI command and writes its artifacts. Returns the process exit
/// status; failures print "error[<class>]: <message>" to err.
int execute(const RunManifest& manifest, std::ostream& out, std::ostream& err);

/// Entry point shared by the executable: parses argv with CLI11.
int cli_main(int argc, char** argv);

}  // namespace windguide
