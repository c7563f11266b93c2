#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace contagion {

/// Entry point behind the `contagion` binary; also callable from tests.
/// Subcommands: sweep, cascade, partition, gen, validate. Returns the
/// process exit status; on failure, files the failed command had already
/// written are removed.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace contagion
