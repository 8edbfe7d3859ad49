#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace setlab::cli
{

enum ExitCode : int
{
    Success = 0,
    Failed = 1, // lemma violation, failed demo check, or unmet --require
    Usage = 2,  // bad arguments, unreadable or malformed input
};

// Runs one command line (without the program name). Reports go to out,
// diagnostics to err.
int run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err );

} // namespace setlab::cli
