#pragma once

#include <iosfwd>

namespace mtsp {

/// Entry point of the `mtsp` command-line tool (subcommands gen, solve, bench, plot).
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mtsp
