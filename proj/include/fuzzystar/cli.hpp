#pragma once

#include <ostream>

namespace fuzzystar {

// Entry point of the `fuzzystar` command line tool. Exit codes: 0 success,
// 1 the checked property failed (class Neither, verdict not consistent),
// 2 usage, parse or configuration error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace fuzzystar
