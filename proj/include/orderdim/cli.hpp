#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orderdim {

class FinitePoset;

// Runs one command line (args excludes the program name). Results go to
// `out` or --out; a library error prints one JSON line on `err` and returns
// 1, a usage error returns 2.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

// Hasse diagram of p, covering pairs only, minimal elements at the bottom.
std::string hasse_dot(const FinitePoset& p);

}  // namespace orderdim
