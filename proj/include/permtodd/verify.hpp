#pragma once

// Named verification suites: each cross-checks one computation against an
// independent route and reports one line per check.

#include <string>
#include <string_view>
#include <vector>

namespace permtodd::verify {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Options {
    int d = 3;  // used by mcmullen (2 or 3) and chow (1..5)
};

// Targets: mcmullen, chow, hypersimplex, closedforms, counts.
bool known_target(std::string_view target);
std::vector<Check> run(std::string_view target, const Options& opts = {});

}  // namespace permtodd::verify
