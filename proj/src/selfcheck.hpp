#pragma once

#include <string>
#include <vector>

namespace llc {

struct CheckResult {
    std::string module;
    std::string name;
    bool ok = false;
    std::string detail;
};

// Runs the invariant suite over the embedded tables and presets.  `samples` bounds the
// randomized parts (induction exhaustiveness, field axioms).
std::vector<CheckResult> run_selfcheck(int samples = 2000, unsigned seed = 20240601);

// Members whose infinitesimal parameter is known not to match the recorded induced
// representation (the packet list gives a different exponent than the parameter).
const std::vector<std::string>& infinitesimal_exclusions();

}  // namespace llc
