#pragma once

#include <string>
#include <vector>

#include "gframe/dynamics.hpp"

namespace gframe::verify {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    double deviation = 0.0;
    double tolerance = 0.0;
};

struct Options {
    std::vector<std::vector<int>> groups = {{2}, {3}, {4}};
    int max_particles = 3;
    std::uint64_t seed = 1;
    std::uint64_t twirl_cap = 100000;
};

std::vector<std::string> suite_names();

/// Run one suite ("group", "spaces", "symmetry", "oracle", "alignment",
/// "frames", "dynamics", "chain", "paradox") or "all".
std::vector<CheckResult> run_suite(const std::string& selector, const Options& opt);

}  // namespace gframe::verify
