#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace linespec {

/// Result of checking Horn's necessary conditions on random real symmetric
/// pairs (A, B) with entries uniform in [-1, 1] and C = A + B.
struct SamplingSummary {
    int n = 0;
    int trials = 0;
    std::size_t inequalities_checked = 0;
    int trace_violations = 0;
    int horn_violations = 0;
    int weyl_violations = 0;
    /// Description of the first few failures, for diagnostics.
    std::vector<std::string> examples;

    int violations() const { return trace_violations + horn_violations + weyl_violations; }
};

SamplingSummary sample_horn_necessity(int n, int trials, double tol, std::uint64_t seed);

} // namespace linespec
