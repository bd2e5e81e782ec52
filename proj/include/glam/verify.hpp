#pragma once

#include <string>
#include <vector>

namespace glam {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs the closed-form-versus-first-principles checks up to order n_max
/// (1 ≤ n_max ≤ 5). Independent orders are evaluated concurrently; results
/// come back in a fixed order.
std::vector<CheckResult> run_oracle_suite(unsigned n_max);

}  // namespace glam
