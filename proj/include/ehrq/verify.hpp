#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ehrq {

struct CheckResult {
    std::string name;
    bool pass = false;
};

// Names accepted by verify_suite, excluding "all".
const std::vector<std::string>& verify_suite_names();

// Runs one identity suite ("simplex", "cross", "square", "cube",
// "macmahon", "ringC3") or "all", comparing every closed form against an
// independent route (brute-force enumeration, product formulas, or
// cross-multiplied rational equality) at the given truncation order.
std::vector<CheckResult> verify_suite(const std::string& suite, std::size_t order);

}  // namespace ehrq
