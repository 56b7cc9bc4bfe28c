#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wvlt {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // first divergence on failure
};

// Cross-checks every construction route, the translation functions and all
// queries against the reference implementations on one text. Throws
// Error(invalid_argument) for an empty text.
std::vector<CheckResult> verify_text(std::span<const std::uint8_t> text);

} // namespace wvlt
