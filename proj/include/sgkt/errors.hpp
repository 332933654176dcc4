#pragma once

#include <stdexcept>
#include <string>

namespace sgkt {

// Domain errors: malformed input, unsupported ring, non-coprime moduli, ...
// CLI maps these to exit code 2.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Declared non-goals reached at runtime (e.g. real quadratic class groups).
struct unsupported_error : domain_error {
    explicit unsupported_error(const std::string& msg) : domain_error(msg) {}
};

// A bounded search ran out of budget. CLI maps these to exit code 3.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sgkt
