#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad dimensions, non-prime p, index out of range, ...
struct validation_error : error {
    explicit validation_error(const std::string& what) : error(what) {}
};

// An enumeration or product would exceed the configured budget.
struct budget_error : error {
    explicit budget_error(const std::string& what) : error(what) {}
};

// A self-check failed; indicates a bug, not bad input.
struct internal_error : error {
    explicit internal_error(const std::string& what) : error(what) {}
};

} // namespace hecke
