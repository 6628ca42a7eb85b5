#pragma once

#include <stdexcept>
#include <string>

namespace qeddim {

// Bad input: violated precondition, out-of-range parameter, malformed request.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical failure: divergent series, no sign change, non-convergence.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qeddim
