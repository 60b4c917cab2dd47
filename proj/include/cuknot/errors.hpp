#pragma once

#include <stdexcept>
#include <string>

namespace cuknot {

// Raised when PD-notation text cannot be tokenized.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a syntactically well-formed diagram fails structural
// validation (edge multiplicity, connectivity, orientation, Euler check).
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an operation that needs a nontrivial coloring is invoked
// on a knot that has none for the requested modulus.
class not_colorable_error : public std::runtime_error {
public:
    explicit not_colorable_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact integer arithmetic refuses to wrap; it throws instead.
class overflow_error : public std::runtime_error {
public:
    explicit overflow_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cuknot
