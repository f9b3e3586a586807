// errors.hpp
// Exception hierarchy shared across the toolkit. Validation failures map to
// CLI exit code 2, capacity/internal failures to exit code 1.

#pragma once

#include <stdexcept>
#include <string>

namespace qmesh {

// Bad user input: out-of-range arguments, malformed rows, wrong arities.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Register size exceeds the configured qubit cap.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Structural problems in input files (missing columns, bad headers).
class SchemaError : public ValidationError {
public:
    explicit SchemaError(const std::string& what) : ValidationError(what) {}
};

} // namespace qmesh
