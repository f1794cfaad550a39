#pragma once

#include <stdexcept>
#include <string>

namespace orbitint {

/// Bad input: malformed text, violated precondition, degenerate map.
/// `witness` carries a machine-readable detail (e.g. the common factor of f and g).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what, std::string witness = {})
        : std::invalid_argument(what), witness_(std::move(witness)) {}
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

/// A node, bit-length, or evaluation cap was exceeded.
class WorkLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A number resisted factorization within the configured effort.
class FactorizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace orbitint
