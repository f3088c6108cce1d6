#pragma once

#include <stdexcept>
#include <string>

namespace qrep {

// A truncated series was asked for information beyond its known window.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was applied outside its mathematical domain
// (non-invertible leading term, log of a non-unit, invalid level, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed or rejected catalog configuration.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// An invariant that the library itself guarantees was violated.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace qrep
