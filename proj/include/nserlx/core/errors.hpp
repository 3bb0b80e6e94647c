#pragma once

#include <stdexcept>
#include <string>

namespace nserlx {

/// Violation of a mathematical or physical precondition (vacuum, negative
/// time, out-of-range index...). CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or invalid configuration input. CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nserlx
