#pragma once

#include <stdexcept>
#include <string>

namespace scgan {

// Shape or channel-count mismatch; message names the offending tensor.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error("shape error: " + msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error("config error: " + msg) {}
};

// Raised when a sampling domain is empty; message names the violated constraint.
struct EmptyDomainError : std::runtime_error {
    explicit EmptyDomainError(const std::string& msg) : std::runtime_error("empty domain: " + msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error("io error: " + msg) {}
};

// Non-finite loss or score detected during optimization.
struct DivergenceError : std::runtime_error {
    explicit DivergenceError(const std::string& msg) : std::runtime_error("divergence: " + msg) {}
};

}  // namespace scgan
