#pragma once

#include <stdexcept>
#include <string>

namespace fqnm {

// Error taxonomy mirrored by the C API status codes.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CflError : std::runtime_error {
    explicit CflError(const std::string& msg) : std::runtime_error(msg) {}
};

struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

struct PositivityError : std::runtime_error {
    explicit PositivityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fqnm
