#pragma once

#include <stdexcept>
#include <string>

namespace edgesim {

// Thrown when an operation is asked to work on an empty dataset
// (e.g. fitting a model with no observations).
struct EmptyDataError : std::runtime_error {
    explicit EmptyDataError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an iterative numeric routine fails to converge.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed configuration files or unknown keys.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace edgesim
