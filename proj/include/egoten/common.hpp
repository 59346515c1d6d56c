#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace egoten {

using index_t = std::uint32_t;

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad user input: unusable files, malformed command lines. Maps to CLI exit code 2.
struct UsageError : Error {
    using Error::Error;
};

/// Malformed input data, carries the 1-based line number of the offending line.
struct ParseError : UsageError {
    ParseError(std::size_t line, const std::string& what)
        : UsageError("line " + std::to_string(line) + ": " + what), line_no(line) {}
    std::size_t line_no;
};

/// Invalid configuration values (non-positive K, probabilities outside [0,1], ...).
struct ConfigError : UsageError {
    using UsageError::UsageError;
};

/// Numerical failure during a solve (non-finite objective, singular system, ...).
struct SolverError : Error {
    using Error::Error;
};

}  // namespace egoten
