#pragma once

#include <stdexcept>
#include <string>

namespace qosp {

/// Failure categories, mirrored by the C API status codes and the CLI
/// exit codes (usage/parse/arithmetic all map to exit code 2).
enum class ErrorKind {
    usage,       // bad arguments, mixed fields, violated preconditions
    arithmetic,  // division by zero, non-invertible element
    parse,       // expression syntax errors (carry a byte offset)
    io,          // file handling
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message, long offset = -1)
        : std::runtime_error(std::move(message)), kind_(kind), offset_(offset) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// Byte offset into the input for parse errors, -1 otherwise.
    long offset() const noexcept { return offset_; }

private:
    ErrorKind kind_;
    long offset_;
};

[[noreturn]] inline void usage_error(const std::string& msg) { throw Error(ErrorKind::usage, msg); }
[[noreturn]] inline void arith_error(const std::string& msg) { throw Error(ErrorKind::arithmetic, msg); }

}  // namespace qosp
