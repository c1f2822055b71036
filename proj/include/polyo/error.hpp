/**
 * @file error.hpp
 * @brief Exception types shared by every module.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyo {

enum class ErrorCode {
    parse,          // malformed input text
    precondition,   // input valid but unsuitable for the requested operation
    ring_mismatch,  // operands live in different rings
    timeout,        // wall clock, pair budget or cancellation
    internal,
};

constexpr std::string_view to_string(ErrorCode c) {
    switch (c) {
        case ErrorCode::parse: return "parse_error";
        case ErrorCode::precondition: return "precondition_error";
        case ErrorCode::ring_mismatch: return "ring_mismatch";
        case ErrorCode::timeout: return "timeout";
        case ErrorCode::internal: return "internal_error";
    }
    return "internal_error";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(ErrorCode::parse, what) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(ErrorCode::precondition, what) {}
};

struct RingMismatchError : Error {
    explicit RingMismatchError(const std::string& what) : Error(ErrorCode::ring_mismatch, what) {}
};

/// Raised when a computation exceeds its pair budget, deadline, or is cancelled.
/// Partial results are never returned.
struct ResourceLimitError : Error {
    explicit ResourceLimitError(const std::string& what) : Error(ErrorCode::timeout, what) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error(ErrorCode::internal, what) {}
};

}  // namespace polyo
