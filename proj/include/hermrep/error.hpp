#pragma once

#include <stdexcept>
#include <string>

namespace hermrep {

// Machine-readable error categories surfaced through the CLI as exit codes
// and JSON error objects.
enum class ErrorCode {
    BadInput,       // malformed spec: unknown keys, type errors, bad ranges
    Unsupported,    // well-formed request outside the implemented scope
    NumericFailure, // branch cut hit, factorization breakdown, non-invertible block
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::BadInput: return "bad_input";
        case ErrorCode::Unsupported: return "unsupported";
        case ErrorCode::NumericFailure: return "numeric_failure";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::string pointer = "")
        : std::runtime_error(pointer.empty() ? message : pointer + ": " + message),
          code_(code), message_(std::move(message)), pointer_(std::move(pointer)) {}

    ErrorCode code() const { return code_; }
    const std::string& message() const { return message_; }
    // JSON pointer into the offending input document ("" when not applicable).
    const std::string& pointer() const { return pointer_; }

private:
    ErrorCode code_;
    std::string message_;
    std::string pointer_;
};

} // namespace hermrep
