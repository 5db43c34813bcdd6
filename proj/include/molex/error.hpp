#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace molex {

enum class ErrorCode {
    Loop,
    DuplicateEdge,
    DegreeOverflow,
    VertexOutOfRange,
    InvalidParameter,
    UndefinedTerm,
    UnknownPair,
    NoSignChange,
    PreconditionFailed,
    DomainError,
    UnsupportedCase,
    ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what)
    {
    }

    ErrorCode code() const noexcept { return code_; }
    /// Message without the error-code prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace molex
