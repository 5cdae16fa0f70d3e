#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wts {

enum class ErrorCode {
    EmptyOptionSet,
    MixedParity,
    ArityMismatch,
    ValueOutsideDomain,
    NotOrderPreserving,
    NotComparable,
    ParityMismatch,
    NotInvertible,
    NotInI,
    EmptyOptions,
    NotBooleanValued,
    ClassificationFailure,
    NoExtremum,
    IllegalClass,
    TooLarge,
    SyntaxError,
    Overflow,
    InvalidArgument,
    GoldenMismatch,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const { return error_name(code_); }

private:
    ErrorCode code_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& detail);

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace wts
