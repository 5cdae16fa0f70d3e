#include "wts/error.hpp"

namespace wts {

std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyOptionSet: return "EmptyOptionSet";
        case ErrorCode::MixedParity: return "MixedParity";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::ValueOutsideDomain: return "ValueOutsideDomain";
        case ErrorCode::NotOrderPreserving: return "NotOrderPreserving";
        case ErrorCode::NotComparable: return "NotComparable";
        case ErrorCode::ParityMismatch: return "ParityMismatch";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::NotInI: return "NotInI";
        case ErrorCode::EmptyOptions: return "EmptyOptions";
        case ErrorCode::NotBooleanValued: return "NotBooleanValued";
        case ErrorCode::ClassificationFailure: return "ClassificationFailure";
        case ErrorCode::NoExtremum: return "NoExtremum";
        case ErrorCode::IllegalClass: return "IllegalClass";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::GoldenMismatch: return "GoldenMismatch";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

SyntaxError::SyntaxError(std::size_t position, const std::string& detail)
    : Error(ErrorCode::SyntaxError, detail + " at position " + std::to_string(position)),
      position_(position) {}

}  // namespace wts
