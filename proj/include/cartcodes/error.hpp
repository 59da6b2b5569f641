#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cartcodes {

enum class ErrorKind {
    NotPrime,
    DegreeOutOfRange,
    FieldTooLarge,
    DivisionByZero,
    FieldMismatch,
    RankOutOfRange,
    InstanceTooLarge,
    DimensionMismatch,
    ZeroPolynomial,
    DuplicateLeadingTerms,
    RankDeficiency,
    InvalidShape,
    InvalidSpec,
    ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DuplicateLeadingTerms: return "DuplicateLeadingTerms";
    case ErrorKind::RankDeficiency: return "RankDeficiency";
    case ErrorKind::InvalidShape: return "InvalidShape";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace cartcodes
