#pragma once

#include <stdexcept>
#include <string>

namespace belitskii {

enum class ErrorKind {
    MalformedScalar,
    ZeroDenominator,
    Singular,
    SizeMismatch,
    EigenvaluesNotInField,
    NotAnEigenvalue,
    EmptyStateSpace,
    ParamsNotDistinct,
    UnboundParam,
    Unsupported,
    MalformedInput,
    Internal,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. The kind is the stable part; the
/// message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::MalformedScalar: return "MalformedScalar";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::EigenvaluesNotInField: return "EigenvaluesNotInField";
    case ErrorKind::NotAnEigenvalue: return "NotAnEigenvalue";
    case ErrorKind::EmptyStateSpace: return "EmptyStateSpace";
    case ErrorKind::ParamsNotDistinct: return "ParamsNotDistinct";
    case ErrorKind::UnboundParam: return "UnboundParam";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace belitskii
