#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qdn {

enum class ErrorKind {
    ParityError,
    FieldMismatch,
    NotDivisible,
    DivByZero,
    FactorizationLimit,
    ZeroElement,
    NotADNumber,
    NotAlgebraicInteger,
    NotApplicable,
    NotInDPlus,
    Rejected,
    PrecisionInsufficient,
    InvalidArgument,
    InternalInconsistency,
};

constexpr std::string_view kind_name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ParityError: return "ParityError";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::DivByZero: return "DivByZero";
    case ErrorKind::FactorizationLimit: return "FactorizationLimit";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::NotADNumber: return "NotADNumber";
    case ErrorKind::NotAlgebraicInteger: return "NotAlgebraicInteger";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::NotInDPlus: return "NotInDPlus";
    case ErrorKind::Rejected: return "Rejected";
    case ErrorKind::PrecisionInsufficient: return "PrecisionInsufficient";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

/// Every failure raised by the library. The kind is what callers branch on;
/// the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace qdn
