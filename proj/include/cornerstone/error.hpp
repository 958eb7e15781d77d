#ifndef CORNERSTONE_ERROR_HPP
#define CORNERSTONE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cornerstone {

enum class ErrorKind {
    NotPrime,
    InadmissibleRelation,
    NotFiniteDimensional,
    EmptyIdempotent,
    BimoduleMismatch,
    AlgebraMismatch,
    NotProjective,
    NotTriangular,
    CutoffTooSmall,
    IdTooLarge,
    ParseError,
    ValidationError,
    Internal,
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::InadmissibleRelation: return "InadmissibleRelation";
    case ErrorKind::NotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorKind::EmptyIdempotent: return "EmptyIdempotent";
    case ErrorKind::BimoduleMismatch: return "BimoduleMismatch";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotProjective: return "NotProjective";
    case ErrorKind::NotTriangular: return "NotTriangular";
    case ErrorKind::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorKind::IdTooLarge: return "IdTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Thrown when two independently computed quantities that must agree do not.
/// The CLI maps this to exit code 1 (counterexample found).
class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& what) : Error(ErrorKind::Internal, what) {}
};

}  // namespace cornerstone

#endif
