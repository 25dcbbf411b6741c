#pragma once

#include <stdexcept>
#include <string>

namespace jf {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct NotPrimeError : Error {
    explicit NotPrimeError(const std::string& msg = "p is not prime") : Error(msg) {}
};

struct WrongResidueError : Error {
    explicit WrongResidueError(const std::string& msg = "q is not 3 mod 4") : Error(msg) {}
};

struct TooLargeError : Error {
    explicit TooLargeError(const std::string& msg = "input exceeds configured maximum") : Error(msg) {}
};

struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& msg = "division by zero") : Error(msg) {}
};

struct NotASquareError : Error {
    explicit NotASquareError(const std::string& msg = "element is not a square") : Error(msg) {}
};

struct InvalidInputError : Error {
    explicit InvalidInputError(const std::string& msg = "invalid input") : Error(msg) {}
};

struct DivergentError : Error {
    explicit DivergentError(const std::string& msg = "series diverges (|t| >= 1)") : Error(msg) {}
};

struct PointNotOnCurveError : Error {
    explicit PointNotOnCurveError(const std::string& msg = "point is not on the curve") : Error(msg) {}
};

struct BadDiscriminantError : Error {
    explicit BadDiscriminantError(const std::string& msg = "not a negative discriminant (0 or 1 mod 4)") : Error(msg) {}
};

struct NotFundamentalError : Error {
    explicit NotFundamentalError(const std::string& msg = "discriminant is not fundamental") : Error(msg) {}
};

struct BadResidueError : Error {
    explicit BadResidueError(const std::string& msg = "N is not 0 or 3 mod 4") : Error(msg) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg = "precondition violated") : Error(msg) {}
};

// Raised when a proven structural property fails at runtime; indicates a bug.
struct InternalError : Error {
    explicit InternalError(const std::string& msg = "internal invariant violated") : Error(msg) {}
};

} // namespace jf
