#pragma once

#include <stdexcept>
#include <string>

namespace windnum {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ZeroPolynomial : public Error {
public:
    explicit ZeroPolynomial(const std::string& where)
        : Error(where + ": zero polynomial not allowed") {}
};

class ZeroDenominator : public Error {
public:
    explicit ZeroDenominator(const std::string& where)
        : Error(where + ": denominator is the zero polynomial") {}
};

class BothZero : public Error {
public:
    BothZero() : Error("gcd: both arguments are zero") {}
};

class ZeroFunction : public Error {
public:
    explicit ZeroFunction(const std::string& where)
        : Error(where + ": function is identically zero") {}
};

class ConstantPolynomial : public Error {
public:
    explicit ConstantPolynomial(const std::string& where)
        : Error(where + ": polynomial must have degree >= 1") {}
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class OverlappingSpecs : public Error {
public:
    explicit OverlappingSpecs(const std::string& where)
        : Error(where + ": a zero and a pole share a location") {}
};

class BoundaryZeroDetected : public Error {
public:
    BoundaryZeroDetected() : Error("numeric_winding: sample hit a zero or pole on the boundary") {}
};

} // namespace windnum
