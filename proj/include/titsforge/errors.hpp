#ifndef TITSFORGE_ERRORS_HPP
#define TITSFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace titsforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

/// Two operands belong to different fields or different algebras.
class SpecMismatch : public Error {
public:
    explicit SpecMismatch(const std::string& msg) : Error(msg) {}
};

class InvalidField : public Error {
public:
    explicit InvalidField(const std::string& msg) : Error(msg) {}
};

class NotIrreducible : public Error {
public:
    explicit NotIrreducible(const std::string& msg) : Error(msg) {}
};

class BadGaloisAction : public Error {
public:
    explicit BadGaloisAction(const std::string& msg) : Error(msg) {}
};

/// x * adjoint(x) failed to be a scalar multiple of the unit; the descriptor
/// does not describe a degree-3 algebra.
class DegreeThreeViolation : public Error {
public:
    explicit DegreeThreeViolation(const std::string& msg) : Error(msg) {}
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

class HypothesisNotSatisfied : public Error {
public:
    explicit HypothesisNotSatisfied(const std::string& msg) : Error(msg) {}
};

class NotInvertible : public Error {
public:
    explicit NotInvertible(const std::string& msg) : Error(msg) {}
};

/// Two independent computations of the same quantity disagreed (a build bug,
/// never a property of the input).
class InternalInconsistency : public Error {
public:
    explicit InternalInconsistency(const std::string& msg) : Error(msg) {}
};

class InfiniteDomain : public Error {
public:
    explicit InfiniteDomain(const std::string& msg) : Error(msg) {}
};

class UnknownIdentity : public Error {
public:
    explicit UnknownIdentity(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace titsforge

#endif
