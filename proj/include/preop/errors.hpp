#ifndef PREOP_ERRORS_HPP
#define PREOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace preop {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivideByZero : public Error {
public:
    DivideByZero() : Error("division by zero") {}
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

class DimMismatch : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DegreeOutOfRange : public Error {
public:
    using Error::Error;
};

class MatrixTooLarge : public Error {
public:
    using Error::Error;
};

class NotACocycle : public Error {
public:
    using Error::Error;
};

class InternalInconsistency : public Error {
public:
    using Error::Error;
};

// Input errors (map to exit code 2 in the CLI).
class ParseError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace preop

#endif // PREOP_ERRORS_HPP
