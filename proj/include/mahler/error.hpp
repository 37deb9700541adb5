#pragma once

#include <stdexcept>
#include <string>

namespace mahler {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed polynomial or number expression.
class ParseError : public Error {
public:
    using Error::Error;
};

// A configured degree cap (factorization, number field, Galois closure) was exceeded.
class UnsupportedDegree : public Error {
public:
    using Error::Error;
};

// A field that must be Galois over Q was shown not to be.
class NonGaloisField : public Error {
public:
    using Error::Error;
};

// Invalid operand, e.g. inverting zero or a zero polynomial where one is not allowed.
class DomainError : public Error {
public:
    using Error::Error;
};

// A numerical comparison could not be settled within the refinement budget.
class Undecided : public Error {
public:
    using Error::Error;
};

} // namespace mahler
