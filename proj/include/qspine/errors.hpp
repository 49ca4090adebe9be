#pragma once

#include <stdexcept>
#include <string>

namespace qspine {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : Error {
    explicit NotPrime(long n) : Error("not a prime: " + std::to_string(n)) {}
};

struct PrimeTooSmall : Error {
    explicit PrimeTooSmall(long n) : Error("prime must be >= 5, got " + std::to_string(n)) {}
};

struct DenominatorDivisibleByP : Error {
    using Error::Error;
};

struct MixedPrime : Error {
    MixedPrime(long a, long b)
        : Error("mixed primes: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct NotDivisibleInR : Error {
    using Error::Error;
};

struct NDivisibleByP : Error {
    NDivisibleByP(long n, long p)
        : Error("n = " + std::to_string(n) + " is divisible by p = " + std::to_string(p)) {}
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

struct UnknownGenerator : Error {
    UnknownGenerator(const std::string& name, std::size_t pos)
        : Error("unknown generator '" + name + "' at position " + std::to_string(pos)),
          position(pos) {}
    std::size_t position;
};

struct InvalidMove : Error {
    using Error::Error;
};

struct ChiTooSmall : Error {
    explicit ChiTooSmall(long chi)
        : Error("Euler characteristic " + std::to_string(chi) +
                " <= 0: homology formula not applicable") {}
};

struct NotSymmetric : Error {
    NotSymmetric() : Error("matrix is not symmetric") {}
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct WidthMismatch : Error {
    WidthMismatch(int a, int b)
        : Error("TL width mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct ColorOutOfRange : Error {
    using Error::Error;
};

struct CableTooWide : Error {
    CableTooWide(int total, int guard)
        : Error("total cable width " + std::to_string(total) + " exceeds guard " +
                std::to_string(guard)) {}
};

struct DegenerateConstant : Error {
    using Error::Error;
};

}  // namespace qspine
