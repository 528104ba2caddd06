#pragma once

#include <stdexcept>
#include <string>

namespace birdtrack {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (DSL, cycle notation, coefficient text, JSON).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A configured cap (term count, degree, bar width, search depth) was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Mathematically undefined request: division by zero, pole, incompatible shapes.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed (e.g. oracle disagreement).
class VerificationError : public Error {
public:
    using Error::Error;
};

}  // namespace birdtrack
