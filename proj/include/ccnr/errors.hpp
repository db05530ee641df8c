#pragma once

#include <stdexcept>
#include <string>

namespace ccnr {

// Exception types, one per rejected precondition. All derive from Error so
// callers can catch the whole family at the CLI boundary.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSquare : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct DimsMismatch : Error {
    using Error::Error;
};

struct BadDims : Error {
    using Error::Error;
};

struct BadOrder : Error {
    using Error::Error;
};

struct NegativeEntry : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct RegimeError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace ccnr
