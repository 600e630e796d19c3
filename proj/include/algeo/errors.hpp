#pragma once

#include <stdexcept>
#include <string>

namespace algeo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string &what) : Error(what) {}
};

struct MixedFields : Error {
    MixedFields() : Error("operands belong to different fields") {}
};

struct ParseError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct ArityMismatch : Error {
    using Error::Error;
};

struct MixedAlgebras : Error {
    MixedAlgebras() : Error("cochains belong to different algebras") {}
};

struct SlotOutOfRange : Error {
    using Error::Error;
};

struct SlotCollision : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct CarrierClosure : Error {
    using Error::Error;
};

struct DegreeUnderflow : Error {
    using Error::Error;
};

struct Truncated : Error {
    using Error::Error;
};

} // namespace algeo
