#pragma once

#include <stdexcept>
#include <string>

namespace eds {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A division that the recurrence theory promises to be exact left a remainder;
// the initial values do not define an integer sequence.
struct NonExactDivision : Error {
    using Error::Error;
};

// Every usable instantiation of the recurrence has a zero divisor.
struct NoUsableInstantiation : Error {
    using Error::Error;
};

// An equivalence transform produced a non-integral term.
struct NonIntegerResult : Error {
    using Error::Error;
};

struct InvalidAlpha : Error {
    using Error::Error;
};

struct SingularCurve : Error {
    using Error::Error;
};

struct UnsupportedRank : Error {
    using Error::Error;
};

// p = 2, p composite, or p divides an evaluated basis factor so the whole
// reduction collapses.
struct BadPrime : Error {
    using Error::Error;
};

// Ward's formula needs rank of apparition > 3.
struct RankTooSmall : Error {
    using Error::Error;
};

struct PeriodNotFound : Error {
    using Error::Error;
};

struct ZeroTermResidue : Error {
    using Error::Error;
};

struct UnknownCondition : Error {
    using Error::Error;
};

struct Unsolvable : Error {
    using Error::Error;
};

// A shipped exponent table produced a non-integral exponent; must never fire.
struct NonIntegralExponent : Error {
    using Error::Error;
};

}  // namespace eds
