#pragma once

#include <stdexcept>
#include <string>

namespace farey {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Zero denominator with zero numerator, or otherwise not a vertex of the Farey graph.
struct InvalidVertex : Error {
    using Error::Error;
};

// A predicate's precondition does not hold (non-adjacent pair, non-clockwise window, ...).
struct DomainError : Error {
    using Error::Error;
};

// Consecutive path vertices are not Farey neighbours.
struct PathError : Error {
    PathError(const std::string& what, long index) : Error(what), index(index) {}
    long index;
};

// A requested index lies outside the data that was supplied.
struct RangeError : Error {
    using Error::Error;
};

// A checked post-condition failed; indicates a bug or inconsistent input data.
struct ValidationError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace farey
