#pragma once

#include <stdexcept>
#include <string>

namespace cwskit {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands have incompatible sizes (vector lengths, matrix shapes).
struct DimensionError : Error {
    using Error::Error;
};

// Input is outside the domain an operation supports (preconditions,
// unsupported parameters, undefined quantities).
struct DomainError : Error {
    using Error::Error;
};

// Caller violated an API contract (e.g. passed a subset that does not sum
// to zero, or a report that the operation cannot accept).
struct ContractError : Error {
    using Error::Error;
};

// Malformed textual input (graph6, code files, bitstrings).
struct ParseError : Error {
    using Error::Error;
};

// An enumeration or search exceeded its configured budget. Results are
// never silently truncated; this is raised instead.
struct BudgetError : Error {
    using Error::Error;
};

} // namespace cwskit
