#pragma once

#include <stdexcept>
#include <string>

namespace trop {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Incompatible matrix/vector shapes.
struct ShapeError : Error {
    using Error::Error;
};

/// 1-based index outside the valid range.
struct IndexError : Error {
    using Error::Error;
};

/// Operation undefined for the given values (division by -inf,
/// pseudo-inverse of a singular matrix, witness of independent rows, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Combinatorial size guard tripped (factorial / subset enumeration).
struct SizeGuardError : Error {
    using Error::Error;
};

/// Malformed input text.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what), line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

/// A constructed certificate failed its own re-validation; indicates a bug,
/// never a property of the input.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace trop
