#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace torfol {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live in different rings (variable counts disagree).
struct ContextError : Error {
    using Error::Error;
};

/// An argument violates a documented precondition.
struct ArgumentError : Error {
    using Error::Error;
};

/// A polynomial that was required to be homogeneous is not.
/// Carries the two offending monomials (printed form).
struct HomogeneityError : Error {
    std::string monomial_a, monomial_b;
    HomogeneityError(const std::string& what, std::string ma, std::string mb)
        : Error(what), monomial_a(std::move(ma)), monomial_b(std::move(mb)) {}
};

/// The configured step budget was exhausted.
struct ResourceError : Error {
    using Error::Error;
};

/// Fan data is malformed (rays not spanning, bad cone, ...).
struct FanError : Error {
    using Error::Error;
};

/// Completeness step hit a non-smooth cone; carries the cone's ray indices.
struct ObstructionError : Error {
    std::vector<int> cone_rays;
    ObstructionError(const std::string& what, std::vector<int> rays)
        : Error(what), cone_rays(std::move(rays)) {}
};

/// A linear system that was required to be solvable is not.
struct RepresentationError : Error {
    using Error::Error;
};

/// Degree bookkeeping failed (violated lattice relation, mismatch, ...).
struct DegreeError : Error {
    using Error::Error;
};

/// A scalar degree that must be nonzero vanished.
struct DegenerateDegreeError : Error {
    using Error::Error;
};

/// A relation vector cannot be extended to a lattice basis.
struct LatticeError : Error {
    using Error::Error;
};

/// Expression or file syntax error; position is a 0-based byte offset.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos) : Error(what), position(pos) {}
};

} // namespace torfol
