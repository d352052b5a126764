#ifndef REENC_ERRORS_HPP
#define REENC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace reenc {

// Base class for all typed errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// DIMACS input that cannot be read: malformed header, literal out of
// range, unterminated clause, bad aux declaration.
struct ParseError : Error {
    using Error::Error;
};

// A clause contains a complementary pair of literals.
struct TautologyError : Error {
    using Error::Error;
};

// An operation that requires a fixed clause width was given something else.
struct WidthError : Error {
    using Error::Error;
};

// Numeric argument outside the operation's domain (e.g. n < 0, k > n).
struct DomainError : Error {
    using Error::Error;
};

// Directed part of a diagram (or the aux part of a network) has a cycle.
// `cycle` holds one witness cycle, first vertex repeated at the end.
struct CycleError : Error {
    std::vector<unsigned> cycle;
    CycleError(const std::string& what, std::vector<unsigned> cyc)
        : Error(what), cycle(std::move(cyc)) {}
};

// An operation that requires a simple formula was given a non-simple one.
struct NotSimpleError : Error {
    using Error::Error;
};

// The monotone construction was given a diagram with directed edges.
struct MixedEdgesError : Error {
    using Error::Error;
};

// reduce_biclique preconditions violated (edges absent, polarity clash,
// overlapping sides, empty side).
struct NotCoherentBicliqueError : Error {
    using Error::Error;
};

// apply_bva_step: some product clause C_i ∨ D_j is not in the formula.
struct PatternMissingError : Error {
    using Error::Error;
};

// Variable elimination exceeded the configured clause cap.
struct BlowupGuardError : Error {
    using Error::Error;
};

// External solver could not be run or produced unusable output.
struct SolverError : Error {
    using Error::Error;
};

} // namespace reenc

#endif
