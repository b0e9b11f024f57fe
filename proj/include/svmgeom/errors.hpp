#pragma once

#include <stdexcept>
#include <string>

namespace svmgeom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// zero / numerically-degenerate direction passed where a direction is required
struct InvalidDirectionError : Error {
    using Error::Error;
};

// a computed direction collapsed to (numerical) zero, e.g. equal class means
struct DegenerateDirectionError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

// CSV / JSON ingestion problems; carries the offending row when known
struct ParseError : Error {
    explicit ParseError(const std::string& msg, long row = -1)
        : Error(row >= 0 ? msg + " (row " + std::to_string(row) + ")" : msg), row(row) {}
    long row;
};

// iterative solver ran out of iterations; carries the best bracket achieved
struct ConvergenceError : Error {
    ConvergenceError(const std::string& msg, double lower, double upper)
        : Error(msg), lower(lower), upper(upper) {}
    double lower;
    double upper;
};

struct SeparabilityError : Error {
    using Error::Error;
};

struct RankError : Error {
    using Error::Error;
};

struct SolverError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

} // namespace svmgeom
