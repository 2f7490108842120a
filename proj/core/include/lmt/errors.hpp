#pragma once

#include <stdexcept>
#include <string>

namespace lmt {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input violated a Hermitian-symmetry precondition.
struct NotHermitian : Error {
    using Error::Error;
};

/// Input violated a positive-semidefiniteness precondition.
struct NotPsd : Error {
    using Error::Error;
};

/// An iterative solver hit its iteration cap.
struct NoConvergence : Error {
    using Error::Error;
};

/// A certified search hit its evaluation cap before reaching the
/// requested bracket width.  Carries the bracket achieved so far.
struct BudgetExceeded : Error {
    BudgetExceeded(const std::string& msg, double lo_, double hi_, long evaluations_)
        : Error(msg), lo(lo_), hi(hi_), evaluations(evaluations_) {}
    double lo;
    double hi;
    long evaluations;
};

/// A generated operator failed its own class certification (bug signal).
struct KindUnsatisfied : Error {
    using Error::Error;
};

/// A finite weight list is too short for the requested index window.
struct IndexOutOfWindow : Error {
    using Error::Error;
};

/// Malformed matrix file or unparsable input data.
struct FormatError : Error {
    using Error::Error;
};

}  // namespace lmt
