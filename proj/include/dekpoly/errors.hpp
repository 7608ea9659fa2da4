#pragma once

#include <stdexcept>
#include <string>

namespace dekpoly {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic between incompatible scalar fields (e.g. quadratic extensions
// over different radicands).
struct FieldError : Error {
    explicit FieldError(const std::string& what) : Error(what) {}
};

// exact_divide with a nonzero remainder, or a ring division that is not exact.
struct DivisionError : Error {
    explicit DivisionError(const std::string& what) : Error(what) {}
};

// The 2x2 construction system (or a biorthogonal moment determinant) is
// singular at some degree; carries the degree where the dichotomy failed.
struct DegenerateError : Error {
    int degree;
    DegenerateError(int n, const std::string& what) : Error(what), degree(n) {}
};

// A multiplier polynomial whose derivative does not vanish at +-i.
struct InvalidPsiError : Error {
    explicit InvalidPsiError(const std::string& what) : Error(what) {}
};

// An iteration that did not reach its tolerance; carries diagnostics in what().
struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& what) : Error(what) {}
};

// Operation requested on a field/backend combination that cannot support it.
struct UnsupportedError : Error {
    explicit UnsupportedError(const std::string& what) : Error(what) {}
};

// Malformed configuration, descriptor file, or CLI usage.
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// Filesystem failure distinct from bad configuration.
struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

} // namespace dekpoly
