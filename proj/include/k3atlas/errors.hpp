#ifndef K3ATLAS_ERRORS_HPP
#define K3ATLAS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace k3atlas {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Malformed polynomial source text; carries line/column.
struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int ln, int col)
        : Error(msg + " (line " + std::to_string(ln) + ", column " + std::to_string(col) + ")"),
          line(ln), column(col) {}
};

// Operands built over different variable contexts.
struct ArityError : Error {
    using Error::Error;
};

// Numeric evaluation requested while variables remain unbound.
struct MissingBinding : Error {
    using Error::Error;
};

// Requested accuracy not reachable within the configured truncation caps.
struct PrecisionError : Error {
    using Error::Error;
};

// Moebius denominator (C kappa + D) numerically singular.
struct SingularError : Error {
    using Error::Error;
};

// Induced-isometry derivation failed its own verification.
struct DerivationError : Error {
    using Error::Error;
};

// An exact polynomial identity check failed; message carries witness terms.
struct IdentityError : Error {
    using Error::Error;
};

// A rational map was evaluated at one of its indeterminacy points.
struct IndeterminacyError : Error {
    using Error::Error;
};

// Operation undefined on the Humbert locus (cusp-form denominator vanishes).
struct HumbertError : Error {
    using Error::Error;
};

// Bad command-line or JSON input (CLI exit code 2).
struct InputError : Error {
    using Error::Error;
};

} // namespace k3atlas

#endif
