#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minorkit {

// Every library error carries a kind so callers (and the CLI exit-code map)
// can dispatch without string matching.
enum class ErrorKind {
    parse,                    // bad input text; position info in the message
    ring_mismatch,            // operands from different rings
    nonlinear_entry,          // a matrix entry or substitution image is not a linear form
    degenerate_input,         // input violates an operation precondition
    resource_cap,             // pair/degree/variable caps exceeded
    eigenvalues_not_in_field, // pencil eigenvalues outside the base field
    certificate,              // decomposition certificate failed to check
    condition_violated,       // sum-partition condition (iii) failure
    syzygy_invalid,           // supplied syzygy does not annihilate the generators
    power_not_in_syzygy,      // f_k^r is not the supplied combination
    verification_failed,      // an oracle check came back false
    internal,                 // broken invariant inside the library
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    ErrorKind kind;
};

struct ParsePos {
    size_t line = 0; // 1-based
    size_t col = 0;  // 1-based
};

class ParseError : public Error {
  public:
    ParseError(ParsePos p, const std::string& msg)
        : Error(ErrorKind::parse,
                "line " + std::to_string(p.line) + ", col " + std::to_string(p.col) + ": " + msg),
          pos(p) {}
    ParsePos pos;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

} // namespace minorkit
