#pragma once

#include <stdexcept>
#include <string>

namespace hyperform {

enum class ErrorKind {
    validation,        // malformed input, schema violations
    dimension,         // mismatched variable counts or chart dimensions
    mismatch,          // user-supplied data does not match the geometry
    inconsistent_input,
    unsupported_form,
    precondition,      // mathematically meaningful input outside an operation's domain
    degenerate_input,
    invalid_hyperplane,
    no_cut,
    absolute_case,
    internal,          // an invariant failed; always a bug
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// CLI exit status for an error: 1 validation, 2 precondition, 3 internal.
int exit_status(ErrorKind kind) noexcept;

const char* kind_name(ErrorKind kind) noexcept;

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace hyperform
