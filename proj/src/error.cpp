#include <hyperform/error.hpp>

namespace hyperform {

int exit_status(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::validation:
    case ErrorKind::dimension:
    case ErrorKind::mismatch:
    case ErrorKind::inconsistent_input:
    case ErrorKind::unsupported_form:
        return 1;
    case ErrorKind::precondition:
    case ErrorKind::degenerate_input:
    case ErrorKind::invalid_hyperplane:
    case ErrorKind::no_cut:
    case ErrorKind::absolute_case:
        return 2;
    case ErrorKind::internal:
        return 3;
    }
    return 3;
}

const char* kind_name(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::validation: return "validation error";
    case ErrorKind::dimension: return "dimension error";
    case ErrorKind::mismatch: return "mismatch error";
    case ErrorKind::inconsistent_input: return "inconsistent input";
    case ErrorKind::unsupported_form: return "unsupported form";
    case ErrorKind::precondition: return "precondition error";
    case ErrorKind::degenerate_input: return "degenerate input";
    case ErrorKind::invalid_hyperplane: return "invalid hyperplane";
    case ErrorKind::no_cut: return "no cut";
    case ErrorKind::absolute_case: return "absolute case";
    case ErrorKind::internal: return "internal inconsistency";
    }
    return "error";
}

}  // namespace hyperform
