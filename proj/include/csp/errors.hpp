#ifndef CSP_ERRORS_HPP
#define CSP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace csp {

// Raised when an operation cannot decide its result within the configured
// work bound (e.g. the order of p^n - 1 could not be fully factored).
// Deliberately distinct from invalid_argument: the input is fine, the
// answer is unknown.
struct undecided_error : std::runtime_error {
    explicit undecided_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an enumeration would exceed its configured volume budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a checkpoint file is malformed or inconsistent with the
// search specification that tries to resume from it.
struct checkpoint_error : std::runtime_error {
    explicit checkpoint_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace csp

#endif
