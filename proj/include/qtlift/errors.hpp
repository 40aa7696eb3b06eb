#ifndef QTLIFT_ERRORS_HPP
#define QTLIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qtlift {

// Malformed or inconsistent user input (shapes, rationals, indices).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The hypotheses of the construction do not hold (failed validation gate).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (e.g. star on an element not in m^2).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operands built over different algebras, leg counts or truncations.
class ContextMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The defects (alpha, beta) violate the cocycle conditions. For valid input this
// cannot happen, so it always indicates either bad input or an engine bug.
class CocycleConditionError : public std::runtime_error {
public:
    CocycleConditionError(const std::string& what, std::string residual_summary)
        : std::runtime_error(what), residual_(std::move(residual_summary)) {}
    const std::string& residual() const noexcept { return residual_; }

private:
    std::string residual_;
};

// An internal invariant (homogeneity, counit, cross-check) failed.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace qtlift

#endif
