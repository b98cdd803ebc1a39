#ifndef TRIPOTENT_ERRORS_HPP
#define TRIPOTENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tripotent {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape mismatch between operands, or a square-only operation applied to a
// rectangular matrix.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Rejected input values: non-finite entries, malformed JSON, unknown labels
// or variants, infeasible generator requests.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

// An iterative kernel failed to converge within its iteration budget.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// An operation that requires a Hermitian input received one that is not
// Hermitian within tolerance.
class NotHermitianError : public Error {
public:
    using Error::Error;
};

// signature() was asked to classify a matrix that is not orthogonal
// tripotent within tolerance.
class NotThreeOpError : public Error {
public:
    using Error::Error;
};

// An eigenvalue landed too far from every admissible target value; usually a
// sign of tolerance misconfiguration.
class UnclassifiableEigenvalueError : public Error {
public:
    using Error::Error;
};

// The requested class has no canonical-form membership criterion.
class UnsupportedLabelError : public Error {
public:
    using Error::Error;
};

// The supplied exponent parameters violate a checker's side conditions.
class SideConditionError : public Error {
public:
    using Error::Error;
};

} // namespace tripotent

#endif
