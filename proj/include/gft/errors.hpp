#ifndef GFT_ERRORS_HPP
#define GFT_ERRORS_HPP

#include <stdexcept>

namespace gft {

/// Two series operands disagree on truncation order.
struct OrderMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Division by a series whose constant term is numerically zero.
struct DivisionBySingularSeries : std::domain_error {
    using std::domain_error::domain_error;
};

/// pow_real applied to a series whose constant term is not 1.
struct PowBaseNotUnit : std::domain_error {
    using std::domain_error::domain_error;
};

/// compose with an inner series that does not vanish at the origin.
struct ComposeNotLocal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Series violating the normalization f(0)=0, f'(0)=1.
struct NotNormalized : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Rational evaluation requested too close to a pole.
struct PoleProximity : std::domain_error {
    using std::domain_error::domain_error;
};

/// Atom list violating the probability-measure invariants.
struct InvalidMeasure : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Pseudo-starlikeness order outside [1, inf).
struct LambdaOutOfRange : std::domain_error {
    using std::domain_error::domain_error;
};

/// Fibonacci index beyond the exact-integer capacity.
struct FibOverflow : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace gft

#endif
