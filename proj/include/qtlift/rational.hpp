#ifndef QTLIFT_RATIONAL_HPP
#define QTLIFT_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qtlift {

/// Exact rational scalar used throughout the engine.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (integers only, no decimals). Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering; the denominator is always printed.
std::string to_fraction_string(const Rational& q);

/// num/den in canonical form; den must be nonzero.
inline Rational ratio(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// n! as a rational; n is small everywhere it is used.
Rational factorial(int n);

} // namespace qtlift

#endif
