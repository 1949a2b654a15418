#pragma once

#include <gmpxx.h>

#include <string>

#include "torfol/errors.hpp"

namespace torfol {

// Exact arithmetic is delegated to GMP. mpq_class keeps values canonical
// (lowest terms, positive denominator, 0 = 0/1), which is exactly the
// representation contract we need.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw ArgumentError("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// "n" or "n/d", canonical form.
inline std::string to_string(const Rational& r) { return r.get_num().get_str() + (r.get_den() == 1 ? "" : "/" + r.get_den().get_str()); }

} // namespace torfol
