#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hhs {

// Exact arbitrary-precision arithmetic. mpq_class keeps values canonical
// (denominator > 0, lowest terms) as long as raw num/den constructions are
// canonicalized, which rational() below takes care of.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational(const BigInt& num, const BigInt& den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int signOf(const Rational& q) { return sgn(q); }

// Accepts "123", "-4/5"; non-canonical fractions like "2/4" are reduced.
// Throws ParseError-free std::invalid_argument; callers attach file context.
Rational rationalFromString(std::string_view text);

// Canonical form: lowest terms, '-' on the numerator only, "a" when den == 1,
// otherwise "a/b".
std::string rationalToString(const Rational& q);

}  // namespace hhs
