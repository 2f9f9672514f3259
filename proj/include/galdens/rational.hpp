#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace galdens {

/// Exact density type. All densities in the library are carried as
/// canonical GMP rationals; nothing is rounded until it is printed.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Accepts "p/q", "-p/q", integers and finite decimals ("0.37", "1e-3").
/// Decimals are converted exactly (0.37 -> 37/100).
Rational parse_rational(std::string_view text);

Rational make_rational(long num, long den = 1);

std::string to_string(const Rational& r);
double to_double(const Rational& r);

inline Rational abs_diff(const Rational& a, const Rational& b) {
    Rational d = a - b;
    return d < 0 ? Rational(-d) : d;
}

}  // namespace galdens
