#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace anomcheck {

// Exact coefficient field. GMP keeps every value in lowest terms with a
// positive denominator after each arithmetic operation.
using Rational = mpq_class;

// Approximate coefficient field used by the numeric checks.
using Complex = std::complex<double>;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const Complex& c) { return c == Complex{}; }

// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Complex& c);

Rational pow2(int exponent);
Rational rational_pow(const Rational& base, int exponent);
Rational factorial(int n);

inline Complex to_complex(const Rational& r) { return Complex(r.get_d(), 0.0); }

// Parses "3", "-7/2" or a terminating decimal such as "1.5".
Rational parse_rational(const std::string& text);

}  // namespace anomcheck
