#include "anomcheck/scalar.hpp"

#include <cstdio>
#include <sstream>

#include "anomcheck/error.hpp"

namespace anomcheck {

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Complex& c) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.17g%+.17gj)", c.real(), c.imag());
  return buf;
}

Rational pow2(int exponent) {
  Rational out = 1;
  if (exponent >= 0) {
    mpz_mul_2exp(out.get_num_mpz_t(), out.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  } else {
    mpz_mul_2exp(out.get_den_mpz_t(), out.get_den_mpz_t(), static_cast<unsigned long>(-exponent));
  }
  return out;
}

Rational rational_pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (is_zero(base)) throw PreconditionError("zero to a negative power");
    Rational inv = 1 / base;
    return rational_pow(inv, -exponent);
  }
  Rational out = 1;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  out.canonicalize();
  return out;
}

Rational factorial(int n) {
  if (n < 0) throw PreconditionError("factorial of a negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw PreconditionError("empty rational literal");
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    Rational r;
    if (r.set_str(text, 10) != 0 || r.get_den() == 0) {
      throw PreconditionError("malformed rational literal '" + text + "'");
    }
    r.canonicalize();
    return r;
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::size_t frac_len = text.size() - dot - 1;
  mpz_class num;
  if (digits.empty() || digits == "-" || num.set_str(digits, 10) != 0) {
    throw PreconditionError("malformed decimal literal '" + text + "'");
  }
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace anomcheck
