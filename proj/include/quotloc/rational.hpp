// Exact rational arithmetic for the whole engine.
//
// Every quantity in this project is an element of Q or of a cyclotomic field
// over Q; no floating point appears anywhere in the computational pipeline.
// The underlying bignum machinery is GMP's mpq_class; this header pins the
// invariants we rely on (canonical form: lowest terms, positive denominator)
// and provides the small amount of glue (parsing, formatting, integer powers)
// the rest of the code needs.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quotloc {

using Rational = mpq_class;
using Integer = mpz_class;

// Build p/q in canonical form. mpq_class(p, q) alone does not canonicalize.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// q^e for signed e; q = 0 requires e >= 0.
inline Rational pow_rational(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("pow_rational: 0 to negative power");
    return Rational(0);
  }
  Rational result;
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), k);
  if (e < 0) {
    mpq_inv(result.get_mpq_t(), result.get_mpq_t());
  }
  result.canonicalize();
  return result;
}

inline Integer factorial_integer(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

inline Rational factorial(long n) { return Rational(factorial_integer(n)); }

// "p/q" or "p"; this is the wire format used by the CLI reports and the
// python bindings, chosen so exactness survives serialization.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rational_from_string(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("rational_from_string: cannot parse '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace quotloc
