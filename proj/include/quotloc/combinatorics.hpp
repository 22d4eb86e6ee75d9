// Generalized binomial coefficients and the small combinatorial identities
// the localization and asymptotic machinery is built from:
//
//   binom_general(z, b)   = z(z-1)...(z-b+1)/b!   for rational z, integer b >= 0
//   euler_alt_sum(a, i)   = sum_p p^i C(a,p) (-1)^(a-p)   (a-th finite difference of p^i)
//   binom_poly_coeffs(j)  = coefficients c(j,i) with C(x,j) = sum_i c(j,i) x^i
//   vandermonde_sum       = sum_{b1+b2=a} C(a1,b1) C(a2,b2) (t+b1-b2)^m
//                           which collapses to (t+a1-a2)^m when a1+a2 = a
//                           and m <= a (false beyond: a1=a2=1/2, a=1, t=0,
//                           m=2 gives 1 vs 0 — the collapse argument only
//                           ever invokes it with m <= a).

#pragma once

#include <quotloc/rational.hpp>

#include <vector>

namespace quotloc {

// Falling-factorial binomial coefficient with rational upper argument.
// b must be >= 0; negative lower indices are a *caller-side* convention
// (terms with them are identically zero and must be skipped before the call).
inline Rational binom_general(const Rational& z, long b) {
  if (b < 0) throw std::invalid_argument("binom_general: negative lower index");
  Rational acc(1);
  for (long i = 0; i < b; ++i) acc *= z - Rational(i);
  return acc / factorial(b);
}

// C(n, k) for plain integers, 0 when k < 0 or k > n (n >= 0).
inline Rational binom_int(long n, long k) {
  if (n < 0) throw std::invalid_argument("binom_int: negative upper index");
  if (k < 0 || k > n) return Rational(0);
  Integer v;
  mpz_bin_uiui(v.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rational(v);
}

// sum_{p=0}^{a} p^i C(a,p) (-1)^(a-p).  Equals 0 for 0 <= i < a and a! for
// i = a: the a-th finite difference annihilates polynomials of degree < a
// and extracts a! from the leading term of p^a.
inline Rational euler_alt_sum(long a, long i) {
  if (a < 0 || i < 0) throw std::invalid_argument("euler_alt_sum: negative argument");
  Rational total(0);
  for (long p = 0; p <= a; ++p) {
    Rational term = binom_int(a, p) * pow_rational(Rational(p), i);
    if ((a - p) % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

// Coefficients of the degree-j polynomial C(x, j) = x(x-1)...(x-j+1)/j!
// in the monomial basis; result[i] multiplies x^i, size j+1.
inline std::vector<Rational> binom_poly_coeffs(long j) {
  if (j < 0) throw std::invalid_argument("binom_poly_coeffs: negative degree");
  std::vector<Rational> poly{Rational(1)};  // running product, constant 1
  poly.reserve(static_cast<std::size_t>(j) + 1);
  for (long i = 0; i < j; ++i) {
    // multiply by (x - i)
    poly.push_back(Rational(0));
    for (std::size_t k = poly.size() - 1; k > 0; --k)
      poly[k] = poly[k - 1] - Rational(i) * poly[k];
    poly[0] *= -Rational(i);
  }
  const Rational jf = factorial(j);
  for (auto& c : poly) c /= jf;
  return poly;
}

// sum_{b1+b2=a} C(a1,b1) C(a2,b2) (t+b1-b2)^m with a2 = a - a1.
// A Vandermonde-type identity evaluates this to (t+a1-a2)^m = (t+2a1-a)^m
// for m <= a (and for no larger m in general); the direct sum is kept as an
// independently testable oracle for it.
inline Rational vandermonde_sum(const Rational& a1, long a, const Rational& t, long m) {
  if (a < 0 || m < 0) throw std::invalid_argument("vandermonde_sum: negative a or m");
  const Rational a2 = Rational(a) - a1;
  Rational total(0);
  for (long b1 = 0; b1 <= a; ++b1) {
    const long b2 = a - b1;
    total += binom_general(a1, b1) * binom_general(a2, b2) *
             pow_rational(t + Rational(b1) - Rational(b2), m);
  }
  return total;
}

// Closed form the identity asserts; exposed so tests can pit it against the sum.
inline Rational vandermonde_closed(const Rational& a1, long a, const Rational& t, long m) {
  return pow_rational(t + a1 + a1 - Rational(a), m);
}

}  // namespace quotloc
