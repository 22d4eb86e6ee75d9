// Exact arithmetic in the cyclotomic field Q(zeta_N), N an odd prime.
//
// Elements are stored as rational coordinate vectors of length N-1 against
// the power basis 1, z, ..., z^(N-2), where z is a fixed primitive N-th root
// of unity; the defining relation is the cyclotomic polynomial
// Phi_N(z) = 1 + z + ... + z^(N-1) = 0, i.e. z^(N-1) = -(1 + z + ... + z^(N-2)).
//
// N prime keeps the basis reduction trivial and makes every nontrivial root
// a primitive one, which is exactly the regime the torus weights live in.
// Inversion runs the extended Euclidean algorithm against Phi_N over Q.

#pragma once

#include <quotloc/rational.hpp>

#include <memory>
#include <string>
#include <vector>

namespace quotloc {

class CycloField {
 public:
  // Validates that N is an odd prime.
  static std::shared_ptr<const CycloField> make(long N);

  long N() const { return N_; }
  std::size_t degree() const { return static_cast<std::size_t>(N_ - 1); }

 private:
  explicit CycloField(long N) : N_(N) {}
  long N_;
};

using FieldPtr = std::shared_ptr<const CycloField>;

class CycloElement {
 public:
  // The rational `value`, embedded.
  CycloElement(FieldPtr field, const Rational& value);

  // zeta^j for any integer j (reduced mod N).
  static CycloElement zeta_power(FieldPtr field, long j);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

  CycloElement operator-() const;
  CycloElement& operator+=(const CycloElement& rhs);
  CycloElement& operator-=(const CycloElement& rhs);
  friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
  friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
  friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
  CycloElement scaled(const Rational& s) const;

  bool operator==(const CycloElement& rhs) const;
  bool is_zero() const;

  // Multiplicative inverse via extended gcd with Phi_N; zero is a hard error.
  CycloElement inverse() const;
  CycloElement pow(long e) const;

  // The Galois automorphism z -> z^r, r != 0 mod N.
  CycloElement galois(long r) const;

  // An element is rational iff all coordinates against z, ..., z^(N-2) vanish.
  bool is_rational() const;
  // The rational part; throws if the element is not rational.
  Rational rational_value() const;

  std::string to_string() const;

 private:
  CycloElement(FieldPtr field, std::vector<Rational> coords)
      : field_(std::move(field)), coords_(std::move(coords)) {}

  FieldPtr field_;
  std::vector<Rational> coords_;  // size N-1
};

inline CycloElement ring_zero(const CycloElement& sample) {
  return CycloElement(sample.field(), Rational(0));
}
inline CycloElement ring_one(const CycloElement& sample) {
  return CycloElement(sample.field(), Rational(1));
}
inline bool ring_is_zero(const CycloElement& x) { return x.is_zero(); }
inline CycloElement ring_inverse(const CycloElement& x) { return x.inverse(); }

enum class RootSumAlgorithm { Direct, Generating };

// sum over the N-1 nontrivial N-th roots of unity of  zeta^e / (1-zeta)^k.
// The total is Galois-invariant, hence rational; Direct computes it in
// Q(zeta_N) and asserts rationality.  Generating (k >= 1) reads it off as
// the coefficient of z^(k-1) in
//     1/z + N (1-z)^((e-1) mod N) / ((1-z)^N - 1),
// a pure power-series computation over Q that stays cheap for large N;
// k <= 0 falls back to Direct (the summands are then polynomials in zeta).
Rational root_sum(long e, long k, long N,
                  RootSumAlgorithm algorithm = RootSumAlgorithm::Direct);

// N -> infinity limit of N^(-k) root_sum((N-1)/2 + a, k, N), independent of a:
//   0 for k < 0,  and  (1 - 2^(1-k)) B_k / k!  for k >= 0
// (the k = 0 value is -1, as the formula gives directly).  Standard-convention
// Bernoulli numbers; the vanishing factor at k = 1 is applied before lookup.
Rational lemma_bern_limit(long k);

}  // namespace quotloc
