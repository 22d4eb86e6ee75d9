// Dense truncated power series over an exact coefficient ring.
//
// UniSeries<R> holds sum_{k<=T} c_k x^k, BiSeries<R> holds the rectangle
// sum_{i<=T1, j<=T2} c_{ij} x1^i x2^j.  Truncation orders are explicit and
// conservative: multiplying series of different orders truncates to the
// minimum, and *reading* a coefficient beyond the stored order throws --
// an out-of-range read means some pipeline chose its truncation too small,
// which must abort rather than silently produce a wrong exact number.
//
// Division is only ever by units (nonzero constant term) or by explicit
// powers of the variable.  The latter goes through shift_down(), which
// checks that the discarded low-order coefficients are exactly zero; this is
// how all the (lambda h + x)^N - h^N pole cancellations are performed.
//
// The coefficient ring R is Q (Rational) or a cyclotomic field element; the
// ring is reached through the ring_zero/ring_one/ring_inverse/ring_is_zero
// customization points so the same templates serve both.

#pragma once

#include <quotloc/rational.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace quotloc {

inline Rational ring_zero(const Rational&) { return Rational(0); }
inline Rational ring_one(const Rational&) { return Rational(1); }
inline bool ring_is_zero(const Rational& x) { return x == 0; }
inline Rational ring_inverse(const Rational& x) {
  if (x == 0) throw std::domain_error("ring_inverse: rational zero");
  return Rational(1) / x;
}

template <class R>
class UniSeries {
 public:
  UniSeries(std::size_t trunc, const R& zero)
      : coeffs_(trunc + 1, zero) {}

  static UniSeries constant(std::size_t trunc, const R& value) {
    UniSeries s(trunc, ring_zero(value));
    s.coeffs_[0] = value;
    return s;
  }

  std::size_t trunc() const { return coeffs_.size() - 1; }

  const R& coeff(std::size_t k) const {
    if (k >= coeffs_.size())
      throw std::out_of_range("UniSeries::coeff: index beyond truncation order");
    return coeffs_[k];
  }

  void set_coeff(std::size_t k, const R& v) {
    if (k >= coeffs_.size())
      throw std::out_of_range("UniSeries::set_coeff: index beyond truncation order");
    coeffs_[k] = v;
  }

  const R& zero_sample() const { return coeffs_[0]; }

  UniSeries operator-() const {
    UniSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend UniSeries operator+(const UniSeries& a, const UniSeries& b) {
    UniSeries r(std::min(a.trunc(), b.trunc()), ring_zero(a.coeffs_[0]));
    for (std::size_t k = 0; k <= r.trunc(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return r;
  }

  friend UniSeries operator-(const UniSeries& a, const UniSeries& b) {
    UniSeries r(std::min(a.trunc(), b.trunc()), ring_zero(a.coeffs_[0]));
    for (std::size_t k = 0; k <= r.trunc(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return r;
  }

  friend UniSeries operator*(const UniSeries& a, const UniSeries& b) {
    const R zero = ring_zero(a.coeffs_[0]);
    UniSeries r(std::min(a.trunc(), b.trunc()), zero);
    for (std::size_t i = 0; i <= r.trunc(); ++i) {
      R acc = zero;
      for (std::size_t j = 0; j <= i; ++j) acc += a.coeffs_[j] * b.coeffs_[i - j];
      r.coeffs_[i] = acc;
    }
    return r;
  }

  UniSeries scaled(const R& s) const {
    UniSeries r = *this;
    for (auto& c : r.coeffs_) c = c * s;
    return r;
  }

  bool operator==(const UniSeries& other) const {
    if (trunc() != other.trunc()) return false;
    for (std::size_t k = 0; k <= trunc(); ++k)
      if (!ring_is_zero(coeffs_[k] - other.coeffs_[k])) return false;
    return true;
  }

  // Multiplicative inverse; requires a unit constant term.
  UniSeries invert() const {
    const R zero = ring_zero(coeffs_[0]);
    if (ring_is_zero(coeffs_[0]))
      throw std::domain_error("UniSeries::invert: constant term is not a unit");
    const R c0inv = ring_inverse(coeffs_[0]);
    UniSeries r(trunc(), zero);
    r.coeffs_[0] = c0inv;
    for (std::size_t k = 1; k <= trunc(); ++k) {
      R acc = zero;
      for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
      r.coeffs_[k] = -(c0inv * acc);
    }
    return r;
  }

  // Integer power; negative exponents invert first.
  UniSeries pow(long e) const {
    if (e < 0) return invert().pow(-e);
    UniSeries acc = constant(trunc(), ring_one(coeffs_[0]));
    UniSeries base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
      if (k & 1UL) acc = acc * base;
      base = (k >>= 1UL) ? base * base : base;
    }
    return acc;
  }

  // Exact division by x^k: the k discarded low coefficients must vanish.
  // Truncation drops by k (those top coefficients are no longer known).
  UniSeries shift_down(std::size_t k) const {
    if (k > trunc())
      throw std::out_of_range("UniSeries::shift_down: shift exceeds truncation");
    for (std::size_t j = 0; j < k; ++j)
      if (!ring_is_zero(coeffs_[j]))
        throw std::domain_error(
            "UniSeries::shift_down: low-order coefficient is not exactly zero; "
            "pole did not cancel");
    UniSeries r(trunc() - k, ring_zero(coeffs_[0]));
    for (std::size_t j = 0; j <= r.trunc(); ++j) r.coeffs_[j] = coeffs_[j + k];
    return r;
  }

  // Multiplication by x^k at fixed truncation (top coefficients fall off).
  UniSeries shift_up(std::size_t k) const {
    UniSeries r(trunc(), ring_zero(coeffs_[0]));
    for (std::size_t j = k; j <= trunc(); ++j) r.coeffs_[j] = coeffs_[j - k];
    return r;
  }

 private:
  std::vector<R> coeffs_;
};

template <class R>
class BiSeries {
 public:
  BiSeries(std::size_t trunc1, std::size_t trunc2, const R& zero)
      : t1_(trunc1), t2_(trunc2), coeffs_((trunc1 + 1) * (trunc2 + 1), zero) {}

  static BiSeries constant(std::size_t t1, std::size_t t2, const R& value) {
    BiSeries s(t1, t2, ring_zero(value));
    s.at(0, 0) = value;
    return s;
  }

  // Embed a univariate series as a series in variable `var` (1 or 2).
  static BiSeries from_univariate(const UniSeries<R>& u, int var, std::size_t t1,
                                  std::size_t t2) {
    BiSeries s(t1, t2, ring_zero(u.zero_sample()));
    const std::size_t limit = (var == 1) ? t1 : t2;
    if (u.trunc() < limit)
      throw std::out_of_range("BiSeries::from_univariate: univariate factor under-truncated");
    for (std::size_t k = 0; k <= limit; ++k)
      (var == 1 ? s.at(k, 0) : s.at(0, k)) = u.coeff(k);
    return s;
  }

  std::size_t trunc1() const { return t1_; }
  std::size_t trunc2() const { return t2_; }

  const R& coeff(std::size_t i, std::size_t j) const {
    if (i > t1_ || j > t2_)
      throw std::out_of_range("BiSeries::coeff: index beyond truncation order");
    return coeffs_[i * (t2_ + 1) + j];
  }

  void set_coeff(std::size_t i, std::size_t j, const R& v) {
    if (i > t1_ || j > t2_)
      throw std::out_of_range("BiSeries::set_coeff: index beyond truncation order");
    coeffs_[i * (t2_ + 1) + j] = v;
  }

  const R& zero_sample() const { return coeffs_[0]; }

  BiSeries operator-() const {
    BiSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    BiSeries r(std::min(a.t1_, b.t1_), std::min(a.t2_, b.t2_), ring_zero(a.coeffs_[0]));
    for (std::size_t i = 0; i <= r.t1_; ++i)
      for (std::size_t j = 0; j <= r.t2_; ++j) r.at(i, j) = a.coeff(i, j) + b.coeff(i, j);
    return r;
  }

  friend BiSeries operator-(const BiSeries& a, const BiSeries& b) {
    BiSeries r(std::min(a.t1_, b.t1_), std::min(a.t2_, b.t2_), ring_zero(a.coeffs_[0]));
    for (std::size_t i = 0; i <= r.t1_; ++i)
      for (std::size_t j = 0; j <= r.t2_; ++j) r.at(i, j) = a.coeff(i, j) - b.coeff(i, j);
    return r;
  }

  friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    const R zero = ring_zero(a.coeffs_[0]);
    BiSeries r(std::min(a.t1_, b.t1_), std::min(a.t2_, b.t2_), zero);
    for (std::size_t i = 0; i <= r.t1_; ++i)
      for (std::size_t j = 0; j <= r.t2_; ++j) {
        R acc = zero;
        for (std::size_t p = 0; p <= i; ++p)
          for (std::size_t q = 0; q <= j; ++q) acc += a.coeff(p, q) * b.coeff(i - p, j - q);
        r.at(i, j) = acc;
      }
    return r;
  }

  BiSeries scaled(const R& s) const {
    BiSeries r = *this;
    for (auto& c : r.coeffs_) c = c * s;
    return r;
  }

  bool operator==(const BiSeries& other) const {
    if (t1_ != other.t1_ || t2_ != other.t2_) return false;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (!ring_is_zero(coeffs_[k] - other.coeffs_[k])) return false;
    return true;
  }

  BiSeries invert() const {
    const R zero = ring_zero(coeffs_[0]);
    if (ring_is_zero(coeff(0, 0)))
      throw std::domain_error("BiSeries::invert: constant term is not a unit");
    const R c0inv = ring_inverse(coeff(0, 0));
    BiSeries r(t1_, t2_, zero);
    // Solve (this * r) = 1 coefficient by coefficient in graded-lex order.
    for (std::size_t i = 0; i <= t1_; ++i)
      for (std::size_t j = 0; j <= t2_; ++j) {
        R acc = zero;
        for (std::size_t p = 0; p <= i; ++p)
          for (std::size_t q = 0; q <= j; ++q) {
            if (p == i && q == j) continue;
            acc += coeff(i - p, j - q) * r.coeff(p, q);
          }
        if (i == 0 && j == 0)
          r.at(0, 0) = c0inv;
        else
          r.at(i, j) = -(c0inv * acc);
      }
    return r;
  }

  BiSeries pow(long e) const {
    if (e < 0) return invert().pow(-e);
    BiSeries acc = constant(t1_, t2_, ring_one(coeffs_[0]));
    BiSeries base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
      if (k & 1UL) acc = acc * base;
      base = (k >>= 1UL) ? base * base : base;
    }
    return acc;
  }

  // Exact division by (variable var)^k with zero-checks, as in UniSeries.
  BiSeries shift_down(int var, std::size_t k) const {
    const std::size_t tv = (var == 1) ? t1_ : t2_;
    if (k > tv) throw std::out_of_range("BiSeries::shift_down: shift exceeds truncation");
    for (std::size_t low = 0; low < k; ++low) {
      const std::size_t other = (var == 1) ? t2_ : t1_;
      for (std::size_t j = 0; j <= other; ++j) {
        const R& c = (var == 1) ? coeff(low, j) : coeff(j, low);
        if (!ring_is_zero(c))
          throw std::domain_error(
              "BiSeries::shift_down: low-order coefficient is not exactly zero; "
              "pole did not cancel");
      }
    }
    BiSeries r((var == 1) ? t1_ - k : t1_, (var == 2) ? t2_ - k : t2_, ring_zero(coeffs_[0]));
    for (std::size_t i = 0; i <= r.t1_; ++i)
      for (std::size_t j = 0; j <= r.t2_; ++j)
        r.at(i, j) = (var == 1) ? coeff(i + k, j) : coeff(i, j + k);
    return r;
  }

 private:
  R& at(std::size_t i, std::size_t j) { return coeffs_[i * (t2_ + 1) + j]; }

  std::size_t t1_, t2_;
  std::vector<R> coeffs_;
};

// Res_{x=0} x^a (1+x)^(N-1+b) / ((1+x)^N - 1)^(c+1), evaluated by raw series
// expansion over Q.  ((1+x)^N - 1) = x * u(x) with u a unit, so the residue is
// the coefficient of x^(c-a) in (1+x)^(N-1+b) u(x)^-(c+1); when a > c the
// function is regular at 0 and the residue vanishes.  This is the slow
// independent oracle against which the closed-form evaluator is tested.
inline Rational residue_oracle(long a, long b, long c, long N) {
  if (a < 0 || c < 0 || N < 1)
    throw std::invalid_argument("residue_oracle: need a >= 0, c >= 0, N >= 1");
  if (a > c) return Rational(0);
  const std::size_t trunc = static_cast<std::size_t>(a + c + 2);
  UniSeries<Rational> one_plus_x(trunc, Rational(0));
  one_plus_x.set_coeff(0, Rational(1));
  one_plus_x.set_coeff(1, Rational(1));
  const UniSeries<Rational> numerator = one_plus_x.pow(N - 1 + b);
  const UniSeries<Rational> u =
      (one_plus_x.pow(N) - UniSeries<Rational>::constant(trunc, Rational(1))).shift_down(1);
  const UniSeries<Rational> f = numerator * u.pow(-(c + 1));
  return f.coeff(static_cast<std::size_t>(c - a));
}

}  // namespace quotloc
