#include <quotloc/symprod.hpp>

#include <quotloc/combinatorics.hpp>

#include <stdexcept>

namespace quotloc {

Rational sym_theta_weight(long g, long q) {
  if (g < 0 || q < 0) throw std::invalid_argument("sym_theta_weight: negative argument");
  if (q > g) return Rational(0);
  return factorial(g) / factorial(g - q);
}

Rational integrate_sym_monomial(long g, long d, long p, long q) {
  if (g < 0 || d < 0 || p < 0 || q < 0)
    throw std::invalid_argument("integrate_sym_monomial: negative argument");
  if (p + q != d) return Rational(0);
  return sym_theta_weight(g, q);
}

ThetaSeries::ThetaSeries(FieldPtr field, long genus, std::size_t d1, std::size_t d2,
                         std::size_t theta_cap)
    : field_(std::move(field)), genus_(genus), d1_(d1), d2_(d2), cap_(theta_cap) {
  const CycloElement zero(field_, Rational(0));
  entries_.assign((cap_ + 1) * (cap_ + 1), BiSeries<CycloElement>(d1_, d2_, zero));
}

const BiSeries<CycloElement>& ThetaSeries::entry(std::size_t q1, std::size_t q2) const {
  if (q1 > cap_ || q2 > cap_)
    throw std::out_of_range("ThetaSeries::entry: theta degree beyond cap");
  return entries_[q1 * (cap_ + 1) + q2];
}

void ThetaSeries::set_entry(std::size_t q1, std::size_t q2,
                            const BiSeries<CycloElement>& value) {
  if (q1 > cap_ || q2 > cap_)
    throw std::out_of_range("ThetaSeries::set_entry: theta degree beyond cap");
  entries_[q1 * (cap_ + 1) + q2] = value;
}

ThetaSeries ThetaSeries::scalar(FieldPtr field, long genus, std::size_t d1, std::size_t d2,
                                std::size_t theta_cap, const BiSeries<CycloElement>& value) {
  ThetaSeries s(std::move(field), genus, d1, d2, theta_cap);
  s.set_entry(0, 0, value);
  return s;
}

ThetaSeries operator*(const ThetaSeries& a, const ThetaSeries& b) {
  if (a.genus_ != b.genus_ || a.cap_ != b.cap_ || a.d1_ != b.d1_ || a.d2_ != b.d2_)
    throw std::invalid_argument("ThetaSeries: mismatched shapes in product");
  ThetaSeries r(a.field_, a.genus_, a.d1_, a.d2_, a.cap_);
  for (std::size_t q1 = 0; q1 <= a.cap_; ++q1)
    for (std::size_t q2 = 0; q2 <= a.cap_; ++q2) {
      BiSeries<CycloElement> acc = r.entry(q1, q2);  // zero
      for (std::size_t p1 = 0; p1 <= q1; ++p1)
        for (std::size_t p2 = 0; p2 <= q2; ++p2)
          acc = acc + a.entry(p1, p2) * b.entry(q1 - p1, q2 - p2);
      r.set_entry(q1, q2, acc);
    }
  return r;
}

ThetaSeries operator+(const ThetaSeries& a, const ThetaSeries& b) {
  if (a.genus_ != b.genus_ || a.cap_ != b.cap_ || a.d1_ != b.d1_ || a.d2_ != b.d2_)
    throw std::invalid_argument("ThetaSeries: mismatched shapes in sum");
  ThetaSeries r(a.field_, a.genus_, a.d1_, a.d2_, a.cap_);
  for (std::size_t q1 = 0; q1 <= a.cap_; ++q1)
    for (std::size_t q2 = 0; q2 <= a.cap_; ++q2)
      r.set_entry(q1, q2, a.entry(q1, q2) + b.entry(q1, q2));
  return r;
}

CycloElement integrate_fixed_locus(const ThetaSeries& f) {
  CycloElement total(f.field(), Rational(0));
  const long g = f.genus();
  for (std::size_t q1 = 0; q1 <= f.theta_cap(); ++q1) {
    const Rational w1 = sym_theta_weight(g, static_cast<long>(q1));
    if (w1 == 0) continue;
    if (q1 > f.trunc1()) continue;  // x-degree d1-q1 would be negative
    for (std::size_t q2 = 0; q2 <= f.theta_cap(); ++q2) {
      const Rational w2 = sym_theta_weight(g, static_cast<long>(q2));
      if (w2 == 0) continue;
      if (q2 > f.trunc2()) continue;
      total += f.entry(q1, q2)
                   .coeff(f.trunc1() - q1, f.trunc2() - q2)
                   .scaled(w1 * w2);
    }
  }
  return total;
}

UniSeries<CycloElement> fixed_point_exponent(long N, const CycloElement& lambda,
                                             std::size_t trunc) {
  const CycloElement zero = ring_zero(lambda);
  const CycloElement one = ring_one(lambda);
  // Work two orders higher: each of the two divisions by x below consumes one.
  UniSeries<CycloElement> base(trunc + 2, zero);  // lambda + x
  base.set_coeff(0, lambda);
  base.set_coeff(1, one);
  const UniSeries<CycloElement> pn = base.pow(N);
  // u = ((lambda+x)^N - 1)/x; the constant term of (lambda+x)^N is lambda^N = 1.
  const UniSeries<CycloElement> u =
      (pn - UniSeries<CycloElement>::constant(trunc + 2, one)).shift_down(1);
  // S = (N (lambda+x)^(N-1) - u) / (x u); the numerator vanishes at x = 0
  // because u(0) = N lambda^(N-1).
  const UniSeries<CycloElement> numerator =
      base.pow(N - 1).scaled(CycloElement(lambda.field(), Rational(N))) - u;
  return numerator.shift_down(1) * u.invert();
}

UniSeries<CycloElement> theta_exp_direct(long g, long l, const UniSeries<CycloElement>& S) {
  if (l < 0 || l > g)
    throw std::invalid_argument("theta_exp_direct: need 0 <= l <= g");
  const CycloElement zero = ring_zero(S.zero_sample());
  UniSeries<CycloElement> acc(S.trunc(), zero);
  for (long k = 0; k + l <= g; ++k) {
    const Rational c = factorial(g) / (factorial(g - l - k) * factorial(l) * factorial(k));
    const UniSeries<CycloElement> term =
        S.pow(k).shift_up(static_cast<std::size_t>(l + k));
    acc = acc + term.scaled(CycloElement(S.coeff(0).field(), c));
  }
  return acc;
}

UniSeries<CycloElement> theta_exp_closed(long g, long l, long N, const CycloElement& lambda,
                                         std::size_t trunc) {
  if (l < 0 || l > g)
    throw std::invalid_argument("theta_exp_closed: need 0 <= l <= g");
  const CycloElement zero = ring_zero(lambda);
  const CycloElement one = ring_one(lambda);
  UniSeries<CycloElement> base(trunc + 1, zero);
  base.set_coeff(0, lambda);
  base.set_coeff(1, one);
  const UniSeries<CycloElement> u =
      (base.pow(N) - UniSeries<CycloElement>::constant(trunc + 1, one)).shift_down(1);
  // x^g (lambda+x)^((N-1)(g-l)) / ((lambda+x)^N - 1)^(g-l)
  //   = x^l (lambda+x)^((N-1)(g-l)) u^-(g-l),
  // cancelling the (g-l)-fold zero of the denominator against x^g.
  UniSeries<CycloElement> f = base.pow((N - 1) * (g - l)) * u.pow(-(g - l));
  f = f.shift_up(static_cast<std::size_t>(l));
  const Rational c = pow_rational(Rational(N), g - l) * binom_int(g, l);
  // Drop back to the requested truncation order.
  UniSeries<CycloElement> result(trunc, zero);
  for (std::size_t k = 0; k <= trunc; ++k) result.set_coeff(k, f.coeff(k).scaled(c));
  return result;
}

}  // namespace quotloc
