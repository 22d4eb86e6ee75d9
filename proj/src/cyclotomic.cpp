#include <quotloc/cyclotomic.hpp>

#include <quotloc/bernoulli.hpp>
#include <quotloc/combinatorics.hpp>
#include <quotloc/series.hpp>

#include <sstream>
#include <stdexcept>

namespace quotloc {
namespace {

bool is_odd_prime(long N) {
  if (N < 3 || N % 2 == 0) return false;
  for (long p = 3; p * p <= N; p += 2)
    if (N % p == 0) return false;
  return true;
}

// Polynomials over Q, dense, for the extended-gcd inversion path.
using Poly = std::vector<Rational>;

std::size_t poly_degree(const Poly& p) {
  std::size_t d = p.size();
  while (d > 0 && p[d - 1] == 0) --d;
  return d;  // number of meaningful coefficients; 0 encodes the zero polynomial
}

Poly poly_trim(Poly p) {
  p.resize(poly_degree(p));
  return p;
}

Poly poly_sub_scaled(const Poly& a, const Poly& b, const Rational& s, std::size_t shift) {
  Poly r = a;
  if (r.size() < b.size() + shift) r.resize(b.size() + shift, Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= s * b[i];
  return poly_trim(std::move(r));
}

// Division with remainder: returns (quotient, remainder).
std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
  const std::size_t dd = poly_degree(den);
  if (dd == 0) throw std::domain_error("poly_divmod: division by zero polynomial");
  Poly quot;
  num = poly_trim(std::move(num));
  while (poly_degree(num) >= dd) {
    const std::size_t dn = poly_degree(num);
    const std::size_t shift = dn - dd;
    const Rational s = num[dn - 1] / den[dd - 1];
    if (quot.size() < shift + 1) quot.resize(shift + 1, Rational(0));
    quot[shift] += s;
    num = poly_sub_scaled(num, den, s, shift);
  }
  return {poly_trim(std::move(quot)), std::move(num)};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return poly_trim(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_sub_scaled(a, b, Rational(1), 0); }

}  // namespace

std::shared_ptr<const CycloField> CycloField::make(long N) {
  if (!is_odd_prime(N))
    throw std::invalid_argument("CycloField: N = " + std::to_string(N) +
                                " is not an odd prime");
  return std::shared_ptr<const CycloField>(new CycloField(N));
}

CycloElement::CycloElement(FieldPtr field, const Rational& value)
    : field_(std::move(field)), coords_(field_->degree(), Rational(0)) {
  coords_[0] = value;
}

CycloElement CycloElement::zeta_power(FieldPtr field, long j) {
  const long N = field->N();
  long jm = j % N;
  if (jm < 0) jm += N;
  std::vector<Rational> coords(field->degree(), Rational(0));
  if (jm <= N - 2) {
    coords[static_cast<std::size_t>(jm)] = 1;
  } else {
    // z^(N-1) = -(1 + z + ... + z^(N-2))
    for (auto& c : coords) c = -1;
  }
  return CycloElement(std::move(field), std::move(coords));
}

CycloElement CycloElement::operator-() const {
  std::vector<Rational> coords(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords[i] = -coords_[i];
  return CycloElement(field_, std::move(coords));
}

CycloElement& CycloElement::operator+=(const CycloElement& rhs) {
  if (field_->N() != rhs.field_->N())
    throw std::invalid_argument("CycloElement: mixed fields");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& rhs) {
  if (field_->N() != rhs.field_->N())
    throw std::invalid_argument("CycloElement: mixed fields");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
  if (a.field_->N() != b.field_->N())
    throw std::invalid_argument("CycloElement: mixed fields");
  const long N = a.field_->N();
  const std::size_t deg = a.field_->degree();  // N-1
  // Convolve to degree 2N-4, reduce z^k -> z^(k-N) for k >= N, then eliminate
  // z^(N-1) through the defining relation.
  std::vector<Rational> conv(2 * deg - 1, Rational(0));
  for (std::size_t i = 0; i < deg; ++i) {
    if (a.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (b.coords_[j] == 0) continue;
      conv[i + j] += a.coords_[i] * b.coords_[j];
    }
  }
  std::vector<Rational> red(static_cast<std::size_t>(N), Rational(0));  // degrees 0..N-1
  for (std::size_t k = 0; k < conv.size(); ++k)
    red[k % static_cast<std::size_t>(N)] += conv[k];
  std::vector<Rational> coords(deg, Rational(0));
  for (std::size_t k = 0; k < deg; ++k) coords[k] = red[k] - red[deg];
  return CycloElement(a.field_, std::move(coords));
}

CycloElement CycloElement::scaled(const Rational& s) const {
  std::vector<Rational> coords(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords[i] = coords_[i] * s;
  return CycloElement(field_, std::move(coords));
}

bool CycloElement::operator==(const CycloElement& rhs) const {
  if (field_->N() != rhs.field_->N()) return false;
  return coords_ == rhs.coords_;
}

bool CycloElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

CycloElement CycloElement::inverse() const {
  if (is_zero()) throw std::domain_error("CycloElement::inverse: zero element");
  const std::size_t deg = field_->degree();
  // Extended Euclid on (this, Phi_N) over Q: find s with s*this = 1 mod Phi_N.
  Poly r0 = poly_trim(Poly(coords_.begin(), coords_.end()));
  Poly r1(deg + 1, Rational(1));  // Phi_N = 1 + z + ... + z^(N-1)
  Poly s0{Rational(1)}, s1{};
  while (poly_degree(r1) != 0) {
    auto [q, r2] = poly_divmod(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // gcd is the nonzero constant r0 (Phi_N is irreducible over Q); s0 * this = r0.
  if (poly_degree(r0) != 1)
    throw std::logic_error("CycloElement::inverse: gcd with Phi_N is not a constant");
  const Rational scale = Rational(1) / r0[0];
  std::vector<Rational> coords(deg, Rational(0));
  // s0 has degree < deg already (xgcd invariant), but reduce defensively.
  auto [q_unused, reduced] = poly_divmod(std::move(s0), Poly(deg + 1, Rational(1)));
  (void)q_unused;
  for (std::size_t i = 0; i < reduced.size() && i < deg; ++i) coords[i] = reduced[i] * scale;
  return CycloElement(field_, std::move(coords));
}

CycloElement CycloElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloElement acc = ring_one(*this);
  CycloElement base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1UL) acc = acc * base;
    base = (k >>= 1UL) ? base * base : base;
  }
  return acc;
}

CycloElement CycloElement::galois(long r) const {
  const long N = field_->N();
  long rm = r % N;
  if (rm < 0) rm += N;
  if (rm == 0) throw std::invalid_argument("CycloElement::galois: r must be nonzero mod N");
  CycloElement acc(field_, Rational(0));
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (coords_[j] == 0) continue;
    acc += zeta_power(field_, static_cast<long>(j) * rm).scaled(coords_[j]);
  }
  return acc;
}

bool CycloElement::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rational CycloElement::rational_value() const {
  if (!is_rational())
    throw std::domain_error(
        "CycloElement::rational_value: element has a nonzero cyclotomic part");
  return coords_[0];
}

std::string CycloElement::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << ", ";
    out << coords_[i].get_str();
  }
  out << ")";
  return out.str();
}

Rational root_sum(long e, long k, long N, RootSumAlgorithm algorithm) {
  if (algorithm == RootSumAlgorithm::Generating && k >= 1) {
    // [z^(k-1)] of 1/z + N (1-z)^E / ((1-z)^N - 1) with E = (e-1) mod N.
    long E = (e - 1) % N;
    if (E < 0) E += N;
    const std::size_t T = static_cast<std::size_t>(k);
    // w(z) = ((1-z)^N - 1)/z,  numerator = w + N (1-z)^E; the 1/z pole cancels
    // against the zero of the numerator at z = 0.
    UniSeries<Rational> w(T, Rational(0));
    for (std::size_t j = 0; j <= T; ++j) {
      Rational c = binom_int(N, static_cast<long>(j + 1));
      if ((j + 1) % 2 != 0) c = -c;
      w.set_coeff(j, c);
    }
    UniSeries<Rational> num(T, Rational(0));
    for (std::size_t j = 0; j <= T; ++j) {
      Rational c = Rational(N) * binom_int(E, static_cast<long>(j));
      if (j % 2 != 0) c = -c;
      num.set_coeff(j, w.coeff(j) + c);
    }
    return (num.shift_down(1) * w.invert()).coeff(static_cast<std::size_t>(k - 1));
  }
  // Direct: sum the N-1 conjugates in Q(zeta_N) and assert rationality.
  FieldPtr field = CycloField::make(N);
  CycloElement total(field, Rational(0));
  const CycloElement one = ring_one(total);
  for (long j = 1; j < N; ++j) {
    const CycloElement base = one - CycloElement::zeta_power(field, j);
    total += CycloElement::zeta_power(field, j * (e % N)) * base.pow(-k);
  }
  return total.rational_value();
}

Rational lemma_bern_limit(long k) {
  if (k < 0) return Rational(0);
  const Rational factor = Rational(1) - pow_rational(Rational(2), 1 - k);
  if (factor == 0) return Rational(0);  // k = 1; no Bernoulli lookup needed
  return factor * bernoulli(k, BernoulliConvention::Standard) / factorial(k);
}

}  // namespace quotloc
