#include <quotloc/closedform.hpp>

#include <quotloc/bernoulli.hpp>
#include <quotloc/combinatorics.hpp>
#include <quotloc/cyclotomic.hpp>

#include <stdexcept>

namespace quotloc {

namespace {

// m(m-1)...(m-r+1): r consecutive factors down from m.  Unlike m!/(m-r)!
// this stays defined (and vanishes) when the range crosses zero.
Rational falling_factorial(long m, long r) {
  Rational acc(1);
  for (long i = 0; i < r; ++i) acc *= Rational(m - i);
  return acc;
}

// Coefficients of x^r, r = 0..b, in C(x + z, b) for rational shift z.
std::vector<Rational> shifted_binom_coeffs(const Rational& z, long b) {
  const auto base = binom_poly_coeffs(b);  // C(y, b) in powers of y
  std::vector<Rational> out(static_cast<std::size_t>(b) + 1, Rational(0));
  for (long i = 0; i <= b; ++i)
    for (long r = 0; r <= i; ++r)
      out[static_cast<std::size_t>(r)] += base[static_cast<std::size_t>(i)] *
                                          binom_int(i, r) *
                                          pow_rational(z, i - r);
  return out;
}

}  // namespace

long IntersectionQuery::psi_total() const {
  long p = 0;
  for (int pk : psi_pairs) {
    if (pk != 0 && pk != 1)
      throw std::invalid_argument(
          "IntersectionQuery: psi pair multiplicities must be 0 or 1 "
          "(odd classes square to zero)");
    p += pk;
  }
  return p;
}

Rational intersect_main(long g, long m, long n) {
  if (g < 1) throw std::invalid_argument("intersect_main: genus must satisfy g >= 1");
  if (m < 0 || n < 0)
    throw std::invalid_argument("intersect_main: exponents must be non-negative");
  if (2 * m + 4 * n != 6 * g - 6)
    throw std::invalid_argument(
        "intersect_main: degree constraint 2m + 4n = 6g - 6 violated");
  if (m - g + 1 < 0)
    throw std::invalid_argument("intersect_main: requires m - g + 1 >= 0");
  const long k = m - g + 1;
  const Rational factor = pow_rational(Rational(2), k) - Rational(2);
  if (factor == 0) return Rational(0);  // k == 1: B_1 deliberately not consulted
  Rational value = pow_rational(Rational(2), 2 * g - 2) * factorial(m) /
                   factorial(k) * factor *
                   bernoulli(k, BernoulliConvention::Sinh);
  if (g % 2 != 0) value = -value;
  return value;
}

Rational intersect_psi(const IntersectionQuery& query) {
  const long p = query.psi_total();
  if (2 * query.m_alpha + 4 * query.n_beta + 6 * p != 6 * query.g - 6)
    throw std::invalid_argument(
        "intersect_psi: degree constraint 2m + 4n + 6p = 6g - 6 violated");
  return intersect_main(query.g - p, query.m_alpha, query.n_beta);
}

Rational rhs_red(long g, long m, long n) {
  if (g < 1) throw std::invalid_argument("rhs_red: genus must satisfy g >= 1");
  if (m < 0 || n < 0)
    throw std::invalid_argument("rhs_red: exponents must be non-negative");
  if (m + 2 * n != 4 * g - 3)
    throw std::invalid_argument("rhs_red: degree constraint m + 2n = 4g - 3 violated");
  if (m < g) throw std::invalid_argument("rhs_red: requires m >= g");
  const Rational fall = falling_factorial(m, 2 * g - 1);
  if (fall == 0) return Rational(0);  // m < 2g - 1: empty intersection range
  const long k = m - 2 * g + 1;  // even: m is odd, 2g is even
  Rational value = (pow_rational(Rational(2), m - 1) -
                    pow_rational(Rational(2), 2 * g - 1)) *
                   fall * bernoulli(k, BernoulliConvention::Sinh);
  if (g % 2 != 0) value = -value;
  return value;
}

Rational asymptotic_sum(long g, long m, long n, long d) {
  if (g < 1) throw std::invalid_argument("asymptotic_sum: genus must satisfy g >= 1");
  if (m < 0 || n < 0 || d < 0)
    throw std::invalid_argument("asymptotic_sum: arguments must be non-negative");
  const long gbar = g - 1;
  const Rational half_d = make_rational(d, 2);

  Rational total(0);
  for (long d1 = 0; d1 <= d; ++d1) {
    const long d2 = d - d1;
    for (long l1 = 0; l1 <= std::min(g, m); ++l1) {
      if (d1 - l1 < 0) continue;
      const auto poly1 = shifted_binom_coeffs(half_d - Rational(l1), d1 - l1);
      for (long l2 = 0; l2 <= std::min(g, m - l1); ++l2) {
        if (d2 - l2 < 0) continue;
        const long s = m - l1 - l2;
        // C(-x + d/2 - l2, d2 - l2): negate odd coefficients of the shift.
        auto poly2 = shifted_binom_coeffs(half_d - Rational(l2), d2 - l2);
        for (std::size_t r = 1; r < poly2.size(); r += 2) poly2[r] = -poly2[r];

        const Rational slice = factorial(m) / factorial(s) *
                               pow_rational(Rational(d2 - d1), s) *
                               pow_rational(Rational(2), l1 + l2) *
                               binom_int(g, l1) * binom_int(g, l2);
        if (slice == 0) continue;

        const long kmax = (d1 - l1) + (d2 - l2);
        for (long k = 0; k <= kmax; ++k) {
          const Rational z_inf =
              binom_general(Rational(2 * n - 2 * gbar + s), k) *
              lemma_bern_limit(2 * gbar - 2 * n - s + k);
          if (z_inf == 0) continue;
          Rational xk(0);  // [x^k] of poly1 * poly2
          for (long r = std::max<long>(0, k - (d2 - l2));
               r <= std::min<long>(k, d1 - l1); ++r)
            xk += poly1[static_cast<std::size_t>(r)] *
                  poly2[static_cast<std::size_t>(k - r)];
          total += slice * factorial(k) * xk * z_inf;
        }
      }
    }
  }
  total /= 2;

  const Rational collapsed = pow_rational(Rational(2), m - 1) * factorial(m) *
                             lemma_bern_limit(m - 2 * g + 1);
  if (total != collapsed)
    throw std::logic_error(
        "asymptotic_sum: explicit sum disagrees with its collapsed closed form");
  return total;
}

ReductionPrefactor reduction_prefactor(long g, long m_alpha, long n) {
  if (g < 1)
    throw std::invalid_argument("reduction_prefactor: genus must satisfy g >= 1");
  if (m_alpha < 0 || n < 0)
    throw std::invalid_argument("reduction_prefactor: exponents must be non-negative");
  if (2 * m_alpha + 4 * n != 6 * g - 6)
    throw std::invalid_argument(
        "reduction_prefactor: degree constraint 2m + 4n = 6g - 6 violated");
  const long m = m_alpha + g;
  return ReductionPrefactor{m, factorial(m_alpha) / factorial(m)};
}

Rational jacobian_theta_integral(long g) {
  if (g < 0)
    throw std::invalid_argument("jacobian_theta_integral: genus must be non-negative");
  return pow_rational(Rational(4), g) * factorial(g);
}

}  // namespace quotloc
