#include <quotloc/symprod.hpp>

#include <cstddef>
#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"

using namespace quotloc;
using qt::Q;

namespace {

UniSeries<CycloElement> random_series(qt::Sampler& sampler, const FieldPtr& field,
                                      std::size_t trunc) {
  UniSeries<CycloElement> s(trunc, CycloElement(field, Rational(0)));
  for (std::size_t k = 0; k <= trunc; ++k) s.set_coeff(k, sampler.cyclo(field, 2));
  return s;
}

BiSeries<CycloElement> monomial(const FieldPtr& field, std::size_t t1, std::size_t t2,
                                std::size_t i, std::size_t j) {
  BiSeries<CycloElement> m(t1, t2, CycloElement(field, Rational(0)));
  m.set_coeff(i, j, CycloElement(field, Rational(1)));
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("symprod");

TEST_CASE("sym_theta_weight") {
  CHECK(sym_theta_weight(2, 0) == Rational(1));
  CHECK(sym_theta_weight(2, 1) == Rational(2));
  CHECK(sym_theta_weight(2, 2) == Rational(2));
  CHECK(sym_theta_weight(3, 3) == Rational(6));
  CHECK(sym_theta_weight(1, 2) == Rational(0));  // q > g
  CHECK_THROWS_AS(sym_theta_weight(-1, 0), std::invalid_argument);
}

TEST_CASE("integrate_sym_monomial examples") {
  CHECK(integrate_sym_monomial(2, 3, 1, 2) == Rational(2));
  CHECK(integrate_sym_monomial(1, 4, 1, 3) == Rational(0));  // theta power above g
  CHECK(integrate_sym_monomial(3, 5, 1, 1) == Rational(0));  // degree mismatch
  CHECK(integrate_sym_monomial(2, 4, 4, 0) == Rational(1));
}

TEST_CASE("integrate_fixed_locus on monomial entries") {
  const auto field = CycloField::make(3);
  const CycloElement one(field, Rational(1));

  // Theta-free top monomial x1^d1 x2^d2 integrates to 1.
  ThetaSeries f(field, 2, 3, 2, 2);
  f.set_entry(0, 0, monomial(field, 3, 2, 3, 2));
  CHECK(integrate_fixed_locus(f) == one);

  // theta_1 theta_2 x1^(d1-1) x2^(d2-1) at g = 2: weight 2 * 2 = 4.
  ThetaSeries t(field, 2, 3, 2, 2);
  t.set_entry(1, 1, monomial(field, 3, 2, 2, 1));
  CHECK(integrate_fixed_locus(t) == one.scaled(Rational(4)));

  // An entry whose x-degree misses d_i - q_i contributes nothing.
  ThetaSeries off(field, 2, 3, 2, 2);
  off.set_entry(0, 0, monomial(field, 3, 2, 2, 2));
  CHECK(integrate_fixed_locus(off).is_zero());
}

TEST_CASE("theta cap beyond the genus never changes integrals") {
  // Entries with theta degree above g integrate to zero, so products
  // evaluated under cap g and under cap g + 3 must integrate identically.
  qt::Sampler sampler;
  const auto field = CycloField::make(3);
  const long g = 2;
  const std::size_t d1 = 2, d2 = 2;
  ThetaSeries a_low(field, g, d1, d2, 2), b_low(field, g, d1, d2, 2);
  ThetaSeries a_high(field, g, d1, d2, 5), b_high(field, g, d1, d2, 5);
  for (std::size_t q1 = 0; q1 <= 2; ++q1)
    for (std::size_t q2 = 0; q2 <= 2; ++q2) {
      BiSeries<CycloElement> entry(d1, d2, CycloElement(field, Rational(0)));
      for (std::size_t i = 0; i <= d1; ++i)
        for (std::size_t j = 0; j <= d2; ++j) entry.set_coeff(i, j, sampler.cyclo(field, 2));
      a_low.set_entry(q1, q2, entry);
      a_high.set_entry(q1, q2, entry);
      BiSeries<CycloElement> other(d1, d2, CycloElement(field, Rational(0)));
      for (std::size_t i = 0; i <= d1; ++i)
        for (std::size_t j = 0; j <= d2; ++j) other.set_coeff(i, j, sampler.cyclo(field, 2));
      b_low.set_entry(q1, q2, other);
      b_high.set_entry(q1, q2, other);
    }
  CHECK(integrate_fixed_locus(a_low * b_low) == integrate_fixed_locus(a_high * b_high));
}

TEST_CASE("integrate_fixed_locus is multiplicative across the two factors") {
  qt::Sampler sampler;
  const auto field = CycloField::make(3);
  const long g = 2;
  const std::size_t d1 = 2, d2 = 3;
  ThetaSeries f(field, g, d1, d2, 2);
  std::vector<UniSeries<CycloElement>> left, right;
  for (std::size_t q = 0; q <= 2; ++q) {
    left.push_back(random_series(sampler, field, d1));
    right.push_back(random_series(sampler, field, d2));
  }
  for (std::size_t q1 = 0; q1 <= 2; ++q1)
    for (std::size_t q2 = 0; q2 <= 2; ++q2)
      f.set_entry(q1, q2,
                  BiSeries<CycloElement>::from_univariate(left[q1], 1, d1, d2) *
                      BiSeries<CycloElement>::from_univariate(right[q2], 2, d1, d2));
  CycloElement factor1(field, Rational(0)), factor2(field, Rational(0));
  for (long q = 0; q <= 2; ++q) {
    factor1 += left[static_cast<std::size_t>(q)]
                   .coeff(d1 - static_cast<std::size_t>(q))
                   .scaled(sym_theta_weight(g, q));
    factor2 += right[static_cast<std::size_t>(q)]
                   .coeff(d2 - static_cast<std::size_t>(q))
                   .scaled(sym_theta_weight(g, q));
  }
  CHECK(integrate_fixed_locus(f) == factor1 * factor2);
}

TEST_CASE("fixed_point_exponent constant term is (N-1)/(2 lambda)") {
  for (long N : {3L, 5L, 7L}) {
    const auto field = CycloField::make(N);
    for (long j = 0; j < N; ++j) {
      const auto lambda = CycloElement::zeta_power(field, j);
      const auto S = fixed_point_exponent(N, lambda, 3);
      CHECK(S.coeff(0) == lambda.inverse().scaled(Q(N - 1, 2)));
    }
  }
}

TEST_CASE("theta_exp examples") {
  const auto field = CycloField::make(3);
  const auto one = CycloElement(field, Rational(1));
  const CycloElement zero(field, Rational(0));

  // l = g: only the bare theta^g term survives, giving exactly x^g.
  for (long g = 1; g <= 3; ++g) {
    qt::Sampler sampler;
    const auto S = random_series(sampler, field, 4);
    const auto e = theta_exp_direct(g, g, S);
    for (std::size_t k = 0; k <= 4; ++k)
      CHECK(e.coeff(k) == (k == static_cast<std::size_t>(g) ? one : zero));
  }

  // g = 1, l = 0, N = 3, lambda = 1: 1 + x - x^2/3.
  const auto closed = theta_exp_closed(1, 0, 3, one, 2);
  CHECK(closed.coeff(0) == one);
  CHECK(closed.coeff(1) == one);
  CHECK(closed.coeff(2) == one.scaled(Q(-1, 3)));

  // g = 2, l = 1, N = 3, lambda = 1: N C(2,1) x (1+x)^2 / u with
  // u = ((1+x)^3 - 1)/x.
  UniSeries<CycloElement> base(5, zero);
  base.set_coeff(0, one);
  base.set_coeff(1, one);
  const auto u =
      (base.pow(3) - UniSeries<CycloElement>::constant(5, one)).shift_down(1);
  const auto expected = (base.pow(2) * u.invert()).scaled(one.scaled(Rational(6)));
  const auto got = theta_exp_closed(2, 1, 3, one, 4);
  for (std::size_t k = 1; k <= 4; ++k) CHECK(got.coeff(k) == expected.coeff(k - 1));
  CHECK(got.coeff(0) == zero);

  CHECK_THROWS_AS(theta_exp_direct(1, 2, closed), std::invalid_argument);
  CHECK_THROWS_AS(theta_exp_closed(1, -1, 3, one, 2), std::invalid_argument);
}

TEST_CASE("closed and direct theta expansions agree") {
  for (long g = 1; g <= 3; ++g)
    for (long N : {3L, 5L}) {
      const auto field = CycloField::make(N);
      for (long j = 0; j < N; ++j) {
        const auto lambda = CycloElement::zeta_power(field, j);
        const auto S = fixed_point_exponent(N, lambda, 6);
        for (long l = 0; l <= g; ++l)
          CHECK(theta_exp_closed(g, l, N, lambda, 6) == theta_exp_direct(g, l, S));
      }
    }
  // One deeper spot check at g = 4.
  const auto field = CycloField::make(3);
  const auto lambda = CycloElement::zeta_power(field, 1);
  const auto S = fixed_point_exponent(3, lambda, 6);
  CHECK(theta_exp_closed(4, 2, 3, lambda, 6) == theta_exp_direct(4, 2, S));
}

TEST_SUITE_END();
