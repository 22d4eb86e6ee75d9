#include <quotloc/bernoulli.hpp>
#include <quotloc/combinatorics.hpp>
#include <quotloc/rational.hpp>

#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"

using namespace quotloc;
using qt::Q;

TEST_SUITE_BEGIN("exact_core");

TEST_CASE("rational construction canonicalizes and round-trips") {
  CHECK(make_rational(2, -4) == Q(-1, 2));
  CHECK(make_rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
  CHECK(to_string(Q(-1, 2)) == "-1/2");
  CHECK(rational_from_string("-22/7") == Q(-22, 7));
  CHECK(rational_from_string("5") == Rational(5));
  CHECK_THROWS_AS(rational_from_string("one half"), std::invalid_argument);
  CHECK(is_integer(Q(8, 2)));
  CHECK_FALSE(is_integer(Q(1, 3)));
}

TEST_CASE("pow_rational handles zero and negative exponents") {
  CHECK(pow_rational(Rational(0), 0) == Rational(1));
  CHECK(pow_rational(Q(2, 3), -2) == Q(9, 4));
  CHECK(pow_rational(Q(-1, 2), 3) == Q(-1, 8));
  CHECK_THROWS_AS(pow_rational(Rational(0), -1), std::domain_error);
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(6) == Rational(720));
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("binom_general examples") {
  CHECK(binom_general(Q(1, 2), 2) == Q(-1, 8));
  CHECK(binom_general(Rational(7), 0) == Rational(1));
  CHECK(binom_general(Rational(-1), 3) == Rational(-1));
  CHECK(binom_general(Rational(4), 6) == Rational(0));  // integer z below b
  CHECK_THROWS_AS(binom_general(Rational(1), -1), std::invalid_argument);
}

TEST_CASE("binom_general is a degree-b polynomial in z (finite differences)") {
  // (b+1)-st forward difference of any degree-b polynomial vanishes.
  qt::Sampler sampler;
  for (long b = 0; b <= 5; ++b) {
    const Rational z0 = sampler.rational();
    Rational diff(0);
    for (long i = 0; i <= b + 1; ++i) {
      Rational term = binom_int(b + 1, i) * binom_general(z0 + Rational(i), b);
      if ((b + 1 - i) % 2 != 0) term = -term;
      diff += term;
    }
    CHECK(diff == Rational(0));
  }
}

TEST_CASE("binom_int basics") {
  CHECK(binom_int(5, 2) == Rational(10));
  CHECK(binom_int(5, 0) == Rational(1));
  CHECK(binom_int(5, 6) == Rational(0));
  CHECK(binom_int(5, -1) == Rational(0));
  CHECK_THROWS_AS(binom_int(-2, 1), std::invalid_argument);
}

TEST_CASE("bernoulli values in both conventions") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Q(-1, 2));
  CHECK(bernoulli(2) == Q(1, 6));
  CHECK(bernoulli(3) == Rational(0));
  CHECK(bernoulli(4) == Q(-1, 30));
  CHECK(bernoulli(12) == Q(-691, 2730));

  CHECK(bernoulli(0, BernoulliConvention::Sinh) == Rational(1));
  CHECK(bernoulli(2, BernoulliConvention::Sinh) == Q(1, 6));
  CHECK(bernoulli(3, BernoulliConvention::Sinh) == Rational(0));
  CHECK(bernoulli(4, BernoulliConvention::Sinh) == Q(-1, 30));
  // The generating series -u/sinh(u) has a vanishing (2^k - 2) factor at
  // k = 1, so the convention cannot define B_1; the query is refused.
  CHECK_THROWS_AS(bernoulli(1, BernoulliConvention::Sinh), std::domain_error);
  CHECK_THROWS_AS(bernoulli(-1), std::invalid_argument);
}

TEST_CASE("conventions agree away from the k = 1 gap") {
  for (long k = 0; k <= 20; k += 2)
    CHECK(bernoulli(k) == bernoulli(k, BernoulliConvention::Sinh));
  for (long k = 3; k <= 19; k += 2) {
    CHECK(bernoulli(k) == Rational(0));
    CHECK(bernoulli(k, BernoulliConvention::Sinh) == Rational(0));
  }
}

TEST_CASE("euler_alt_sum examples and the Euler identities") {
  CHECK(euler_alt_sum(2, 1) == Rational(0));
  CHECK(euler_alt_sum(2, 2) == Rational(2));
  CHECK(euler_alt_sum(1, 0) == Rational(0));
  // sum_p p^i C(a,p) (-1)^(a-p) = 0 for i < a and a! for i = a.
  for (long a = 0; a <= 6; ++a) {
    for (long i = 0; i < a; ++i) CHECK(euler_alt_sum(a, i) == Rational(0));
    CHECK(euler_alt_sum(a, a) == factorial(a));
  }
  CHECK_THROWS_AS(euler_alt_sum(-1, 0), std::invalid_argument);
}

TEST_CASE("binom_poly_coeffs examples and reconstruction") {
  const auto c0 = binom_poly_coeffs(0);
  REQUIRE(c0.size() == 1);
  CHECK(c0[0] == Rational(1));

  const auto c1 = binom_poly_coeffs(1);
  REQUIRE(c1.size() == 2);
  CHECK(c1[0] == Rational(0));
  CHECK(c1[1] == Rational(1));

  const auto c2 = binom_poly_coeffs(2);
  REQUIRE(c2.size() == 3);
  CHECK(c2[0] == Rational(0));
  CHECK(c2[1] == Q(-1, 2));
  CHECK(c2[2] == Q(1, 2));

  // Reconstruction: sum_i c(j,i) n^i = C(n, j) on 0 <= n <= 2j.
  for (long j = 0; j <= 6; ++j) {
    const auto coeffs = binom_poly_coeffs(j);
    for (long n = 0; n <= 2 * j; ++n) {
      Rational value(0);
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        value += coeffs[i] * pow_rational(Rational(n), static_cast<long>(i));
      CHECK(value == binom_int(n, j));
    }
  }
}

TEST_CASE("vandermonde_sum examples") {
  CHECK(vandermonde_sum(Q(1, 2), 1, Rational(3), 1) == Rational(3));
  CHECK(vandermonde_sum(Rational(1), 2, Rational(5), 2) == Rational(25));
  CHECK(vandermonde_sum(Q(-3, 2), 4, Q(1, 3), 0) == Rational(1));
}

TEST_CASE("vandermonde collapse holds on its domain m <= a") {
  qt::Sampler sampler;
  for (int trial = 0; trial < 60; ++trial) {
    const long a = sampler.integer(0, 8);
    const long m = sampler.integer(0, a);
    const Rational a1 = sampler.rational(4, 3);
    const Rational t = sampler.rational(4, 3);
    const Rational closed = pow_rational(t + a1 + a1 - Rational(a), m);
    CHECK(vandermonde_sum(a1, a, t, m) == closed);
  }
}

TEST_CASE("vandermonde collapse fails beyond m = a (domain boundary)") {
  // a1 = a2 = 1/2, a = 1, t = 0, m = 2: the sum gives 1, the collapsed
  // power (t + 2a1 - a)^m gives 0.  This pins why the identity is only
  // sampled with m <= a.
  CHECK(vandermonde_sum(Q(1, 2), 1, Rational(0), 2) == Rational(1));
  CHECK(pow_rational(Rational(0) + Rational(1) - Rational(1), 2) == Rational(0));
}

TEST_SUITE_END();
