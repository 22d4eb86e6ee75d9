#include <quotloc/closedform.hpp>

#include <stdexcept>

#include <quotloc/combinatorics.hpp>

#include "doctest.h"
#include "test_util.hpp"

using namespace quotloc;
using qt::Q;

namespace {

struct GoldenCell {
  long g, m, n;
  long value;
};

// The full admissible table for g <= 4 (2m + 4n = 6g - 6, m - g + 1 >= 0).
constexpr GoldenCell kGolden[] = {
    {1, 0, 0, 1},       {2, 3, 0, 4},      {2, 1, 1, -4},    {3, 6, 0, 224},
    {3, 4, 1, -64},     {3, 2, 2, 32},     {4, 9, 0, 47616}, {4, 7, 1, -6272},
    {4, 5, 2, 1280},    {4, 3, 3, -384},
};

}  // namespace

TEST_SUITE_BEGIN("closedform");

TEST_CASE("intersect_main golden values") {
  for (const auto& cell : kGolden)
    CHECK(intersect_main(cell.g, cell.m, cell.n) == Rational(cell.value));
}

TEST_CASE("intersect_main rejects invalid input") {
  CHECK_THROWS_AS(intersect_main(2, 4, 0), std::invalid_argument);  // degree
  CHECK_THROWS_AS(intersect_main(2, 3, 1), std::invalid_argument);  // degree
  CHECK_THROWS_AS(intersect_main(3, 0, 3), std::invalid_argument);  // m - g + 1 < 0
  CHECK_THROWS_AS(intersect_main(0, 0, 0), std::invalid_argument);  // genus
  CHECK_THROWS_AS(intersect_main(1, -2, 1), std::invalid_argument);
}

TEST_CASE("admissible exponents always give an even Bernoulli index") {
  // 2m + 4n = 6g - 6 forces m = 3(g-1) - 2n, so m - g + 1 = 2(g - 1 - n):
  // the odd-index Bernoulli branch of the closed form is unreachable for
  // valid queries.  Record that as a tested fact.
  for (long g = 1; g <= 6; ++g)
    for (long n = 0; 6 * g - 6 - 4 * n >= 0; ++n) {
      const long twice_m = 6 * g - 6 - 4 * n;
      if (twice_m % 2 != 0) continue;
      const long m = twice_m / 2;
      if (m - g + 1 < 0) continue;
      CHECK((m - g + 1) % 2 == 0);
    }
}

TEST_CASE("psi pairs reduce to a genus drop") {
  CHECK(intersect_psi({3, 3, 0, {1}}) == Rational(4));
  CHECK(intersect_psi({3, 0, 0, {1, 1}}) == Rational(1));
  CHECK(intersect_psi({2, 3, 0, {}}) == Rational(4));
  CHECK(intersect_psi({4, 6, 0, {1, 0}}) == Rational(224));
  CHECK_THROWS_AS(intersect_psi({3, 0, 0, {2}}), std::invalid_argument);   // multiplicity
  CHECK_THROWS_AS(intersect_psi({2, 3, 0, {1}}), std::invalid_argument);   // degree
  CHECK_THROWS_AS(intersect_psi({3, 0, 0, {-1}}), std::invalid_argument);  // multiplicity
}

TEST_CASE("rhs_red values and validation") {
  CHECK(rhs_red(1, 1, 0) == Rational(1));
  CHECK(rhs_red(2, 5, 0) == Rational(80));
  CHECK(rhs_red(2, 3, 1) == Rational(-24));
  CHECK(rhs_red(3, 9, 0) == Rational(112896));
  CHECK(rhs_red(3, 5, 2) == Rational(1920));
  CHECK(rhs_red(3, 3, 3) == Rational(0));  // falling factorial vanishes (m < 2g-1)
  CHECK_THROWS_AS(rhs_red(2, 4, 0), std::invalid_argument);  // m + 2n != 4g - 3
  CHECK_THROWS_AS(rhs_red(2, 1, 2), std::invalid_argument);  // m < g
}

TEST_CASE("asymptotic sum collapses independently of d") {
  CHECK(asymptotic_sum(1, 1, 0, 1) == Rational(-1));
  const auto at3 = asymptotic_sum(2, 5, 0, 3);
  CHECK(asymptotic_sum(2, 5, 0, 5) == at3);
  CHECK(asymptotic_sum(2, 5, 0, 7) == at3);
  for (long g = 1; g <= 3; ++g)
    for (long n = 0; 4 * g - 3 - 2 * n >= g; ++n) {
      const long m = 4 * g - 3 - 2 * n;
      const Rational sign = (g % 2 == 0) ? Rational(1) : Rational(-1);
      CHECK(rhs_red(g, m, n) == sign * asymptotic_sum(g, m, n, 2 * g - 1));
    }
}

TEST_CASE("reduction prefactor and the closed-form bridge") {
  const auto p1 = reduction_prefactor(2, 3, 0);
  CHECK(p1.m == 5);
  CHECK(p1.factor == Q(1, 20));
  const auto p2 = reduction_prefactor(1, 0, 0);
  CHECK(p2.m == 1);
  CHECK(p2.factor == Rational(1));
  const auto p3 = reduction_prefactor(2, 1, 1);
  CHECK(p3.m == 3);
  CHECK(p3.factor == Q(1, 6));
  CHECK_THROWS_AS(reduction_prefactor(2, 4, 0), std::invalid_argument);

  // intersect_main(g, m_alpha, n) == factor * rhs_red(g, m_alpha + g, n)
  // across the whole golden table.
  for (const auto& cell : kGolden) {
    const auto pre = reduction_prefactor(cell.g, cell.m, cell.n);
    CHECK(intersect_main(cell.g, cell.m, cell.n) ==
          pre.factor * rhs_red(cell.g, pre.m, cell.n));
  }
}

TEST_CASE("theta volume of the Jacobian") {
  CHECK(jacobian_theta_integral(1) == Rational(4));
  CHECK(jacobian_theta_integral(2) == Rational(32));
  CHECK(jacobian_theta_integral(3) == Rational(384));
  CHECK(jacobian_theta_integral(4) == Rational(6144));
  CHECK_THROWS_AS(jacobian_theta_integral(-1), std::invalid_argument);
  // (1/4^g) C(m, g) * 4^g g! == m!/(m-g)!  -- the combinatorial step the
  // reduction prefactor rests on.
  for (long g = 1; g <= 4; ++g)
    for (long m = g; m <= g + 5; ++m)
      CHECK(binom_int(m, g) * jacobian_theta_integral(g) / pow_rational(Rational(4), g) ==
            factorial(m) / factorial(m - g));
}

TEST_SUITE_END();
