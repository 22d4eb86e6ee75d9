// Closed evaluations of the intersection numbers on the rank-2 moduli space
// and of the companion quantities they are checked against:
//
//   intersect_main(g, m, n)    the Bernoulli closed form for int alpha^m beta^n
//   intersect_psi(query)       pair-multiplicity psi classes, reduced to a
//                              lower-genus intersect_main
//   rhs_red(g, m, n)           the closed right side the localization totals
//                              must reproduce (quot_localized == rhs_red)
//   asymptotic_sum(g, m, n, d) the explicit large-N collapse sum, evaluated
//                              term by term and asserted against its own
//                              closed form; the caller-side sign convention is
//                              rhs_red == (-1)^g * asymptotic_sum
//   reduction_prefactor        (m, factor) with m = m_alpha + g and
//                              factor = m_alpha!/m!, so that
//                              intersect_main(g, m_alpha, n)
//                                == factor * quot_localized(g, m, n, ...)
//   jacobian_theta_integral(g) the 4^g g! theta-volume the prefactor chain
//                              rests on, exposed for independent testing

#pragma once

#include <quotloc/rational.hpp>

#include <vector>

namespace quotloc {

// A full intersection query: alpha^m_alpha beta^n_beta prod (psi_k psi_{k+g})^{p_k}.
// The psi classes are odd, so each pair multiplicity is 0 or 1.
struct IntersectionQuery {
  long g = 1;
  long m_alpha = 0;
  long n_beta = 0;
  std::vector<int> psi_pairs;  // each entry in {0, 1}

  long psi_total() const;  // sum of psi_pairs (validated to {0,1} entries)
};

// (-1)^g 2^(2g-2) m!/(m-g+1)! (2^(m-g+1) - 2) B_(m-g+1).
// Requires 2m + 4n = 6g - 6 and m - g + 1 >= 0; the vanishing (2^k - 2)
// factor at k = 1 is applied before the Bernoulli lookup.
Rational intersect_main(long g, long m, long n);

// Reduces psi pairs to a genus drop: the value is
// intersect_main(g - p, m_alpha, n_beta) with p = sum of pair multiplicities.
// Requires 2 m_alpha + 4 n_beta + 6p = 6g - 6 and each multiplicity in {0,1}.
Rational intersect_psi(const IntersectionQuery& query);

// (-1)^g (2^(m-1) - 2^(2g-1)) m!/(m-2g+1)! B_(m-2g+1) for m + 2n = 4g - 3,
// m >= g.  The factorial quotient is evaluated as the falling factorial
// m(m-1)...(m-2g+2), which vanishes for m < 2g - 1, so no Bernoulli number
// of negative index is ever consulted.
Rational rhs_red(long g, long m, long n);

// The explicit pre-collapse double sum over (d1 + d2 = d, l1 + l2 + s = m, k)
// whose value the reduction argument shows to be d-independent.  Evaluates
// the sum literally (half-integer binomial arguments included) and throws
// std::logic_error if it disagrees with its collapsed closed form
// 2^(m-1) m!/(m-2g+1)! B_(m-2g+1) (1 - 2^(2g-m)).
Rational asymptotic_sum(long g, long m, long n, long d);

struct ReductionPrefactor {
  long m;           // m_alpha + g
  Rational factor;  // m_alpha!/m!
};

// The chain relating the two sides: intersect_main(g, m_alpha, n) equals
// factor * quot_localized at exponent m = m_alpha + g.  Requires the same
// degree constraint as intersect_main.
ReductionPrefactor reduction_prefactor(long g, long m_alpha, long n);

// int_J (4 theta)^g = 4^g g!; with it, (1/4^g) C(m, g) 4^g g! = m!/(m-g)!.
Rational jacobian_theta_integral(long g);

}  // namespace quotloc
