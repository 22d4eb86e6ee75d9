// Intersection theory on a product Sym^d1(C) x Sym^d2(C) of symmetric powers
// of a genus-g curve, in the classes x_i (point class) and theta_i (pullback
// of the theta divisor).
//
// Evaluation rule for top monomials on a single factor Sym^d(C):
//
//     integral of x^p theta^q  =  g!/(g-q)!   if p + q = d and q <= g,
//                                 0           otherwise.
//
// Because every monomial with theta-degree above g integrates to zero, series
// with theta-dependence can be truncated at theta-degree g without loss; the
// ThetaSeries container implements that graded truncation over bivariate
// power series with cyclotomic coefficients.
//
// theta_exp_direct/theta_exp_closed express theta^l/l! * exp(theta*S) after
// the substitution theta^j -> (g!/(g-j)!) x^j in two independent ways:
//
//   direct:  sum_{k <= g-l}  g!/( (g-l-k)! l! k! ) x^(l+k) S^k
//   closed:  N^(g-l) C(g,l) x^g (lambda+x)^((N-1)(g-l)) / ((lambda+x)^N - 1)^(g-l)
//
// for the specific S = N (lambda+x)^(N-1)/((lambda+x)^N - 1) - 1/x that
// appears in the fixed-point exponentials (h = 1 throughout).  Their equality
// is a tested identity; the closed form's pole is cancelled explicitly.

#pragma once

#include <quotloc/cyclotomic.hpp>
#include <quotloc/series.hpp>

#include <cstddef>
#include <vector>

namespace quotloc {

// g!/(g-q)! for q <= g, else 0 -- the theta-power weight on one factor.
Rational sym_theta_weight(long g, long q);

// Top intersection of x^p theta^q on Sym^d(C) for a genus-g curve.
Rational integrate_sym_monomial(long g, long d, long p, long q);

// A polynomial in theta_1, theta_2 (nilpotents of degree <= cap) whose
// coefficients are bivariate series in x_1, x_2 over Q(zeta_N).
class ThetaSeries {
 public:
  // Zero series; entries are BiSeries with truncation orders (d1, d2).
  ThetaSeries(FieldPtr field, long genus, std::size_t d1, std::size_t d2,
              std::size_t theta_cap);

  long genus() const { return genus_; }
  std::size_t theta_cap() const { return cap_; }
  std::size_t trunc1() const { return d1_; }
  std::size_t trunc2() const { return d2_; }
  const FieldPtr& field() const { return field_; }

  const BiSeries<CycloElement>& entry(std::size_t q1, std::size_t q2) const;
  void set_entry(std::size_t q1, std::size_t q2, const BiSeries<CycloElement>& value);

  // Theta-free embedding: value placed in the (0,0) slot.
  static ThetaSeries scalar(FieldPtr field, long genus, std::size_t d1, std::size_t d2,
                            std::size_t theta_cap, const BiSeries<CycloElement>& value);

  // Graded product; theta-degrees beyond the cap are discarded (they cannot
  // survive integration when the cap is >= g).
  friend ThetaSeries operator*(const ThetaSeries& a, const ThetaSeries& b);
  friend ThetaSeries operator+(const ThetaSeries& a, const ThetaSeries& b);

 private:
  FieldPtr field_;
  long genus_;
  std::size_t d1_, d2_, cap_;
  std::vector<BiSeries<CycloElement>> entries_;  // (cap+1)^2, row-major
};

// Integrate a ThetaSeries over Sym^d1(C) x Sym^d2(C): pair each entry
// theta_1^q1 theta_2^q2 * (series) with the monomial rule above, i.e. read
// the (d1-q1, d2-q2) series coefficient weighted by the theta weights.
CycloElement integrate_fixed_locus(const ThetaSeries& f);

// The two expansions of theta^l/l! exp(theta S) described above.  `direct`
// takes an arbitrary S; `closed` builds the fixed-point S itself from
// (N, lambda) and cancels the pole of the closed form explicitly.
UniSeries<CycloElement> theta_exp_direct(long g, long l, const UniSeries<CycloElement>& S);
UniSeries<CycloElement> theta_exp_closed(long g, long l, long N, const CycloElement& lambda,
                                         std::size_t trunc);

// The fixed-point exponent series S = N(lambda+x)^(N-1)/((lambda+x)^N-1) - 1/x
// itself (a regular power series; both pole cancellations are checked).
UniSeries<CycloElement> fixed_point_exponent(long N, const CycloElement& lambda,
                                             std::size_t trunc);

}  // namespace quotloc
