// Standalone exact verification of the analytic infrastructure: the residue
// closed form and the two convergence lemmas behind the large-N collapse.
//
// Everything here is exact rational arithmetic.  Convergence verdicts compare
// exact errors at three increasing N values; there is no epsilon anywhere.
// A grid row passes when its errors strictly decrease along the N column, or
// when they are exactly zero at all three N (the identity already holds at
// finite N for that row — e.g. Lemma 1 at (a=1, k=1), where the finite sum
// equals the limit 0 on the nose, and every Lemma 2 row with b <= alpha).

#pragma once

#include <quotloc/cyclotomic.hpp>
#include <quotloc/rational.hpp>

#include <string>
#include <vector>

namespace quotloc {

// (1/N) sum_{p=0..a} (-1)^(a-p) C((b+p)/N, c) C(a, p); requires a, c >= 0,
// N >= 1.  Equals the residue the series oracle extracts, and vanishes
// identically for a > c (a-th difference of a degree-c polynomial in p).
Rational residue_closed(long a, long b, long c, long N);

// One evaluation of the Lemma 1 comparison at (a, k, N):
//   finite = N^(-k) root_sum((N-1)/2 + a, k, N)
//   limit  = lemma_bern_limit(k)
//   error  = |finite - limit|
struct BernCheck {
  long a = 0, k = 0, N = 0;
  Rational finite, limit, error;
};
BernCheck lemma_bern_check(long a, long k, long N,
                           RootSumAlgorithm algorithm = RootSumAlgorithm::Generating);

// One evaluation of the Lemma 2 comparison at (z, b, alpha, N):
//   finite = N^alpha sum_{p=0..alpha} C(z + p/N, b) C(alpha, p) (-1)^(alpha-p)
//   limit  = alpha! [x^alpha] C(x + z, b)
//   error  = |finite - limit|
// Exact equality (error 0) whenever b <= alpha.
struct BinomCheck {
  Rational z;
  long b = 0, alpha = 0, N = 0;
  Rational finite, limit, error;
};
BinomCheck lemma_binoms_check(const Rational& z, long b, long alpha, long N);

// A verified grid: per-point exact errors plus a derived verdict.
struct LemmaPoint {
  std::string params;  // rendered parameter tuple, e.g. "a=-1 k=3 N=101"
  Rational error;
  bool pass = true;    // per-point assertions only (grid rows judge convergence)
};

struct LemmaReport {
  std::string lemma_id;
  std::vector<LemmaPoint> points;
  bool pass = false;
  std::string verdict;  // the rule that produced `pass`, human-readable
};

// Lemma 1 grid: N in {11, 101, 1009}, k in {0..6}, a in {-1, 0, 1, 2}.
// Rows with k >= 1 must have strictly decreasing (or identically zero)
// errors; k = 0 rows must be pinned exactly at -1 on both sides.
LemmaReport lemma1_report();

// Lemma 2 grid: N in {10, 100, 1000}, b in {0..5}, alpha in {0..4},
// z in {0, 1/2, -3/2, 2}; rows with b <= alpha must be exactly zero
// everywhere, the rest strictly decreasing.
LemmaReport lemma2_report();

// residue_closed vs the series oracle on a <= 6, |b| <= 4, c <= 5,
// N in {1..9}; every point must agree exactly.
LemmaReport residue_report();

}  // namespace quotloc
