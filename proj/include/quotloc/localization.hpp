// Equivariant localization over the Quot-scheme fixed loci.
//
// A torus acts on the space of rank-2, degree-(-d) subsheaves of O^N with
// weights the N-th roots of unity; fixed loci are products
// Sym^{d1}C x Sym^{d2}C indexed by a degree splitting d = d1 + d2 and an
// ordered pair of distinct roots (lambda_1, lambda_2).  The localized
// integral is assembled here by two independent routes:
//
//   Route A evaluates the fixed-locus integrand directly: a rational
//   expression in (lambda_i + x_i) times exponentials exp(theta_i S_i),
//   expanded as a ThetaSeries (or, equivalently, with the theta-powers
//   substituted per the Sym^d C evaluation rule) and integrated.
//
//   Route B evaluates the residue-form combinatorial reduction of the same
//   per-locus quantity: a finite sum of generalized binomials and powers of
//   roots of unity.  The reduction's change of variables x_i -> x_i/lambda_i
//   leaves a per-locus normalization ambiguity in its printed form, so
//   summand_B carries an explicit normalization switch; the comparison
//   harness selects the setting that reproduces Route A and the finding is
//   recorded in the verification report rather than assumed.
//
// Every per-locus value lives in Q(zeta_N); totals are asserted rational
// before being returned.  All negative exponents are handled by unit-series
// inversion, and every pole cancellation is checked exactly (a non-vanishing
// discarded coefficient aborts the run).

#pragma once

#include <quotloc/cyclotomic.hpp>
#include <quotloc/rational.hpp>
#include <quotloc/symprod.hpp>

#include <string>
#include <vector>

namespace quotloc {

// Parameter bundle for one localization problem.  Throws
// std::invalid_argument naming the violated constraint.
struct ProblemInstance {
  long g;     // genus >= 1
  long gbar;  // g - 1
  long m, n;  // exponents with m + 2n = 4g - 3 and m >= g
  long N;     // odd prime: number of torus weights
  long d;     // total degree, with d - 2*gbar odd and >= 1
  long M;     // (N*(d - 2*gbar) - 1) / 2, a non-negative integer

  static ProblemInstance make(long g, long m, long n, long N, long d);
};

// One fixed locus: Sym^{d1}C x Sym^{d2}C with weights zeta^{j1}, zeta^{j2}.
struct FixedLocus {
  long d1, d2;  // non-negative, d1 + d2 = d
  long j1, j2;  // distinct root indices in [0, N)
};

// All (d+1) * N * (N-1) loci: splittings ascending in d1, then ordered pairs
// of distinct root indices in lexicographic order.  Deterministic.
std::vector<FixedLocus> enumerate_fixed_loci(long d, long N);

enum class Route { A, B };

// Per-locus normalization settings for Route B's printed reduction.
//   AsPrinted      — evaluate the displayed sum verbatim.
//   XbarCorrected  — multiply by prod_i lambda_i^(c * d_i), c in {-1, 0, +1},
//                    probing a coefficient-extraction Jacobian of the
//                    x -> x/lambda rescaling (c = 0 is the identity factor,
//                    i.e. the as-printed reading).
//   GenusWeighted  — multiply by prod_i lambda_i^(-g).  Re-deriving the
//                    rescaled residue form from the Route-A integrand shows
//                    its printed lambda-exponent omits exactly this factor
//                    (the simplification lambda^((N-1)(g-l)) = lambda^(l-g)
//                    was applied as lambda^l); the harness confirms this
//                    setting empirically.
struct BNormalization {
  enum class Kind { AsPrinted, XbarCorrected, GenusWeighted };
  Kind kind = Kind::AsPrinted;
  int c = 0;  // exponent parameter, XbarCorrected only

  static BNormalization as_printed() { return {Kind::AsPrinted, 0}; }
  static BNormalization xbar_corrected(int c) { return {Kind::XbarCorrected, c}; }
  static BNormalization genus_weighted() { return {Kind::GenusWeighted, 0}; }

  // Stable identifier used in reports: "as-printed", "xbar(c=-1)", ...
  std::string name() const;
  // The candidate settings the comparison harness must discriminate between
  // (distinct as factors; xbar c=0 coincides with as-printed and is omitted).
  static std::vector<BNormalization> candidates();
};

// Route A integrand on one locus, as a ThetaSeries at genus g with
// truncations (d1, d2): the product of the J-power, the m-power
// (2 theta_1 + 2 theta_2 + (d2-d1) J)^m, the unit factors
// (lambda_i + x_i)^M (x_i / ((lambda_i+x_i)^N - 1))^(d_i - gbar), and the
// exponentials exp(theta_i S_i) expanded as finite theta-sums.
ThetaSeries build_summand_A(const FixedLocus& locus, const ProblemInstance& inst,
                            const FieldPtr& field);

// integrate_fixed_locus(build_summand_A(...)): the locus's exact value.
CycloElement contribution_A(const FixedLocus& locus, const ProblemInstance& inst,
                            const FieldPtr& field);

// The same value computed with theta-powers substituted away eagerly
// (theta^j -> g!/(g-j)! x^j inside theta_exp_direct), which collapses each
// locus to bivariate coefficient extraction.  Algebraically identical to
// contribution_A — tested, not assumed — and cheaper by a factor of the
// theta-grading, so totals are assembled from this form.
CycloElement contribution_A_substituted(const FixedLocus& locus,
                                        const ProblemInstance& inst,
                                        const FieldPtr& field);

// Route B per-locus value under the given normalization.
CycloElement summand_B(const FixedLocus& locus, const ProblemInstance& inst,
                       const FieldPtr& field, const BNormalization& normalization);

// Sum over the full ordered-pair enumeration, in parallel (QUOTLOC_THREADS).
CycloElement ordered_sum_A(const ProblemInstance& inst, const FieldPtr& field);
CycloElement ordered_sum_B(const ProblemInstance& inst, const FieldPtr& field,
                           const BNormalization& normalization);

// The localized intersection number: (-1)^g * (1/2) * ordered sum.
//
// The enumeration walks ORDERED pairs of distinct weights while a geometric
// fixed locus is an unordered splitting; the integrand's swap symmetry
// makes each locus appear exactly twice, hence the factor 1/2 (the same 1/2
// that appears explicitly in the asymptotic collapse of the reduction
// chain).  The cyclotomic total is asserted rational and returned.
// Route B uses the genus-weighted normalization selected by the harness.
//
// The value is the honest Quot-scheme virtual integral at any admissible
// (N, d).  It coincides with the closed-form moduli intersection number
// only when N is large relative to the genus; see in_large_N_regime.
Rational quot_localized(const ProblemInstance& inst, Route route = Route::A);

// The transfer from the Quot scheme to the bundle-moduli intersection
// number requires N large relative to g.  Empirically the boundary is
// exactly N >= 2g + 1: below it the total is still rational, N-dependent,
// and d-shift invariant, but differs from the closed form (g=2, N=3 gives
// -181 instead of 80; g=3, N in {3,5} give 692937 and -4229 instead of
// 112896, which N in {7,11} both reproduce exactly).
inline bool in_large_N_regime(const ProblemInstance& inst) {
  return inst.N >= 2 * inst.g + 1;
}

// d-shift invariance: quot_localized at d equals quot_localized at d + 2
// (M adjusts automatically).  Both degrees must be admissible.
bool shift_invariance_check(const ProblemInstance& inst);

// Homogeneity audit justifying h = 1: with x_i, theta_i, h all of degree 1,
// the integrand factor list is homogeneous of total degree
//   (2n - 2 gbar) + m + 2M + (1 - N)(d - 2 gbar) + 0  (exp factors: degree 0)
// which must equal d = dim Sym^{d1}C x Sym^{d2}C.  Returns the tally;
// degree_audit checks it equals d.
long integrand_degree(const ProblemInstance& inst);
bool degree_audit(const ProblemInstance& inst);

}  // namespace quotloc
