#include <quotloc/localization.hpp>

#include <quotloc/combinatorics.hpp>
#include <quotloc/parallel.hpp>
#include <quotloc/series.hpp>

#include <algorithm>
#include <stdexcept>

namespace quotloc {

namespace {

// zeta^(j*e) with exponent arithmetic mod N; e may be negative.
CycloElement root_power(const FieldPtr& field, long j, long e) {
  const long N = field->N();
  long idx = ((j % N) * (e % N)) % N;
  if (idx < 0) idx += N;
  return CycloElement::zeta_power(field, idx);
}

// (lambda + x) as a univariate series over Q(zeta_N).
UniSeries<CycloElement> linear_factor(const FieldPtr& field, long j, std::size_t trunc) {
  UniSeries<CycloElement> s(trunc, CycloElement(field, Rational(0)));
  s.set_coeff(0, CycloElement::zeta_power(field, j));
  if (trunc >= 1) s.set_coeff(1, CycloElement(field, Rational(1)));
  return s;
}

// u = ((lambda + x)^N - 1) / x, a unit series: the constant term of
// (lambda + x)^N is lambda^N = 1, so the difference is exactly divisible
// by x (checked), and u(0) = N lambda^(N-1) != 0.
UniSeries<CycloElement> u_series(const FieldPtr& field, long j, std::size_t trunc) {
  const auto base = linear_factor(field, j, trunc + 1);
  const auto one =
      UniSeries<CycloElement>::constant(trunc + 1, CycloElement(field, Rational(1)));
  return (base.pow(field->N()) - one).shift_down(1);
}

// The theta-free per-variable block (lambda + x)^M * u^(gbar - d_i); the
// printed exponent d_i - gbar sits on x/((lambda+x)^N - 1) = 1/u.
UniSeries<CycloElement> unit_block(const FieldPtr& field, long j, long M, long gbar,
                                   long di, std::size_t trunc) {
  return linear_factor(field, j, trunc).pow(M) *
         u_series(field, j, trunc).pow(gbar - di);
}

// J = (lambda_1 + x_1) - (lambda_2 + x_2) as a bivariate series; its
// constant term lambda_1 - lambda_2 is a unit because the roots differ.
BiSeries<CycloElement> j_factor(const FieldPtr& field, const FixedLocus& locus,
                                std::size_t t1, std::size_t t2) {
  const CycloElement one(field, Rational(1));
  BiSeries<CycloElement> J(t1, t2, CycloElement(field, Rational(0)));
  J.set_coeff(0, 0, CycloElement::zeta_power(field, locus.j1) -
                        CycloElement::zeta_power(field, locus.j2));
  if (t1 >= 1) J.set_coeff(1, 0, one);
  if (t2 >= 1) J.set_coeff(0, 1, -one);
  return J;
}

}  // namespace

ProblemInstance ProblemInstance::make(long g, long m, long n, long N, long d) {
  if (g < 1) throw std::invalid_argument("ProblemInstance: genus must satisfy g >= 1");
  if (m < 0 || n < 0)
    throw std::invalid_argument("ProblemInstance: exponents m, n must be non-negative");
  if (m + 2 * n != 4 * g - 3)
    throw std::invalid_argument(
        "ProblemInstance: dimension constraint m + 2n = 4g - 3 violated");
  if (m < g) throw std::invalid_argument("ProblemInstance: requires m >= g");
  CycloField::make(N);  // validates that N is an odd prime
  const long gbar = g - 1;
  const long shift = d - 2 * gbar;
  if (shift < 1 || shift % 2 == 0)
    throw std::invalid_argument(
        "ProblemInstance: degree must satisfy d - 2(g-1) odd and >= 1");
  return ProblemInstance{g, gbar, m, n, N, d, (N * shift - 1) / 2};
}

std::vector<FixedLocus> enumerate_fixed_loci(long d, long N) {
  if (d < 0 || N < 2)
    throw std::invalid_argument("enumerate_fixed_loci: need d >= 0 and N >= 2");
  std::vector<FixedLocus> loci;
  loci.reserve(static_cast<std::size_t>((d + 1) * N * (N - 1)));
  for (long d1 = 0; d1 <= d; ++d1)
    for (long j1 = 0; j1 < N; ++j1)
      for (long j2 = 0; j2 < N; ++j2)
        if (j1 != j2) loci.push_back(FixedLocus{d1, d - d1, j1, j2});
  return loci;
}

std::string BNormalization::name() const {
  switch (kind) {
    case Kind::AsPrinted:
      return "as-printed";
    case Kind::XbarCorrected:
      return "xbar(c=" + std::to_string(c) + ")";
    case Kind::GenusWeighted:
      return "genus-weighted";
  }
  return "unknown";
}

std::vector<BNormalization> BNormalization::candidates() {
  return {as_printed(), xbar_corrected(-1), xbar_corrected(+1), genus_weighted()};
}

ThetaSeries build_summand_A(const FixedLocus& locus, const ProblemInstance& inst,
                            const FieldPtr& field) {
  const std::size_t t1 = static_cast<std::size_t>(locus.d1);
  const std::size_t t2 = static_cast<std::size_t>(locus.d2);
  const std::size_t cap = static_cast<std::size_t>(inst.g);

  const BiSeries<CycloElement> J = j_factor(field, locus, t1, t2);

  // Theta-free block: J^(2n - 2gbar) * prod_i (lambda_i + x_i)^M u_i^(gbar - d_i).
  BiSeries<CycloElement> unit = J.pow(2 * inst.n - 2 * inst.gbar);
  unit = unit * BiSeries<CycloElement>::from_univariate(
                    unit_block(field, locus.j1, inst.M, inst.gbar, locus.d1, t1), 1,
                    t1, t2);
  unit = unit * BiSeries<CycloElement>::from_univariate(
                    unit_block(field, locus.j2, inst.M, inst.gbar, locus.d2, t2), 2,
                    t1, t2);

  // m-power base 2 theta_1 + 2 theta_2 + (d2 - d1) J.
  ThetaSeries mbase(field, inst.g, t1, t2, cap);
  mbase.set_entry(0, 0,
                  J.scaled(CycloElement(field, Rational(locus.d2 - locus.d1))));
  const BiSeries<CycloElement> two =
      BiSeries<CycloElement>::constant(t1, t2, CycloElement(field, Rational(2)));
  mbase.set_entry(1, 0, two);
  mbase.set_entry(0, 1, two);

  ThetaSeries acc = ThetaSeries::scalar(field, inst.g, t1, t2, cap, unit);
  for (long i = 0; i < inst.m; ++i) acc = acc * mbase;

  // exp(theta_i S_i) truncated at the theta cap: entries S_i^q / q!.
  for (int var = 1; var <= 2; ++var) {
    const long j = (var == 1) ? locus.j1 : locus.j2;
    const std::size_t trunc = (var == 1) ? t1 : t2;
    const auto S =
        fixed_point_exponent(inst.N, CycloElement::zeta_power(field, j), trunc);
    ThetaSeries expf(field, inst.g, t1, t2, cap);
    for (std::size_t q = 0; q <= cap; ++q) {
      const auto power =
          S.pow(static_cast<long>(q))
              .scaled(CycloElement(field, Rational(1) / factorial(static_cast<long>(q))));
      const auto entry = BiSeries<CycloElement>::from_univariate(power, var, t1, t2);
      if (var == 1)
        expf.set_entry(q, 0, entry);
      else
        expf.set_entry(0, q, entry);
    }
    acc = acc * expf;
  }
  return acc;
}

CycloElement contribution_A(const FixedLocus& locus, const ProblemInstance& inst,
                            const FieldPtr& field) {
  return integrate_fixed_locus(build_summand_A(locus, inst, field));
}

CycloElement contribution_A_substituted(const FixedLocus& locus,
                                        const ProblemInstance& inst,
                                        const FieldPtr& field) {
  const std::size_t t1 = static_cast<std::size_t>(locus.d1);
  const std::size_t t2 = static_cast<std::size_t>(locus.d2);
  const CycloElement zero(field, Rational(0));

  // Per-variable series base_i * theta_exp_direct(g, l, S_i) for l = 0..g:
  // theta^l exp(theta S) with theta-powers already substituted, so each
  // locus reduces to bivariate coefficient extraction against the J-powers.
  std::vector<std::vector<UniSeries<CycloElement>>> A;
  for (int var = 1; var <= 2; ++var) {
    const long j = (var == 1) ? locus.j1 : locus.j2;
    const long di = (var == 1) ? locus.d1 : locus.d2;
    const std::size_t trunc = (var == 1) ? t1 : t2;
    const auto base = unit_block(field, j, inst.M, inst.gbar, di, trunc);
    const auto S =
        fixed_point_exponent(inst.N, CycloElement::zeta_power(field, j), trunc);
    std::vector<UniSeries<CycloElement>> per_l;
    for (long l = 0; l <= inst.g; ++l)
      per_l.push_back(base * theta_exp_direct(inst.g, l, S));
    A.push_back(std::move(per_l));
  }

  const BiSeries<CycloElement> J = j_factor(field, locus, t1, t2);
  BiSeries<CycloElement> jpow = J.pow(2 * inst.n - 2 * inst.gbar);

  CycloElement total = zero;
  for (long s = 0; s <= inst.m; ++s) {
    const long l12 = inst.m - s;
    for (long l1 = std::max<long>(0, l12 - inst.g); l1 <= std::min<long>(inst.g, l12);
         ++l1) {
      const long l2 = l12 - l1;
      CycloElement extracted = zero;
      for (std::size_t i1 = 0; i1 <= t1; ++i1)
        for (std::size_t i2 = 0; i2 <= t2; ++i2) {
          const CycloElement& jc = jpow.coeff(i1, i2);
          if (jc.is_zero()) continue;
          extracted += jc * A[0][static_cast<std::size_t>(l1)].coeff(t1 - i1) *
                       A[1][static_cast<std::size_t>(l2)].coeff(t2 - i2);
        }
      const Rational weight = factorial(inst.m) / factorial(s) *
                              pow_rational(Rational(2), l1 + l2) *
                              pow_rational(Rational(locus.d2 - locus.d1), s);
      total += extracted.scaled(weight);
    }
    if (s < inst.m) jpow = jpow * J;
  }
  return total;
}

CycloElement summand_B(const FixedLocus& locus, const ProblemInstance& inst,
                       const FieldPtr& field, const BNormalization& normalization) {
  const long g = inst.g, gbar = inst.gbar, m = inst.m, n = inst.n, N = inst.N,
             M = inst.M;
  const CycloElement diff = CycloElement::zeta_power(field, locus.j1) -
                            CycloElement::zeta_power(field, locus.j2);
  CycloElement total(field, Rational(0));

  for (long l1 = 0; l1 <= std::min(g, m); ++l1) {
    if (locus.d1 - l1 < 0) continue;  // binomial with negative lower index: 0
    for (long l2 = 0; l2 <= std::min(g, m - l1); ++l2) {
      if (locus.d2 - l2 < 0) continue;
      const long s = m - l1 - l2;
      const Rational slice =
          factorial(m) / factorial(s) *
          pow_rational(Rational(locus.d2 - locus.d1), s) *
          pow_rational(Rational(2), l1 + l2) *
          pow_rational(Rational(N), 2 * gbar - l1 - l2) *
          Rational(binom_int(g, l1) * binom_int(g, l2));
      for (long k = 0; k <= inst.d; ++k) {
        const Rational zbin = binom_general(Rational(2 * n - 2 * gbar + s), k);
        if (zbin == 0) continue;
        const CycloElement zN = diff.pow(2 * n - 2 * gbar + s - k).scaled(zbin);
        for (long a1 = 0; a1 <= k; ++a1) {
          const long a2 = k - a1;
          // Residues with x-power above the pole order vanish identically.
          if (a1 > locus.d1 - l1 || a2 > locus.d2 - l2) continue;
          Rational p_sums[2];
          const long ls[2] = {l1, l2}, as[2] = {a1, a2},
                     ds[2] = {locus.d1, locus.d2};
          for (int i = 0; i < 2; ++i) {
            Rational acc(0);
            for (long p = 0; p <= as[i]; ++p) {
              const Rational upper =
                  make_rational(M + (N - 1) * (gbar - ls[i]) + p, N);
              Rational term = binom_general(upper, ds[i] - ls[i]) *
                              Rational(binom_int(as[i], p));
              if ((as[i] - p) % 2 != 0) term = -term;
              acc += term;
            }
            p_sums[i] = acc;
          }
          if (p_sums[0] == 0 || p_sums[1] == 0) continue;
          const CycloElement lam = root_power(field, locus.j1, M + l1 + a1 + 1) *
                                   root_power(field, locus.j2, M + l2 + a2 + 1);
          Rational coeff = slice * Rational(binom_int(k, a1)) * p_sums[0] * p_sums[1];
          if (a2 % 2 != 0) coeff = -coeff;
          total += (zN * lam).scaled(coeff);
        }
      }
    }
  }

  switch (normalization.kind) {
    case BNormalization::Kind::AsPrinted:
      break;
    case BNormalization::Kind::XbarCorrected:
      total = total * root_power(field, locus.j1, normalization.c * locus.d1) *
              root_power(field, locus.j2, normalization.c * locus.d2);
      break;
    case BNormalization::Kind::GenusWeighted:
      total = total * root_power(field, locus.j1, -g) *
              root_power(field, locus.j2, -g);
      break;
  }
  return total;
}

CycloElement ordered_sum_A(const ProblemInstance& inst, const FieldPtr& field) {
  const auto loci = enumerate_fixed_loci(inst.d, inst.N);
  return parallel_sum(loci.size(), CycloElement(field, Rational(0)),
                      [&](std::size_t i) {
                        return contribution_A_substituted(loci[i], inst, field);
                      });
}

CycloElement ordered_sum_B(const ProblemInstance& inst, const FieldPtr& field,
                           const BNormalization& normalization) {
  const auto loci = enumerate_fixed_loci(inst.d, inst.N);
  return parallel_sum(loci.size(), CycloElement(field, Rational(0)),
                      [&](std::size_t i) {
                        return summand_B(loci[i], inst, field, normalization);
                      });
}

Rational quot_localized(const ProblemInstance& inst, Route route) {
  const FieldPtr field = CycloField::make(inst.N);
  const CycloElement total =
      route == Route::A
          ? ordered_sum_A(inst, field)
          : ordered_sum_B(inst, field, BNormalization::genus_weighted());
  if (!total.is_rational())
    throw std::logic_error(
        "quot_localized: cyclotomic part of the locus sum did not cancel");
  Rational value = total.rational_value() / 2;  // ordered pairs double-count loci
  if (inst.g % 2 != 0) value = -value;
  return value;
}

bool shift_invariance_check(const ProblemInstance& inst) {
  const ProblemInstance shifted =
      ProblemInstance::make(inst.g, inst.m, inst.n, inst.N, inst.d + 2);
  return quot_localized(inst) == quot_localized(shifted);
}

long integrand_degree(const ProblemInstance& inst) {
  // Factor-by-factor homogeneity tally with deg x_i = deg theta_i = deg h = 1:
  long degree = 0;
  degree += 2 * inst.n - 2 * inst.gbar;        // J-power
  degree += inst.m;                            // m-power: every term degree 1
  degree += 2 * inst.M;                        // (lambda_i h + x_i)^M, both i
  degree += (1 - inst.N) * (inst.d - 2 * inst.gbar);  // x / ((lambda h + x)^N - h^N)
  degree += 0;  // exp(theta_i S_i): theta deg 1, S_i deg (N-1) - N = -1
  return degree;
}

bool degree_audit(const ProblemInstance& inst) {
  return integrand_degree(inst) == inst.d;
}

}  // namespace quotloc
