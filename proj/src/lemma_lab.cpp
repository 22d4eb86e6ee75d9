#include <quotloc/lemma_lab.hpp>

#include <quotloc/combinatorics.hpp>
#include <quotloc/series.hpp>

#include <sstream>
#include <stdexcept>

namespace quotloc {

namespace {

Rational abs_rational(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// Verdict for one (N1 < N2 < N3) error row: strict decrease, or exact
// convergence already at finite N (all three errors zero).
bool row_converges(const Rational& e1, const Rational& e2, const Rational& e3) {
  if (e1 == 0 && e2 == 0 && e3 == 0) return true;
  return e1 > e2 && e2 > e3;
}

std::string render_params(std::initializer_list<std::pair<const char*, std::string>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : kv) {
    if (!first) os << ' ';
    os << key << '=' << value;
    first = false;
  }
  return os.str();
}

}  // namespace

Rational residue_closed(long a, long b, long c, long N) {
  if (a < 0 || c < 0 || N < 1)
    throw std::invalid_argument("residue_closed: requires a, c >= 0 and N >= 1");
  Rational total(0);
  for (long p = 0; p <= a; ++p) {
    Rational term = binom_general(make_rational(b + p, N), c) * binom_int(a, p);
    if ((a - p) % 2 != 0) term = -term;
    total += term;
  }
  return total / Rational(N);
}

BernCheck lemma_bern_check(long a, long k, long N, RootSumAlgorithm algorithm) {
  BernCheck out;
  out.a = a;
  out.k = k;
  out.N = N;
  out.finite = pow_rational(Rational(N), -k) * root_sum((N - 1) / 2 + a, k, N, algorithm);
  out.limit = lemma_bern_limit(k);
  out.error = abs_rational(out.finite - out.limit);
  return out;
}

BinomCheck lemma_binoms_check(const Rational& z, long b, long alpha, long N) {
  if (b < 0 || alpha < 0 || N < 1)
    throw std::invalid_argument("lemma_binoms_check: requires b, alpha >= 0 and N >= 1");
  BinomCheck out;
  out.z = z;
  out.b = b;
  out.alpha = alpha;
  out.N = N;

  Rational finite(0);
  for (long p = 0; p <= alpha; ++p) {
    Rational term = binom_general(z + make_rational(p, N), b) * binom_int(alpha, p);
    if ((alpha - p) % 2 != 0) term = -term;
    finite += term;
  }
  out.finite = pow_rational(Rational(N), alpha) * finite;

  // alpha! [x^alpha] C(x + z, b) via the monomial coefficients of C(y, b)
  // re-expanded around y = x + z.
  Rational limit(0);
  if (alpha <= b) {
    const auto base = binom_poly_coeffs(b);
    for (long i = alpha; i <= b; ++i)
      limit += base[static_cast<std::size_t>(i)] * binom_int(i, alpha) *
               pow_rational(z, i - alpha);
    limit *= factorial(alpha);
  }
  out.limit = limit;
  out.error = abs_rational(out.finite - out.limit);
  return out;
}

LemmaReport lemma1_report() {
  static const long Ns[] = {11, 101, 1009};
  LemmaReport report;
  report.lemma_id = "lemma1";
  report.verdict =
      "per (a,k) row: errors strictly decreasing along N=11,101,1009 or exactly "
      "zero at all three, and the N=1009 error below |limit|/100 + 1/100; "
      "k=0 rows pinned at -1 on both sides";
  report.pass = true;

  for (long a = -1; a <= 2; ++a) {
    for (long k = 0; k <= 6; ++k) {
      Rational errors[3];
      bool pinned = true;
      for (int i = 0; i < 3; ++i) {
        const BernCheck point = lemma_bern_check(a, k, Ns[i]);
        errors[i] = point.error;
        if (k == 0 && !(point.finite == Rational(-1) && point.limit == Rational(-1)))
          pinned = false;
        report.points.push_back(LemmaPoint{
            render_params({{"a", std::to_string(a)},
                           {"k", std::to_string(k)},
                           {"N", std::to_string(Ns[i])}}),
            point.error, true});
      }
      const Rational tail_bound =
          abs_rational(lemma_bern_limit(k)) / 100 + make_rational(1, 100);
      const bool row_pass =
          (k == 0) ? pinned
                   : row_converges(errors[0], errors[1], errors[2]) &&
                         errors[2] < tail_bound;
      if (!row_pass) {
        report.pass = false;
        for (std::size_t i = report.points.size() - 3; i < report.points.size(); ++i)
          report.points[i].pass = false;
      }
    }
  }
  return report;
}

LemmaReport lemma2_report() {
  static const long Ns[] = {10, 100, 1000};
  static const Rational zs[] = {Rational(0), make_rational(1, 2),
                                make_rational(-3, 2), Rational(2)};
  LemmaReport report;
  report.lemma_id = "lemma2";
  report.verdict =
      "per (z,b,alpha) row: errors strictly decreasing along N=10,100,1000 or "
      "exactly zero at all three; rows with b <= alpha exactly zero";
  report.pass = true;

  for (const Rational& z : zs) {
    for (long b = 0; b <= 5; ++b) {
      for (long alpha = 0; alpha <= 4; ++alpha) {
        Rational errors[3];
        for (int i = 0; i < 3; ++i) {
          const BinomCheck point = lemma_binoms_check(z, b, alpha, Ns[i]);
          errors[i] = point.error;
          report.points.push_back(LemmaPoint{
              render_params({{"z", to_string(z)},
                             {"b", std::to_string(b)},
                             {"alpha", std::to_string(alpha)},
                             {"N", std::to_string(Ns[i])}}),
              point.error, true});
        }
        bool row_pass = row_converges(errors[0], errors[1], errors[2]);
        if (b <= alpha && !(errors[0] == 0 && errors[1] == 0 && errors[2] == 0))
          row_pass = false;
        if (!row_pass) {
          report.pass = false;
          for (std::size_t i = report.points.size() - 3; i < report.points.size(); ++i)
            report.points[i].pass = false;
        }
      }
    }
  }
  return report;
}

LemmaReport residue_report() {
  LemmaReport report;
  report.lemma_id = "residue";
  report.verdict =
      "residue_closed == residue_oracle exactly on a<=6, |b|<=4, c<=5, N in 1..9";
  report.pass = true;

  for (long a = 0; a <= 6; ++a)
    for (long b = -4; b <= 4; ++b)
      for (long c = 0; c <= 5; ++c)
        for (long N = 1; N <= 9; ++N) {
          const Rational closed = residue_closed(a, b, c, N);
          const Rational oracle = residue_oracle(a, b, c, N);
          const Rational error = abs_rational(closed - oracle);
          const bool pass = (error == 0);
          if (!pass) report.pass = false;
          report.points.push_back(LemmaPoint{
              render_params({{"a", std::to_string(a)},
                             {"b", std::to_string(b)},
                             {"c", std::to_string(c)},
                             {"N", std::to_string(N)}}),
              error, pass});
        }
  return report;
}

}  // namespace quotloc
