#include <quotloc/verify.hpp>

#include <quotloc/closedform.hpp>
#include <quotloc/combinatorics.hpp>
#include <quotloc/lemma_lab.hpp>
#include <quotloc/localization.hpp>
#include <quotloc/symprod.hpp>

#include <fstream>
#include <random>
#include <sstream>

namespace quotloc::suites {

namespace {

ResultCell check_cell(Json params, const std::string& value, const std::string& route,
                      bool pass, const std::string& fail_note = "") {
  ResultCell cell;
  cell.params = std::move(params);
  cell.value = value;
  cell.route = route;
  cell.verdict = pass ? "PASS" : (fail_note.empty() ? "FAIL" : "FAIL: " + fail_note);
  return cell;
}

void add_lemma_report(std::vector<ResultCell>& cells, const LemmaReport& report) {
  Rational max_error(0);
  long failing = 0;
  for (const auto& point : report.points) {
    if (point.error > max_error) max_error = point.error;
    if (!point.pass) {
      ++failing;
      if (failing <= 8)  // keep reports bounded; the count is recorded below
        cells.push_back(check_cell(Json{{"lemma", report.lemma_id},
                                        {"point", point.params},
                                        {"error", to_string(point.error)}},
                                   to_string(point.error), "-", false,
                                   "grid point violates the convergence rule"));
    }
  }
  cells.push_back(check_cell(Json{{"lemma", report.lemma_id},
                                  {"points", report.points.size()},
                                  {"failing", failing},
                                  {"rule", report.verdict}},
                             to_string(max_error), "-", report.pass));
}

// Deterministic small rationals for the identity sampling; plain modulus on
// a fixed-seed mt19937 keeps the stream identical everywhere.
class SampleStream {
 public:
  explicit SampleStream(unsigned seed) : rng_(seed) {}
  long integer(long lo, long hi) {  // inclusive range
    return lo + static_cast<long>(rng_() % static_cast<unsigned long>(hi - lo + 1));
  }
  Rational rational(long span, long max_den) {
    return make_rational(integer(-span, span), integer(1, max_den));
  }

 private:
  std::mt19937 rng_;
};

}  // namespace

std::vector<ResultCell> lemmas() {
  std::vector<ResultCell> cells;
  add_lemma_report(cells, residue_report());
  add_lemma_report(cells, lemma1_report());
  add_lemma_report(cells, lemma2_report());
  return cells;
}

std::vector<ResultCell> identities() {
  std::vector<ResultCell> cells;

  // Vandermonde-type collapse at 200 random rational (a1, t) with a, m <= 8.
  // The identity holds exactly on its validity domain m <= a (it provably
  // fails beyond: a1 = a2 = 1/2, a = 1, t = 0, m = 2 gives 1 vs 0), which is
  // also the regime the downstream collapse uses, so samples are drawn there.
  {
    SampleStream stream(20260814u);
    long mismatches = 0;
    for (int i = 0; i < 200; ++i) {
      const long a = stream.integer(0, 8);
      const long m = stream.integer(0, a);
      const Rational a1 = stream.rational(12, 6);
      const Rational t = stream.rational(12, 6);
      if (vandermonde_sum(a1, a, t, m) != vandermonde_closed(a1, a, t, m))
        ++mismatches;
    }
    cells.push_back(check_cell(Json{{"identity", "vandermonde"},
                                    {"samples", 200},
                                    {"domain", "m <= a"},
                                    {"mismatches", mismatches}},
                               std::to_string(mismatches), "-", mismatches == 0));
  }

  // Euler finite differences: sum_p p^i C(a,p)(-1)^(a-p) = 0 (i < a), a! (i = a).
  {
    long mismatches = 0;
    for (long a = 0; a <= 12; ++a)
      for (long i = 0; i <= a; ++i) {
        const Rational expected = (i < a) ? Rational(0) : factorial(a);
        if (euler_alt_sum(a, i) != expected) ++mismatches;
      }
    cells.push_back(check_cell(Json{{"identity", "euler"},
                                    {"grid", "a<=12, i<=a"},
                                    {"mismatches", mismatches}},
                               std::to_string(mismatches), "-", mismatches == 0));
  }

  // Theta rule: closed form vs direct substitution, all roots, g <= 4.
  {
    long mismatches = 0;
    for (long N : {3L, 5L}) {
      const auto field = CycloField::make(N);
      for (long g = 1; g <= 4; ++g) {
        const std::size_t trunc = static_cast<std::size_t>(g) + 3;
        for (long j = 1; j < N; ++j) {
          const auto lambda = CycloElement::zeta_power(field, j);
          const auto S = fixed_point_exponent(N, lambda, trunc);
          for (long l = 0; l <= g; ++l)
            if (!(theta_exp_closed(g, l, N, lambda, trunc) ==
                  theta_exp_direct(g, l, S)))
              ++mismatches;
        }
      }
    }
    cells.push_back(check_cell(Json{{"identity", "theta-rule"},
                                    {"grid", "g<=4, N in {3,5}, all roots, l<=g"},
                                    {"mismatches", mismatches}},
                               std::to_string(mismatches), "-", mismatches == 0));
  }

  // Multinomial collapse: sum_{l1+l2+s=m} C(g,l1) C(g,l2) C(m-2g,s) = 1.
  {
    long mismatches = 0;
    for (long g = 1; g <= 4; ++g) {
      const long m = 4 * g - 3;
      Rational total(0);
      for (long l1 = 0; l1 <= g; ++l1)
        for (long l2 = 0; l2 <= g; ++l2) {
          const long s = m - l1 - l2;
          if (s < 0) continue;
          total += binom_int(g, l1) * binom_int(g, l2) *
                   binom_general(Rational(m - 2 * g), s);
        }
      if (total != Rational(1)) ++mismatches;
    }
    cells.push_back(check_cell(Json{{"identity", "multinomial-collapse"},
                                    {"grid", "g<=4"},
                                    {"mismatches", mismatches}},
                               std::to_string(mismatches), "-", mismatches == 0));
  }

  return cells;
}

std::vector<ResultCell> consistency() {
  std::vector<ResultCell> cells;
  for (long g = 1; g <= 3; ++g) {
    for (long n = 0; 4 * n <= 6 * g - 6; ++n) {
      const long m_alpha = (6 * g - 6 - 4 * n) / 2;
      if (m_alpha < g - 1) continue;  // closed form requires m_alpha - g + 1 >= 0
      const Rational lhs = intersect_main(g, m_alpha, n);
      const auto pre = reduction_prefactor(g, m_alpha, n);
      const Rational red = rhs_red(g, pre.m, n);
      cells.push_back(check_cell(
          Json{{"check", "triangle"}, {"g", g}, {"m_alpha", m_alpha}, {"n", n}},
          to_string(lhs), "closed", lhs == pre.factor * red,
          "intersect_main != prefactor * rhs_red"));

      bool asym_pass = false;
      std::string note;
      try {
        Rational asym = asymptotic_sum(g, pre.m, n, 2 * g - 1);
        if (g % 2 != 0) asym = -asym;
        asym_pass = (red == asym);
        if (!asym_pass) note = "rhs_red != (-1)^g * asymptotic_sum";
      } catch (const std::exception& e) {
        note = e.what();
      }
      cells.push_back(check_cell(
          Json{{"check", "asymptotic"}, {"g", g}, {"m", pre.m}, {"n", n}},
          to_string(red), "closed", asym_pass, note));
    }
  }
  cells.push_back(check_cell(Json{{"check", "spot"}, {"g", 3}, {"m_alpha", 6}, {"n", 0}},
                             to_string(intersect_main(3, 6, 0)), "closed",
                             intersect_main(3, 6, 0) == Rational(224)));
  return cells;
}

std::vector<ResultCell> invariance() {
  std::vector<ResultCell> cells;

  // One (g, m, n) grid: every (N, d) cell must agree with rhs_red exactly
  // (which simultaneously certifies N-independence and d-shift invariance).
  const auto run_grid = [&cells](long g, long m, long n, std::vector<long> Ns,
                                 std::vector<long> ds) {
    const Rational expected = rhs_red(g, m, n);
    for (long N : Ns)
      for (long d : ds) {
        std::string value = "-";
        bool pass = false;
        std::string note;
        try {
          const auto inst = ProblemInstance::make(g, m, n, N, d);
          const Rational q = quot_localized(inst);  // asserts rationality
          value = to_string(q);
          pass = (q == expected);
          if (!pass) note = "differs from rhs_red = " + to_string(expected);
        } catch (const std::exception& e) {
          note = e.what();
        }
        cells.push_back(check_cell(
            Json{{"g", g}, {"m", m}, {"n", n}, {"N", N}, {"d", d}}, value, "a",
            pass, note));
      }
  };

  run_grid(1, 1, 0, {3, 5, 7}, {1, 3});
  run_grid(2, 5, 0, {5, 7}, {3, 5});
  run_grid(2, 3, 1, {5, 7}, {3});
  return cells;
}

std::vector<ResultCell> routes(long g, long m, long n, long N, long d) {
  std::vector<ResultCell> cells;
  const auto inst = ProblemInstance::make(g, m, n, N, d);
  const auto field = CycloField::make(N);
  const auto reference = ordered_sum_A(inst, field);

  const auto render = [](const CycloElement& x) {
    return x.is_rational() ? to_string(x.rational_value())
                           : std::string("non-rational");
  };

  cells.push_back(check_cell(Json{{"route", "a"},
                                  {"g", g}, {"m", m}, {"n", n}, {"N", N}, {"d", d}},
                             render(reference), "a", true));

  long matches = 0;
  std::string selected = "none";
  for (const auto& normalization : BNormalization::candidates()) {
    const auto total = ordered_sum_B(inst, field, normalization);
    const bool match = (total == reference);
    if (match) {
      ++matches;
      selected = normalization.name();
    }
    ResultCell cell;
    cell.params = Json{{"route", "b"},
                       {"normalization", normalization.name()},
                       {"matches_route_a", match}};
    cell.value = render(total);
    cell.route = "b";
    cell.verdict = "VALUE";
    cells.push_back(std::move(cell));
  }

  cells.push_back(check_cell(Json{{"check", "normalization-uniqueness"},
                                  {"selected", selected},
                                  {"matches", matches}},
                             render(reference), "b", matches == 1,
                             "expected exactly one matching normalization"));
  return cells;
}

std::vector<ResultCell> golden(const std::string& path) {
  std::vector<ResultCell> cells;
  std::ifstream in(path);
  if (!in) {
    cells.push_back(check_cell(Json{{"golden", path}}, "-", "closed", false,
                               "cannot open golden table"));
    return cells;
  }
  Json doc = Json::parse(in);
  for (const auto& row : doc.at("cells")) {
    const long g = row.at("g").get<long>();
    const long m_alpha = row.at("m_alpha").get<long>();
    const long n = row.at("n").get<long>();
    const Rational expected = rational_from_string(row.at("value").get<std::string>());
    const Rational derived = intersect_main(g, m_alpha, n);
    cells.push_back(check_cell(
        Json{{"g", g}, {"m_alpha", m_alpha}, {"n", n}, {"golden", to_string(expected)}},
        to_string(derived), "closed", derived == expected,
        "re-derived value differs from golden table"));
  }
  return cells;
}

}  // namespace quotloc::suites
