// Acceptance harness: one line per criterion, [PASS]/[FAIL] plus timing,
// exit status 0 only if every criterion holds.  Each criterion is exact —
// values are compared as rationals, never as floats.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <quotloc/closedform.hpp>
#include <quotloc/lemma_lab.hpp>
#include <quotloc/localization.hpp>
#include <quotloc/verify.hpp>

using namespace quotloc;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!note.empty()) note += "; ";
      note += what;
    }
  }
};

bool suite_clean(const std::vector<ResultCell>& cells) {
  for (const auto& cell : cells)
    if (cell.failed()) return false;
  return true;
}

double run_timed(const std::function<void(Outcome&)>& body, Outcome& out) {
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
  struct Criterion {
    std::string label;
    std::function<void(Outcome&)> body;
  };

  const std::vector<Criterion> criteria = {
      {"genus-1 localization: quot_localized(1,1,0,N,d) == 1 on {3,5,7}x{1,3}, under 5 s",
       [](Outcome& out) {
         const auto start = std::chrono::steady_clock::now();
         for (long N : {3L, 5L, 7L})
           for (long d : {1L, 3L}) {
             const auto q = quot_localized(ProblemInstance::make(1, 1, 0, N, d));
             out.require(q == Rational(1), "N=" + std::to_string(N) + " d=" +
                                               std::to_string(d) + " gave " + to_string(q));
           }
         const double elapsed =
             std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
         out.require(elapsed < 5.0, "grid exceeded the 5 s budget");
         out.require(rhs_red(1, 1, 0) == Rational(1), "closed-form oracle disagrees");
       }},

      {"genus-2 localization: 80 and -24 for N in {5,7}, reducing to 4 and -4, "
       "under 60 s per cell",
       [](Outcome& out) {
         for (long N : {5L, 7L}) {
           for (auto [m, n, expected] :
                {std::tuple<long, long, long>{5, 0, 80}, {3, 1, -24}}) {
             const auto start = std::chrono::steady_clock::now();
             const auto q = quot_localized(ProblemInstance::make(2, m, n, N, 3));
             const double elapsed =
                 std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                     .count();
             out.require(q == Rational(expected),
                         "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                             " N=" + std::to_string(N) + " gave " + to_string(q));
             out.require(elapsed < 60.0, "cell exceeded the 60 s budget");
           }
         }
         const auto p50 = reduction_prefactor(2, 3, 0);
         const auto p31 = reduction_prefactor(2, 1, 1);
         out.require(p50.factor * Rational(80) == intersect_main(2, 3, 0),
                     "alpha^3 reduction mismatch");
         out.require(p31.factor * Rational(-24) == intersect_main(2, 1, 1),
                     "alpha beta reduction mismatch");
       }},

      {"invariance suite: N-independence and d-shift invariance, exact",
       [](Outcome& out) {
         out.require(suite_clean(suites::invariance()), "invariance suite has failures");
       }},

      {"rationality: localization totals have identically zero cyclotomic part",
       [](Outcome& out) {
         const struct {
           long g, m, n, N, d;
         } cells[] = {{1, 1, 0, 3, 1}, {1, 1, 0, 5, 1}, {1, 1, 0, 7, 3}, {2, 3, 1, 5, 3}};
         for (const auto& c : cells) {
           const auto inst = ProblemInstance::make(c.g, c.m, c.n, c.N, c.d);
           const auto total = ordered_sum_A(inst, CycloField::make(c.N));
           out.require(total.is_rational(),
                       "non-rational total at g=" + std::to_string(c.g) +
                           " N=" + std::to_string(c.N) + " d=" + std::to_string(c.d));
         }
       }},

      {"closed-form triangle for g <= 3, including the genus-3 spot value 224",
       [](Outcome& out) {
         out.require(suite_clean(suites::consistency()), "consistency suite has failures");
         out.require(intersect_main(3, 6, 0) == Rational(224), "spot value is not 224");
       }},

      {"residue identity on the full grid a <= 6, |b| <= 4, c <= 5, N <= 9, under 10 s",
       [](Outcome& out) {
         const auto start = std::chrono::steady_clock::now();
         const auto report = residue_report();
         const double elapsed =
             std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
         out.require(report.pass, "residue grid has failures");
         out.require(report.points.size() == 3402, "unexpected grid size");
         out.require(elapsed < 10.0, "grid exceeded the 10 s budget");
       }},

      {"first convergence lemma: errors strictly decrease, k = 0 pinned at -1",
       [](Outcome& out) {
         const auto report = lemma1_report();
         out.require(report.pass, "lemma grid has failures: " + report.verdict);
       }},

      {"second convergence lemma: grid passes; (z=0,b=1,alpha=1) exact at every N",
       [](Outcome& out) {
         const auto report = lemma2_report();
         out.require(report.pass, "lemma grid has failures: " + report.verdict);
         for (long N : {13L, 47L, 211L, 1000L})
           out.require(lemma_binoms_check(Rational(0), 1, 1, N).error == Rational(0),
                       "not exact at N=" + std::to_string(N));
       }},

      {"identity suite: Vandermonde, Euler, theta rule, multinomial collapse",
       [](Outcome& out) {
         out.require(suite_clean(suites::identities()), "identity suite has failures");
       }},

      {"route B harness at (g=1,N=3,d=1): exactly one normalization matches route A",
       [](Outcome& out) {
         const auto cells = suites::routes(1, 1, 0, 3, 1);
         out.require(suite_clean(cells), "route harness has failures");
         std::string selected = "none";
         for (const auto& cell : cells)
           if (cell.params.contains("selected"))
             selected = cell.params.at("selected").get<std::string>();
         out.require(selected != "none", "no normalization recorded");
         out.note = "selected normalization: " + selected;
       }},
  };

  int passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const double elapsed = run_timed(criteria[i].body, out);
    passed += out.pass ? 1 : 0;
    std::printf("[%s] criterion %zu: %s (%.2f s)%s%s\n", out.pass ? "PASS" : "FAIL",
                i + 1, criteria[i].label.c_str(), elapsed,
                out.note.empty() ? "" : " -- ", out.note.c_str());
  }
  std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
