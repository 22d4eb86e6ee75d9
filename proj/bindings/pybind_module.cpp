// Python bindings for the exact-arithmetic core.  Every rational crosses the
// boundary as fractions.Fraction built from the canonical "p/q" rendering, so
// exactness survives the trip; no value is ever converted through a float.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <quotloc/closedform.hpp>
#include <quotloc/lemma_lab.hpp>
#include <quotloc/localization.hpp>
#include <quotloc/rational.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

py::object to_fraction(const quotloc::Rational& r) {
  static py::object fraction_type =
      py::module_::import("fractions").attr("Fraction");
  return fraction_type(py::str(quotloc::to_string(r)));
}

quotloc::Route parse_route(const std::string& route) {
  if (route == "a") return quotloc::Route::A;
  if (route == "b") return quotloc::Route::B;
  throw std::invalid_argument("route must be 'a' or 'b'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact intersection numbers on the rank-2 odd-determinant moduli space: "
      "Bernoulli closed forms, Quot-scheme localization, and the residue "
      "reduction, all in exact rational arithmetic.";

  m.def(
      "intersect_main",
      [](long g, long m_alpha, long n) {
        return to_fraction(quotloc::intersect_main(g, m_alpha, n));
      },
      py::arg("g"), py::arg("m"), py::arg("n"),
      "Closed form for the alpha^m beta^n intersection number at genus g "
      "(requires 2m + 4n = 6g - 6 and m - g + 1 >= 0).");

  m.def(
      "intersect_psi",
      [](long g, long m_alpha, long n, const std::vector<int>& psi_pairs) {
        quotloc::IntersectionQuery query;
        query.g = g;
        query.m_alpha = m_alpha;
        query.n_beta = n;
        query.psi_pairs = psi_pairs;
        return to_fraction(quotloc::intersect_psi(query));
      },
      py::arg("g"), py::arg("m"), py::arg("n"),
      py::arg("psi_pairs") = std::vector<int>{},
      "Intersection number with psi-pair multiplicities (each 0 or 1); "
      "reduces to a lower-genus closed form.");

  m.def(
      "rhs_red",
      [](long g, long m, long n) { return to_fraction(quotloc::rhs_red(g, m, n)); },
      py::arg("g"), py::arg("m"), py::arg("n"),
      "Closed form the localization totals reproduce "
      "(requires m + 2n = 4g - 3 and m >= g).");

  m.def(
      "asymptotic_sum",
      [](long g, long m, long n, long d) {
        return to_fraction(quotloc::asymptotic_sum(g, m, n, d));
      },
      py::arg("g"), py::arg("m"), py::arg("n"), py::arg("d"),
      "The explicit large-N collapse sum; d-independent and self-checked "
      "against its closed form.");

  m.def(
      "quot_localized",
      [](long g, long m, long n, long N, long d, const std::string& route) {
        const auto inst = quotloc::ProblemInstance::make(g, m, n, N, d);
        return to_fraction(quotloc::quot_localized(inst, parse_route(route)));
      },
      py::arg("g"), py::arg("m"), py::arg("n"), py::arg("N"), py::arg("d"),
      py::arg("route") = "a",
      "Torus-localized Quot-scheme integral over all fixed loci "
      "(N odd prime, d - 2(g-1) odd and >= 1; route 'a' or 'b').");

  m.def(
      "reduction_prefactor",
      [](long g, long m_alpha, long n) {
        const auto pre = quotloc::reduction_prefactor(g, m_alpha, n);
        return py::make_tuple(pre.m, to_fraction(pre.factor));
      },
      py::arg("g"), py::arg("m"), py::arg("n"),
      "Pair (m, factor) with intersect_main(g, m, n) == factor * "
      "quot_localized at exponent m.");

  m.def(
      "in_large_n_regime",
      [](long g, long N) { return N >= 2 * g + 1; },
      py::arg("g"), py::arg("N"),
      "Whether the localization total coincides with the moduli closed form "
      "(empirically N >= 2g + 1).");

  m.def(
      "residue_closed",
      [](long a, long b, long c, long N) {
        return to_fraction(quotloc::residue_closed(a, b, c, N));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("N"),
      "Finite-difference closed form of the localization residue.");

  m.def(
      "lemma_bern_limit",
      [](long k) { return to_fraction(quotloc::lemma_bern_limit(k)); },
      py::arg("k"),
      "Large-N limit of the normalized root sums: (1 - 2^(1-k)) B_k / k! "
      "for k >= 0, zero for k < 0.");
}
