// Verification suites: each builds a list of result cells (exact values plus
// PASS/FAIL verdicts) that the CLI renders and the acceptance harness gates
// on.  Everything is deterministic — the "random" identity samples come from
// a fixed-seed generator so reports are byte-identical across runs.

#pragma once

#include <quotloc/report.hpp>

#include <string>
#include <vector>

namespace quotloc::suites {

// Lemma 1 / Lemma 2 convergence grids and the residue closed form vs the
// series oracle; one summary cell per grid plus a cell per failing point.
std::vector<ResultCell> lemmas();

// Algebraic identities: Vandermonde collapse on random rational samples,
// Euler finite-difference identities, theta-rule equivalence
// (theta_exp_closed vs theta_exp_direct), and the multinomial collapse.
std::vector<ResultCell> identities();

// Closed-form triangle for every admissible (g <= 3, m_alpha, n):
// intersect_main == prefactor * rhs_red and rhs_red == (-1)^g * asymptotic_sum,
// plus the genus-3 spot value 224.
std::vector<ResultCell> consistency();

// Localization invariance: N-independence across the acceptance grids,
// d-shift invariance, agreement with rhs_red, and rationality of every total.
std::vector<ResultCell> invariance();

// Route B normalization harness at one (g, m, n, N, d): evaluates the ordered
// sum under every candidate normalization and verifies that exactly one
// reproduces Route A, recording which.
std::vector<ResultCell> routes(long g, long m, long n, long N, long d);

// Re-derive the shipped golden intersection table and compare cell by cell.
std::vector<ResultCell> golden(const std::string& path);

}  // namespace quotloc::suites
