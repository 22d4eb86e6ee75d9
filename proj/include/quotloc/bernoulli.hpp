// Bernoulli numbers, defined through their generating functions and computed
// by exact series inversion (no closed-form tables).
//
// Two conventions coexist deliberately and are cross-checked in the tests:
//
//   Standard:  u/(e^u - 1)  = sum_k B_k u^k / k!          (B_1 = -1/2)
//   Sinh:      -u/sinh(u)   = sum_k (2^k - 2) B_k u^k / k!
//
// The sinh convention determines B_k only for k != 1 (the factor 2^1 - 2
// vanishes), so asking Sinh for B_1 is a hard error; every consumer in
// this codebase multiplies by its (2^k - 2)-style prefactor *before* looking
// the number up, which makes the k = 1 value unreachable.  For all other k
// the two conventions agree (equal even-index values, zero odd ones).

#pragma once

#include <quotloc/rational.hpp>

namespace quotloc {

enum class BernoulliConvention { Standard, Sinh };

// Memoized: each convention keeps one generating-function expansion whose
// truncation order grows by doubling as larger indices are requested.
Rational bernoulli(long k, BernoulliConvention convention = BernoulliConvention::Standard);

}  // namespace quotloc
