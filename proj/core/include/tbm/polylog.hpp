#pragma once

// Negative-index polylogarithms as exact rational functions, their relation
// to the twisted Bernoulli numbers, and p-adic polylogarithm special values
// computed both in closed form and as measure integrals over the units.

#include "tbm/integrate.hpp"

namespace tbm {

// sum_{n>=1} n^k z^n as an exact rational function (k >= 0), generated from
// the geometric series z/(1-z) by repeated application of z d/dz.
RatFunc neg_polylog(int k);

// neg_polylog(k-1) equals -beta_k(y)/k identically, for k >= 2.
bool check_apostol(int k);

// The n = 0 term separating the two series conventions:
// neg_polylog(0) - 1/(1-z) = -1 identically.
bool check_polylog_constant_gap();

// At every finite level the geometric measure's level sums telescope:
// sum_{a < p^N} z^a/(1 - z^{p^N}) = 1/(1-z) as rational functions, verified
// for N <= 4 and p in {2, 3, 5}.
bool koblitz_constant_check();

// Li^(p)_{1-k}(z) = -(beta_k(z) - p^{k-1} beta_k(z^p))/k for k >= 1.
// Requires val_p(z-1) <= 0.
BigRat padic_polylog(int k, const BigRat& z, long p);

// The same value along three independent routes — the closed form above,
// the x^{k-1} moment of the level-1 twisted measure over the units, and
// the unit-group mass of the level-k twisted measure; true when all three
// agree exactly.
bool check_polylog_routes(int k, const BigRat& z, long p);

// Unit-group mass inversion: the mass of mu_{k,1/z} equals (-1)^k times
// the mass of mu_{k,z}, checked through closed forms.
bool check_integral_inversion(int k, const BigRat& z, long p);

// Riemann-sum route: x^{k-1} integrated against the geometric measure over
// the units.  For k >= 1 the limit claim defaults to padic_polylog(k,z,p);
// for k <= 0 no closed form exists and only the Cauchy differences certify
// convergence (use fast mode there — the exact sums need the lcm of all
// units below p^N).
ConvergenceReport padic_polylog_via_integral(int k, const BigRat& z, long p,
                                             ConvergenceOptions opt = {});

} // namespace tbm
