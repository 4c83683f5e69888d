#pragma once

// Verification suites: each runner executes a fixed, documented parameter
// grid over the library's identities and reports every failing case with
// both sides' exact values.  Output ordering is deterministic for a given
// grid regardless of thread count.

#include "tbm/polylog.hpp"

#include <string>
#include <vector>

namespace tbm {

struct SuiteFailure {
    std::string case_id;  // grid coordinates of the failing case
    std::string detail;   // what was expected vs what was computed
};

struct SuiteReport {
    std::string name;
    long cases = 0;
    std::vector<SuiteFailure> failures;
    double seconds = 0.0;
    bool ok() const { return failures.empty(); }
};

// Symbolic identities of the two-variable polynomials for k = 1..12:
// forward difference, decomposition for M = 1..6, symmetry, addition,
// inversion laws, coefficient structure, generating-function oracle, and
// the binomial form of the coefficients.
SuiteReport run_symbolic_suite(int threads = 1);

// Additivity to depth 3 and boundedness (valuation >= 0 up to level 4) of
// the twisted measures for p in {2,3,5,7}, k <= 6, and the z grid
// {2, 3, -1, 1/p, 7/3} filtered by val_p(z-1) <= 0.
SuiteReport run_measures_suite(int threads = 1);

// Riemann sums against closed-form moments: valuation >= 6 by level 8 for
// k <= 3, r <= 2, both domains, p in {3,5}, z in {2,-1}; the fast modular
// path agrees with every exact sum; the index-shift identity holds at
// closed-form level for k <= 6, r <= 3.
SuiteReport run_integration_suite(int threads = 1);

// Polylogarithm identities: the rational-function identity for
// 2 <= k <= 10, triple-route agreement for k <= 5, the series-convention
// constant, level telescoping, unit-mass inversion, and the Cauchy
// certificate of the k = 0 integral route.
SuiteReport run_polylog_suite(int threads = 1);

// Roots-of-unity measure sums against the regularized negation: the
// unscaled identity on the full grid, and the expected counterexample of
// the rescaled variant (values -1/4 vs -1/2 at c = 2, p = 3, k = 1).
SuiteReport run_cyclotomic_suite(int threads = 1);

// Zeta special values against both regularized-measure expressions to
// valuation >= 4 by level 6 for k in {2,4,6}, p in {3,5}, unit alpha in
// {2,3}; results independent of alpha to the same valuation.
SuiteReport run_zeta_suite(int threads = 1);

// 50 seeded random nonzero perturbations per k <= 5, each required to
// violate the forward-difference or decomposition law.
SuiteReport run_uniqueness_suite(int threads = 1, unsigned seed = 20250821);

const std::vector<std::string>& suite_names();

// Runs the named suite; throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, int threads = 1);

} // namespace tbm
