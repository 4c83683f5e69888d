#include "tbm/verify.hpp"

#include "tbm/bernoulli.hpp"
#include "tbm/parallel.hpp"

#include <chrono>
#include <functional>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace tbm {

namespace {

// ------------------------------------------------------------------
// Case runner: each case returns a failure detail string, or nothing on
// success.  Cases run in parallel blocks; failures are collected in grid
// order so reports are deterministic for a fixed grid.
// ------------------------------------------------------------------

struct Case {
    std::string id;
    std::function<std::optional<std::string>()> run;
};

template <typename... Ts>
std::string cat(Ts&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

std::optional<std::string> pass_or(bool ok, std::string detail) {
    if (ok) return std::nullopt;
    return std::optional<std::string>(std::move(detail));
}

SuiteReport run_cases(std::string name, std::vector<Case> cases, int threads) {
    const auto t0 = std::chrono::steady_clock::now();
    auto blocks = parallel_blocks<std::vector<SuiteFailure>>(
        static_cast<long long>(cases.size()), threads,
        [&cases](long long lo, long long hi) {
            std::vector<SuiteFailure> out;
            for (long long i = lo; i < hi; ++i) {
                Case& c = cases[static_cast<std::size_t>(i)];
                try {
                    if (auto detail = c.run()) out.push_back({c.id, *detail});
                } catch (const std::exception& e) {
                    out.push_back({c.id, cat("unexpected exception: ", e.what())});
                }
            }
            return out;
        });
    SuiteReport rep;
    rep.name = std::move(name);
    rep.cases = static_cast<long>(cases.size());
    for (auto& b : blocks)
        rep.failures.insert(rep.failures.end(), std::make_move_iterator(b.begin()),
                            std::make_move_iterator(b.end()));
    rep.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

const char* flag(bool b) { return b ? "yes" : "no"; }

// val_p(z - 1) <= 0, the admissibility condition of the z-dependent measures.
bool admissible_z(const BigRat& z, long p) {
    try {
        MeasureSpec::twisted(1, z).validate(p);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

std::string join_valuations(const std::vector<Valuation>& vs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ", ";
        os << vs[i];
    }
    return os.str();
}

} // namespace

// ------------------------------------------------------------------
// 1. Symbolic identities, k = 1..12
// ------------------------------------------------------------------

SuiteReport run_symbolic_suite(int threads) {
    std::vector<Case> cases;
    for (int k = 1; k <= 12; ++k) {
        cases.push_back({cat("forward-difference k=", k), [k] {
            return pass_or(check_forward_difference(k),
                           "y*f(x+1,y) - f(x,y) does not equal k*x^{k-1}");
        }});
        for (int M = 1; M <= 6; ++M)
            cases.push_back({cat("decomposition k=", k, " M=", M), [k, M] {
                return pass_or(check_decomposition(k, M),
                               "the M-part refinement does not reassemble the row");
            }});
        cases.push_back({cat("symmetry k=", k), [k] {
            return pass_or(check_symmetry(k),
                           "(-1)^k f(x,1/y) does not equal y*f(1-x,y)");
        }});
        cases.push_back({cat("addition k=", k), [k] {
            return pass_or(check_addition(k),
                           "binomial addition law fails coefficientwise");
        }});
        cases.push_back({cat("inversion-numbers k=", k), [k] {
            return pass_or(check_inversion_numbers(k),
                           "constant-term inversion law fails");
        }});
        for (int i = 1; i <= k; ++i)
            cases.push_back(
                {cat("coefficient-structure k=", k, " i=", i),
                 [k, i]() -> std::optional<std::string> {
                     PhiReport rep = phi_structure(k, i);
                     if (rep.all_ok()) return std::nullopt;
                     return cat("cleared coefficient fails structure checks: polynomial=",
                                flag(rep.is_polynomial),
                                " integral=", flag(rep.integral_coeffs),
                                " degree=", flag(rep.degree_bound_ok),
                                " base=", flag(rep.base_value_ok), "; value ",
                                rep.phi.str());
                 }});
        cases.push_back({cat("generating-function k=", k),
                         [k]() -> std::optional<std::string> {
                             TwistedPoly direct = twisted_bernoulli(k);
                             TwistedPoly series = twisted_bernoulli_gf(k, k);
                             if (series == direct) return std::nullopt;
                             return cat("series expansion gives ", series.str(),
                                        " but the recurrence gives ", direct.str());
                         }});
        cases.push_back({cat("coefficients-binomial k=", k),
                         [k]() -> std::optional<std::string> {
                             TwistedFamily fam(k);
                             for (int i = 1; i <= k; ++i) {
                                 RatFunc lhs = fam.f(k, i);
                                 RatFunc rhs = RatFunc(binomial(k, i)) *
                                               twisted_bernoulli_number(i);
                                 if (!(lhs - rhs).is_zero())
                                     return cat("f(", k, ",", i, ") = ", lhs.str(),
                                                " but C(k,i)*b_i = ", rhs.str());
                             }
                             return std::nullopt;
                         }});
    }
    return run_cases("symbolic", std::move(cases), threads);
}

// ------------------------------------------------------------------
// 2. Measures: additivity and boundedness
// ------------------------------------------------------------------

SuiteReport run_measures_suite(int threads) {
    std::vector<Case> cases;
    const long primes[] = {2, 3, 5, 7};
    for (long p : primes) {
        std::vector<BigRat> zs;
        for (const BigRat& z :
             {BigRat(2), BigRat(3), BigRat(-1), BigRat(1, p), BigRat(7, 3)})
            if (admissible_z(z, p)) zs.push_back(z);

        // Depth-3 refinement of a level-0 and a level-1 ball keeps every
        // evaluated ball at level <= 4.
        const Ball balls[] = {Ball::make(p, 0, 0), Ball::make(p, 1, 1 % p)};
        for (int k = 1; k <= 6; ++k) {
            for (const BigRat& z : zs) {
                for (const Ball& ball : balls)
                    cases.push_back(
                        {cat("additivity p=", p, " k=", k, " z=", z, " N=", ball.N,
                             " a=", ball.a),
                         [k, z, ball] {
                             return pass_or(
                                 check_additivity(MeasureSpec::twisted(k, z), ball, 3),
                                 "refined balls do not sum to the parent value "
                                 "through depth 3");
                         }});
                cases.push_back({cat("boundedness p=", p, " k=", k, " z=", z),
                                 [k, z, p]() -> std::optional<std::string> {
                                     BoundednessReport rep =
                                         boundedness_scan(k, z, p, 4);
                                     if (rep.bounded()) return std::nullopt;
                                     return cat("minimum valuation ", rep.min_valuation,
                                                " < 0 at N=", rep.argmin.N,
                                                " a=", rep.argmin.a, " (",
                                                rep.values_scanned, " values scanned)");
                                 }});
            }
        }
    }
    return run_cases("measures", std::move(cases), threads);
}

// ------------------------------------------------------------------
// 3. Integration: convergence to closed forms, fast-path agreement,
//    index shift
// ------------------------------------------------------------------

SuiteReport run_integration_suite(int threads) {
    std::vector<Case> cases;
    const long primes[] = {3, 5};
    const Domain domains[] = {Domain::Zp, Domain::ZpStar};

    for (long p : primes)
        for (const BigRat& z : {BigRat(2), BigRat(-1)})
            for (int k = 1; k <= 3; ++k)
                for (long r = 0; r <= 2; ++r)
                    for (Domain d : domains)
                        cases.push_back(
                            {cat("convergence p=", p, " z=", z, " k=", k, " r=", r,
                                 " domain=", domain_name(d)),
                             [p, z, k, r, d]() -> std::optional<std::string> {
                                 MeasureSpec spec = MeasureSpec::twisted(k, z);
                                 ConvergenceOptions opt;
                                 opt.N_begin = 1;
                                 opt.N_max = 8;
                                 opt.threshold = 6;
                                 opt.limit = closed_form_moment(k, r, z, d, p);
                                 ConvergenceReport rep =
                                     check_convergence(spec, r, d, p, opt);
                                 if (!rep.threshold_reached)
                                     return cat(
                                         "valuation toward the closed form reached only [",
                                         join_valuations(rep.limit_valuations),
                                         "] over levels ", rep.levels.front(), "..",
                                         rep.levels.back(), " (need >= 6)");
                                 PadicContext ctx(mpz_class(p), 14);
                                 for (std::size_t i = 0; i < rep.levels.size(); ++i) {
                                     PadicApprox fast = riemann_sum_fast(
                                         spec, r, d, p, rep.levels[i], ctx);
                                     PadicApprox exact =
                                         PadicApprox::from_rational(rep.sums[i], ctx);
                                     if (!fast.agrees_with(exact))
                                         return cat("fast sum ", fast.str(),
                                                    " disagrees with exact sum ",
                                                    exact.str(), " at level ",
                                                    rep.levels[i]);
                                 }
                                 return std::nullopt;
                             }});

    for (long p : primes)
        for (const BigRat& z : {BigRat(2), BigRat(-1)})
            for (int k = 1; k <= 6; ++k)
                for (long r = 0; r <= 3; ++r)
                    for (Domain d : domains)
                        cases.push_back({cat("index-shift p=", p, " z=", z, " k=", k,
                                             " r=", r, " domain=", domain_name(d)),
                                         [p, z, k, r, d] {
                                             return pass_or(
                                                 check_index_shift(k, r, z, d, p),
                                                 "x^r moment of the order-k measure "
                                                 "differs from k times the "
                                                 "x^{r+k-1} moment of the order-1 "
                                                 "measure");
                                         }});

    return run_cases("integration", std::move(cases), threads);
}

// ------------------------------------------------------------------
// 4. Polylogarithms
// ------------------------------------------------------------------

SuiteReport run_polylog_suite(int threads) {
    std::vector<Case> cases;

    for (int k = 2; k <= 10; ++k)
        cases.push_back({cat("rational-identity k=", k), [k] {
            return pass_or(check_apostol(k),
                           "sum_{n>=1} n^{k-1} z^n does not equal -b_k(z)/k");
        }});

    cases.push_back({"series-constant", [] {
        return pass_or(check_polylog_constant_gap(),
                       "the two series conventions do not differ by exactly 1");
    }});
    cases.push_back({"level-telescoping", [] {
        return pass_or(koblitz_constant_check(),
                       "level sums of the geometric measure fail to telescope "
                       "to 1/(1-z)");
    }});

    const long primes[] = {3, 5};
    for (int k = 1; k <= 5; ++k)
        for (const BigRat& z : {BigRat(2), BigRat(-1), BigRat(1, 5)})
            for (long p : primes) {
                if (!admissible_z(z, p)) continue;
                cases.push_back({cat("route-agreement k=", k, " z=", z, " p=", p),
                                 [k, z, p] {
                                     return pass_or(check_polylog_routes(k, z, p),
                                                    "direct formula, order-1 moment, "
                                                    "and order-k mass disagree");
                                 }});
            }

    for (int k = 1; k <= 3; ++k)
        for (const BigRat& z : {BigRat(2), BigRat(-1)})
            for (long p : primes) {
                if (!admissible_z(z, p)) continue;
                cases.push_back(
                    {cat("integral-route k=", k, " z=", z, " p=", p),
                     [k, z, p]() -> std::optional<std::string> {
                         ConvergenceReport rep = padic_polylog_via_integral(k, z, p);
                         if (rep.threshold_reached) return std::nullopt;
                         return cat("Riemann sums reached only valuations [",
                                    join_valuations(rep.limit_valuations),
                                    "] toward the closed form (need >= ",
                                    rep.threshold, ")");
                     }});
            }

    cases.push_back({"cauchy k=0 z=2 p=3", []() -> std::optional<std::string> {
        ConvergenceOptions opt;
        opt.N_begin = 3;
        opt.N_max = 8;
        opt.mode = SumMode::Fast;
        opt.precision = 14;
        opt.stop_at_threshold = false;
        ConvergenceReport rep = padic_polylog_via_integral(0, BigRat(2), 3, opt);
        if (rep.diffs_strictly_increasing) return std::nullopt;
        return cat("successive-difference valuations [",
                   join_valuations(rep.diff_valuations),
                   "] are not strictly increasing over levels 3..8");
    }});

    for (int k = 1; k <= 8; ++k)
        for (const BigRat& z : {BigRat(2), BigRat(3), BigRat(-2)})
            for (long p : primes) {
                if (!admissible_z(z, p) || !admissible_z(z.inverse(), p)) continue;
                cases.push_back({cat("mass-inversion k=", k, " z=", z, " p=", p),
                                 [k, z, p] {
                                     return pass_or(
                                         check_integral_inversion(k, z, p),
                                         "unit-group mass at 1/z is not (-1)^k "
                                         "times the mass at z");
                                 }});
            }

    return run_cases("polylog", std::move(cases), threads);
}

// ------------------------------------------------------------------
// 5. Roots-of-unity measure sums
// ------------------------------------------------------------------

SuiteReport run_cyclotomic_suite(int threads) {
    std::vector<Case> cases;
    const long orders[] = {2, 3, 4, 6};
    const long primes[] = {5, 7};
    for (long c : orders)
        for (long p : primes)
            for (int k = 1; k <= 4; ++k)
                for (int N = 0; N <= 2; ++N) {
                    const long long pN = pow_ll(p, N);
                    for (long long a = 0; a < pN; ++a)
                        cases.push_back(
                            {cat("roots-sum c=", c, " p=", p, " k=", k, " N=", N,
                                 " a=", a),
                             [c, p, k, N, a]() -> std::optional<std::string> {
                                 CycloIdentityReport rep = check_cyclotomic_identity(
                                     c, k, Ball::make(p, N, a));
                                 if (rep.unscaled_holds) return std::nullopt;
                                 return cat("sum over nontrivial roots is ",
                                            rep.roots_sum,
                                            " but the regularized negation is ",
                                            rep.reg_negation);
                             }});
                }

    cases.push_back({"rescaled-variant c=2 p=3 k=1 N=1 a=0",
                     []() -> std::optional<std::string> {
                         CycloIdentityReport rep =
                             check_cyclotomic_identity(2, 1, Ball::make(3, 1, 0));
                         if (rep.scaled_holds)
                             return cat("the rescaled variant unexpectedly holds (",
                                        rep.scaled_roots_sum, " vs ",
                                        rep.reg_negation, ")");
                         if (!(rep.scaled_roots_sum == BigRat(-1, 4)) ||
                             !(rep.reg_negation == BigRat(-1, 2)))
                             return cat("expected the counterexample -1/4 vs -1/2 "
                                        "but computed ",
                                        rep.scaled_roots_sum, " vs ",
                                        rep.reg_negation);
                         return std::nullopt;
                     }});

    return run_cases("cyclotomic", std::move(cases), threads);
}

// ------------------------------------------------------------------
// 6. Zeta special values
// ------------------------------------------------------------------

SuiteReport run_zeta_suite(int threads) {
    std::vector<Case> cases;
    const int ks[] = {2, 4, 6};
    const long primes[] = {3, 5};
    const long alphas[] = {2, 3};

    for (int k : ks)
        for (long p : primes)
            for (long alpha : alphas) {
                if (alpha % p == 0) continue;  // alpha must be a p-adic unit
                cases.push_back(
                    {cat("special-value k=", k, " p=", p, " alpha=", alpha),
                     [k, p, alpha]() -> std::optional<std::string> {
                         ZetaReport rep =
                             check_zeta_triple(k, p, BigRat(alpha), 6, 4);
                         if (rep.threshold_reached) return std::nullopt;
                         return cat("exact value ", rep.exact,
                                    "; moment-route valuations [",
                                    join_valuations(rep.moment_valuations),
                                    "], mass-route valuations [",
                                    join_valuations(rep.mass_valuations),
                                    "] (need >= 4 by level 6)");
                     }});
            }

    for (int k : ks)
        cases.push_back(
            {cat("alpha-independence k=", k, " p=5"),
             [k]() -> std::optional<std::string> {
                 ZetaReport r2 = check_zeta_triple(k, 5, BigRat(2), 6, 4);
                 ZetaReport r3 = check_zeta_triple(k, 5, BigRat(3), 6, 4);
                 Valuation vm =
                     val_p(r2.moment_route.back() - r3.moment_route.back(), 5);
                 if (vm < Valuation::finite(4))
                     return cat("moment routes for alpha=2 and alpha=3 differ at "
                                "valuation ",
                                vm, " (need >= 4)");
                 Valuation vs =
                     val_p(r2.mass_route.back() - r3.mass_route.back(), 5);
                 if (vs < Valuation::finite(4))
                     return cat("mass routes for alpha=2 and alpha=3 differ at "
                                "valuation ",
                                vs, " (need >= 4)");
                 return std::nullopt;
             }});

    return run_cases("zeta", std::move(cases), threads);
}

// ------------------------------------------------------------------
// 7. Uniqueness probes
// ------------------------------------------------------------------

namespace {

// A random nonzero polynomial in x of degree < k whose coefficients are
// rational functions (n/d) y^e / (y-1)^f with small parameters.
TwistedPoly random_perturbation(int k, std::mt19937& rng) {
    auto draw = [&rng](unsigned long m) {
        return static_cast<long>(rng() % m);
    };
    auto random_coeff = [&]() {
        long n = draw(19) - 9;
        if (n == 0) n = 1;
        long d = 1 + draw(4);
        int e = static_cast<int>(draw(3));
        int f = static_cast<int>(draw(3));
        PolyQ num = PolyQ::monomial(e, BigRat(n, d));
        PolyQ den = PolyQ{BigRat(-1), BigRat(1)}.pow(static_cast<unsigned>(f));
        return RatFunc(num, den);
    };
    std::vector<RatFunc> coeffs(static_cast<std::size_t>(k), RatFunc(BigRat(0)));
    bool any = false;
    for (int j = 0; j < k; ++j)
        if (draw(2) == 1) {
            coeffs[static_cast<std::size_t>(j)] = random_coeff();
            any = true;
        }
    if (!any) coeffs[static_cast<std::size_t>(draw(static_cast<unsigned long>(k)))] =
        random_coeff();
    return TwistedPoly(std::move(coeffs));
}

} // namespace

SuiteReport run_uniqueness_suite(int threads, unsigned seed) {
    std::vector<Case> cases;
    for (int k = 1; k <= 5; ++k)
        for (int trial = 0; trial < 50; ++trial)
            cases.push_back(
                {cat("perturbation k=", k, " trial=", trial),
                 [k, trial, seed]() -> std::optional<std::string> {
                     std::mt19937 rng(seed + 1000u * static_cast<unsigned>(k) +
                                      static_cast<unsigned>(trial));
                     TwistedPoly pert = random_perturbation(k, rng);
                     if (uniqueness_probe(k, pert)) return std::nullopt;
                     return cat("nonzero perturbation satisfies both "
                                "characterizing laws: ",
                                pert.str());
                 }});
    return run_cases("uniqueness", std::move(cases), threads);
}

// ------------------------------------------------------------------
// Dispatch
// ------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "symbolic", "measures",   "integration", "polylog",
        "cyclotomic", "zeta",     "uniqueness"};
    return names;
}

SuiteReport run_suite(const std::string& name, int threads) {
    if (name == "symbolic") return run_symbolic_suite(threads);
    if (name == "measures") return run_measures_suite(threads);
    if (name == "integration") return run_integration_suite(threads);
    if (name == "polylog") return run_polylog_suite(threads);
    if (name == "cyclotomic") return run_cyclotomic_suite(threads);
    if (name == "zeta") return run_zeta_suite(threads);
    if (name == "uniqueness") return run_uniqueness_suite(threads);
    throw std::invalid_argument("unknown suite: " + name);
}

} // namespace tbm
