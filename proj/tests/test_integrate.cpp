#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tbm/errors.hpp"
#include "tbm/integrate.hpp"

using namespace tbm;

TEST_CASE("exact Riemann sums") {
    // The twisted k = 1 measure has total mass 1 at every level.
    MeasureSpec m1 = MeasureSpec::twisted(1, BigRat(2));
    for (long p : {3L, 5L})
        for (int N = 0; N <= 3; ++N)
            CHECK(riemann_sum(m1, 0, Domain::Zp, p, N) == BigRat(1));

    // Over the units the k = 1 sums telescope to the limit exactly.
    CHECK(riemann_sum(m1, 0, Domain::ZpStar, 3, 2) == BigRat(6, 7));
    CHECK(riemann_sum(m1, 0, Domain::ZpStar, 3, 4) == BigRat(6, 7));

    // Geometric-measure mass of Z_p is 1/(1 - z).
    CHECK(riemann_sum(MeasureSpec::koblitz(BigRat(2)), 0, Domain::Zp, 5, 1) ==
          BigRat(-1));

    // Negative exponents only make sense over the units.
    CHECK_NOTHROW(riemann_sum(m1, -1, Domain::ZpStar, 3, 2));
    CHECK_THROWS(riemann_sum(m1, -1, Domain::Zp, 3, 2));
}

TEST_CASE("closed-form moments") {
    CHECK(closed_form_moment(1, 0, BigRat(2), Domain::Zp, 3) == BigRat(1));
    CHECK(closed_form_moment(1, 0, BigRat(2), Domain::ZpStar, 3) == BigRat(6, 7));
    // x-moment of mu_{1,2} over Z_p: beta_2(2)/2 = -4/2.
    CHECK(closed_form_moment(1, 1, BigRat(2), Domain::Zp, 3) == BigRat(-2));
    // x^2-moment: beta_3(2)/3 = 18/3.
    CHECK(closed_form_moment(1, 2, BigRat(2), Domain::Zp, 3) == BigRat(6));
    CHECK_THROWS(closed_form_moment(1, -1, BigRat(2), Domain::ZpStar, 3));
    CHECK_THROWS(closed_form_moment(0, 0, BigRat(2), Domain::Zp, 3));
}

TEST_CASE("linear integrands match monomial sums") {
    MeasureSpec spec = MeasureSpec::twisted(2, BigRat(2));
    std::vector<std::pair<BigRat, long>> integrand = {
        {BigRat(3), 0}, {BigRat(-1, 2), 1}, {BigRat(5), 3}};
    for (Domain d : {Domain::Zp, Domain::ZpStar}) {
        BigRat combined = riemann_sum_linear(spec, integrand, d, 3, 3);
        BigRat split = BigRat(3) * riemann_sum(spec, 0, d, 3, 3) -
                       BigRat(1, 2) * riemann_sum(spec, 1, d, 3, 3) +
                       BigRat(5) * riemann_sum(spec, 3, d, 3, 3);
        CHECK(combined == split);
    }
}

TEST_CASE("unit-group sums split off the multiples of p") {
    // S_N(Z_p) = S_N(Z_p^*) + sum over representatives divisible by p,
    // recomputed here directly from the measure values.
    MeasureSpec spec = MeasureSpec::twisted(2, BigRat(2));
    long p = 3;
    int N = 2;
    long r = 2;
    BigRat divisible(0);
    for (long long a = 0; a < pow_ll(p, N); a += p) {
        BigRat term = measure_value(spec, Ball::make(p, N, a));
        divisible += BigRat(a).pow(r) * term;
    }
    CHECK(riemann_sum(spec, r, Domain::Zp, p, N) ==
          riemann_sum(spec, r, Domain::ZpStar, p, N) + divisible);
}

TEST_CASE("fast modular sums agree with exact sums") {
    PadicContext ctx3(mpz_class(3), 8);
    MeasureSpec m1 = MeasureSpec::twisted(1, BigRat(2));
    for (int N = 0; N <= 4; ++N) {
        PadicApprox fast = riemann_sum_fast(m1, 0, Domain::ZpStar, 3, N, ctx3);
        PadicApprox exact =
            PadicApprox::from_rational(riemann_sum(m1, 0, Domain::ZpStar, 3, N), ctx3);
        CHECK(fast.agrees_with(exact));
    }

    // z with negative valuation exercises the denominator-clearing path.
    PadicContext ctx5(mpz_class(5), 6);
    MeasureSpec mz = MeasureSpec::twisted(1, BigRat(1, 5));
    PadicApprox fast = riemann_sum_fast(mz, 1, Domain::Zp, 5, 3, ctx5);
    BigRat exact = riemann_sum(mz, 1, Domain::Zp, 5, 3);
    CHECK(fast.agrees_with(PadicApprox::from_rational(exact, ctx5)));
    CHECK(!fast.is_zero());

    // Sums that vanish identically come back as the exact zero.
    MeasureSpec b3 = MeasureSpec::bernoulli(3);
    CHECK(riemann_sum(b3, 0, Domain::Zp, 5, 2) == BigRat(0));
    CHECK(riemann_sum_fast(b3, 0, Domain::Zp, 5, 2, ctx5).is_zero());

    // N = 0 leaves no unit representatives at all.
    CHECK(riemann_sum(m1, 0, Domain::ZpStar, 3, 0) == BigRat(0));
    CHECK(riemann_sum_fast(m1, 0, Domain::ZpStar, 3, 0, ctx3).is_zero());
}

TEST_CASE("convergence certification toward a closed form") {
    // Telescoping case: every limit valuation is infinite.
    MeasureSpec m1 = MeasureSpec::twisted(1, BigRat(2));
    ConvergenceOptions opt;
    opt.N_begin = 1;
    opt.N_max = 5;
    opt.limit = closed_form_moment(1, 0, BigRat(2), Domain::ZpStar, 3);
    opt.threshold = 6;
    ConvergenceReport rep = check_convergence(m1, 0, Domain::ZpStar, 3, opt);
    CHECK(rep.threshold_reached);
    CHECK(rep.limit_vals_nondecreasing);
    REQUIRE(!rep.limit_valuations.empty());
    CHECK(rep.limit_valuations.front().is_infinite());

    // Generic case: valuations must climb past the threshold by N = 8.
    ConvergenceOptions opt2;
    opt2.limit = closed_form_moment(1, 2, BigRat(2), Domain::Zp, 3);
    ConvergenceReport rep2 = check_convergence(m1, 2, Domain::Zp, 3, opt2);
    CHECK(rep2.threshold_reached);
    CHECK(rep2.limit_vals_nondecreasing);
    CHECK(rep2.limit_valuations.back() >= Valuation::finite(6));
    CHECK(rep2.mode == SumMode::Exact);

    // The fast mode scans the same levels and reaches the same verdict.
    ConvergenceOptions opt3 = opt2;
    opt3.mode = SumMode::Fast;
    opt3.precision = 14;
    ConvergenceReport rep3 = check_convergence(m1, 2, Domain::Zp, 3, opt3);
    CHECK(rep3.threshold_reached);
    CHECK(rep3.levels == rep2.levels);

    // Without a limit the certificate is strict growth of the Cauchy
    // differences.
    ConvergenceOptions opt4;
    opt4.N_max = 6;
    opt4.stop_at_threshold = false;
    ConvergenceReport rep4 = check_convergence(m1, 1, Domain::Zp, 3, opt4);
    CHECK(!rep4.limit_claim.has_value());
    CHECK(rep4.diffs_strictly_increasing);
}

TEST_CASE("moment index shift") {
    CHECK(check_index_shift(2, 0, BigRat(2), Domain::Zp, 5));
    CHECK(check_index_shift(3, 1, BigRat(2), Domain::ZpStar, 3));
    CHECK(check_index_shift(2, 2, BigRat(-1), Domain::Zp, 3));

    IndexShiftReport rep =
        index_shift_report(2, 0, BigRat(2), Domain::Zp, 5, 1, 4);
    CHECK(rep.closed_form_equal);
    REQUIRE(rep.level_valuations.size() == 4);
    for (size_t i = 1; i < rep.level_valuations.size(); ++i)
        CHECK(rep.level_valuations[i] >= rep.level_valuations[i - 1]);
    CHECK(rep.level_valuations.back() >= Valuation::finite(3));
}

TEST_CASE("zeta special values") {
    CHECK(zeta_p(2, 5) == BigRat(1, 3));
    CHECK(zeta_p(1, 5) == BigRat(0));
    CHECK(zeta_p(4, 5) == BigRat(-31, 30));
    CHECK(zeta_p(6, 5) == BigRat(781, 63));
    CHECK(zeta_p(3, 5) == BigRat(0));  // odd k > 1: B_k = 0
    CHECK_THROWS(zeta_p(2, 4));        // composite p
    CHECK_THROWS(zeta_p(0, 5));
}

TEST_CASE("zeta from the regularized measure, two routes") {
    ZetaReport rep = check_zeta_triple(2, 5, BigRat(2), 3, 2);
    CHECK(rep.exact == BigRat(1, 3));
    CHECK(rep.threshold_reached);
    REQUIRE(rep.levels.size() == 3);
    // The moment route gains about two digits per level here.
    CHECK(rep.moment_valuations[0] == Valuation::finite(1));
    CHECK(rep.moment_valuations[1] == Valuation::finite(3));
    CHECK(rep.moment_valuations[2] == Valuation::finite(5));
    // The mass route is exact at every level.
    for (const Valuation& v : rep.mass_valuations) CHECK(v.is_infinite());
    CHECK(rep.mass_route.back() == rep.exact);

    ZetaReport rep4 = check_zeta_triple(4, 5, BigRat(2), 6, 4);
    CHECK(rep4.threshold_reached);

    CHECK_THROWS(check_zeta_triple(2, 5, BigRat(1), 4));   // alpha^k = 1
    CHECK_THROWS(check_zeta_triple(2, 5, BigRat(-1), 4));  // alpha^k = 1 for even k
    CHECK_THROWS(check_zeta_triple(2, 5, BigRat(5), 4));   // not a unit
}
