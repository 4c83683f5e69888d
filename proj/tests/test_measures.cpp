#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tbm/measures.hpp"

using namespace tbm;

TEST_CASE("balls and powers") {
    Ball b = Ball::make(5, 2, 7);
    CHECK(b.modulus() == 25);
    CHECK(Ball::make(3, 0, 0).modulus() == 1);
    CHECK_THROWS(Ball::make(4, 1, 0));    // composite p
    CHECK_THROWS(Ball::make(5, -1, 0));   // negative level
    CHECK_THROWS(Ball::make(5, 1, 5));    // residue out of range
    CHECK_THROWS(Ball::make(5, 1, -1));
    CHECK(pow_ll(3, 4) == 81);
    CHECK(pow_ll(2, 62) == (1LL << 62));
    CHECK_THROWS(pow_ll(2, 63));          // overflow
}

TEST_CASE("spec construction and validation") {
    MeasureSpec tw = MeasureSpec::twisted(2, BigRat(2));
    CHECK(tw.family() == MeasureFamily::TwistedBernoulli);
    CHECK(tw.k() == 2);
    CHECK(tw.z() == BigRat(2));
    CHECK_NOTHROW(tw.validate(5));

    // z = 1 is the pole of every row; z - 1 = 0 has infinite valuation.
    CHECK_THROWS(MeasureSpec::twisted(1, BigRat(1)).validate(5));
    // z = 6, p = 5: val_5(z - 1) = 1 > 0 is also rejected.
    CHECK_THROWS(MeasureSpec::twisted(1, BigRat(6)).validate(5));
    // z = 1/5 is fine at p = 5 (val of z - 1 is -1).
    CHECK_NOTHROW(MeasureSpec::twisted(1, BigRat(1, 5)).validate(5));

    // Regularization needs a p-adic unit.
    CHECK_NOTHROW(MeasureSpec::regularized(1, BigRat(1, 2)).validate(3));
    CHECK_THROWS(MeasureSpec::regularized(1, BigRat(1, 5)).validate(5));
    CHECK_THROWS(MeasureSpec::regularized(1, BigRat(5)).validate(5));
    CHECK_THROWS(MeasureSpec::regularized(1, BigRat(0)).validate(3));

    CHECK_THROWS(MeasureSpec::koblitz(BigRat(1)).validate(3));
    CHECK(!MeasureSpec::bernoulli(2).describe().empty());
}

TEST_CASE("residues of rational multiples") {
    CHECK(rational_residue(1, BigRat(2, 3), 25) == 9);   // 2 * 3^{-1} = 2*17 = 34 = 9
    CHECK(rational_residue(3, BigRat(1, 2), 9) == 6);    // 3 * 5 = 15 = 6 (mod 9)
    CHECK(rational_residue(4, BigRat(7), 9) == 1);       // 28 = 1 (mod 9)
    CHECK(rational_residue(0, BigRat(2, 3), 25) == 0);
    CHECK(rational_residue(2, BigRat(1, 2), 1) == 0);    // modulus 1
    CHECK_THROWS(rational_residue(1, BigRat(1, 5), 25)); // denominator not invertible
}

TEST_CASE("pinned measure values") {
    // Twisted family: p^{N(k-1)} z^a beta_k(a/p^N, z^{p^N}).
    CHECK(measure_value(MeasureSpec::twisted(1, BigRat(2)), Ball::make(5, 1, 3)) ==
          BigRat(8, 31));
    CHECK(measure_value(MeasureSpec::twisted(2, BigRat(2)), Ball::make(5, 1, 1)) ==
          BigRat(-516, 961));

    // Bernoulli distribution: p^{N(k-1)} B_k(a/p^N).
    CHECK(measure_value(MeasureSpec::bernoulli(1), Ball::make(3, 1, 0)) ==
          BigRat(-1, 2));
    CHECK(measure_value(MeasureSpec::bernoulli(1), Ball::make(3, 1, 1)) ==
          BigRat(-1, 6));
    CHECK(measure_value(MeasureSpec::bernoulli(2), Ball::make(3, 0, 0)) ==
          BigRat(1, 6));

    // Regularized at alpha = 1/2: mu(ball) - 2 mu(ball at {a/2}).
    CHECK(measure_value(MeasureSpec::regularized(1, BigRat(1, 2)), Ball::make(3, 1, 0)) ==
          BigRat(1, 2));

    // Geometric measure z^a/(1 - z^{p^N}).
    CHECK(measure_value(MeasureSpec::koblitz(BigRat(2)), Ball::make(3, 2, 0)) ==
          BigRat(-1, 511));
    CHECK(measure_value(MeasureSpec::koblitz(BigRat(2)), Ball::make(3, 0, 0)) ==
          BigRat(-1));
}

TEST_CASE("geometric measure is the negated first twisted measure") {
    MeasureSpec geo = MeasureSpec::koblitz(BigRat(3));
    MeasureSpec tw1 = MeasureSpec::twisted(1, BigRat(3));
    for (int N = 0; N <= 2; ++N)
        for (long long a = 0; a < pow_ll(5, N); ++a) {
            Ball b = Ball::make(5, N, a);
            CHECK(measure_value(geo, b) == -measure_value(tw1, b));
        }
}

TEST_CASE("additivity under refinement") {
    CHECK(check_additivity(MeasureSpec::twisted(1, BigRat(2)), Ball::make(5, 0, 0), 2));
    CHECK(check_additivity(MeasureSpec::twisted(3, BigRat(7, 3)), Ball::make(3, 1, 1), 3));
    CHECK(check_additivity(MeasureSpec::bernoulli(2), Ball::make(3, 1, 1), 2));
    CHECK(check_additivity(MeasureSpec::regularized(2, BigRat(3)), Ball::make(5, 0, 0), 2));
    CHECK(check_additivity(MeasureSpec::koblitz(BigRat(2)), Ball::make(5, 1, 3), 1));
}

TEST_CASE("boundedness of the twisted measures") {
    BoundednessReport rep = boundedness_scan(2, BigRat(2), 5, 3);
    CHECK(rep.bounded());
    CHECK(rep.min_valuation == Valuation::finite(0));
    CHECK(rep.values_scanned == 156);  // 1 + 5 + 25 + 125

    CHECK(boundedness_scan(1, BigRat(1, 5), 5, 2).bounded());
    CHECK(boundedness_scan(3, BigRat(-1), 3, 3).bounded());

    // The evaluator agrees with the plain function on every scanned ball.
    MeasureEvaluator ev;
    MeasureSpec spec = MeasureSpec::twisted(2, BigRat(2));
    for (int N = 0; N <= 2; ++N)
        for (long long a = 0; a < pow_ll(5, N); ++a) {
            Ball b = Ball::make(5, N, a);
            CHECK(ev.value(spec, b) == measure_value(spec, b));
            CHECK(ev.value(spec, b) == measure_value(spec, b));  // cached path
        }
}

TEST_CASE("sums over nontrivial roots of unity") {
    // c = 2: the only nontrivial root is -1, so the sum is a direct evaluation.
    Ball b31 = Ball::make(3, 1, 0);
    BigRat direct = measure_value(MeasureSpec::twisted(1, BigRat(-1)), b31);
    CHECK(root_of_unity_measure_sum(2, 1, b31) == direct);
    CHECK(root_of_unity_measure_sum(2, 1, b31) == BigRat(-1, 2));
    CHECK(root_of_unity_measure_sum(2, 1, Ball::make(3, 1, 1)) == BigRat(1, 2));

    // c = 3 at p = 5 pairs the two primitive cube roots through a trace.
    CHECK(root_of_unity_measure_sum(3, 1, Ball::make(5, 1, 0)) == BigRat(-1));

    // c = 1: empty sum.
    CHECK(root_of_unity_measure_sum(1, 2, b31) == BigRat(0));

    // gcd(c, p) must be 1.
    CHECK_THROWS(root_of_unity_measure_sum(3, 1, b31));
}

TEST_CASE("roots-of-unity identity against the regularized measure") {
    // Unscaled normalization holds on a grid; the c^{-k}-rescaled variant
    // fails, with a pinned counterexample.
    for (long c : {2L, 3L}) {
        long p = (c == 2) ? 5 : 7;
        for (int k = 1; k <= 3; ++k)
            for (long long a = 0; a < p; ++a) {
                CycloIdentityReport rep =
                    check_cyclotomic_identity(c, k, Ball::make(p, 1, a));
                CHECK(rep.unscaled_holds);
            }
    }

    CycloIdentityReport cx = check_cyclotomic_identity(2, 1, Ball::make(3, 1, 0));
    CHECK(cx.unscaled_holds);
    CHECK(!cx.scaled_holds);
    CHECK(cx.roots_sum == BigRat(-1, 2));
    CHECK(cx.reg_negation == BigRat(-1, 2));
    CHECK(cx.scaled_roots_sum == BigRat(-1, 4));

    // c = 1 is vacuous: empty sum on one side, alpha = 1 regularization on
    // the other, both zero.
    CycloIdentityReport triv = check_cyclotomic_identity(1, 2, Ball::make(3, 1, 0));
    CHECK(triv.roots_sum == BigRat(0));
    CHECK(triv.reg_negation == BigRat(0));
    CHECK(triv.unscaled_holds);
}
