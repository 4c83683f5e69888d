#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tbm/errors.hpp"
#include "tbm/padic.hpp"

#include <stdexcept>

using namespace tbm;

TEST_CASE("context validation") {
    CHECK_NOTHROW(PadicContext(mpz_class(2), 1));
    CHECK_THROWS(PadicContext(mpz_class(4), 4));
    CHECK_THROWS(PadicContext(mpz_class(1), 4));
    CHECK_THROWS(PadicContext(mpz_class(3), 0));
    PadicContext ctx(mpz_class(3), 4);
    CHECK(ctx.p_long() == 3);
    CHECK(ctx.p_pow_precision() == 81);
    CHECK(ctx == PadicContext(mpz_class(3), 4));
    CHECK(ctx != PadicContext(mpz_class(3), 5));
}

TEST_CASE("rational embedding") {
    PadicContext ctx(mpz_class(3), 4);
    // 6/7 = 3 * (2/7); 2/7 mod 81 = 2 * 58 = 116 = 35.
    PadicApprox x = PadicApprox::from_rational(BigRat(6, 7), ctx);
    CHECK(x.valuation() == Valuation::finite(1));
    CHECK(x.unit() == 35);
    CHECK(x.digits() == 4);
    CHECK(x.abs_precision() == 5);
    CHECK(x.str() == "3^1 * 35 (mod 3^5)");

    PadicApprox neg = PadicApprox::from_rational(BigRat(-1, 5), ctx);
    CHECK(neg.valuation() == Valuation::finite(0));
    CHECK((neg.unit() * 5 + 1) % 81 == 0);

    PadicApprox z = PadicApprox::from_rational(BigRat(0), ctx);
    CHECK(z.is_zero());
    CHECK(z.valuation().is_infinite());
    CHECK(z.str() == "0");
    CHECK_THROWS(z.unit());
    CHECK_THROWS(z.abs_precision());

    // Negative valuation: 1/3 = 3^-1 * 1.
    PadicApprox inv3 = PadicApprox::from_rational(BigRat(1, 3), ctx);
    CHECK(inv3.valuation() == Valuation::finite(-1));
    CHECK(inv3.unit() == 1);

    // Denominator divisible by p is fine; numerator too.
    CHECK(PadicApprox::from_rational(BigRat(9, 2), ctx).valuation() ==
          Valuation::finite(2));
}

TEST_CASE("make validates digits and unit") {
    PadicContext ctx(mpz_class(3), 4);
    CHECK_NOTHROW(PadicApprox::make(ctx, 0, mpz_class(2), 4));
    CHECK_THROWS(PadicApprox::make(ctx, 0, mpz_class(3), 4));   // not a unit
    CHECK_THROWS(PadicApprox::make(ctx, 0, mpz_class(2), 0));   // no digits
    CHECK_THROWS(PadicApprox::make(ctx, 0, mpz_class(2), 5));   // beyond precision
}

TEST_CASE("arithmetic") {
    PadicContext ctx(mpz_class(3), 4);
    PadicApprox seven = PadicApprox::from_rational(BigRat(7), ctx);
    PadicApprox inv = seven.inv();
    CHECK(inv.valuation() == Valuation::finite(0));
    CHECK(inv.unit() == 58);

    PadicApprox a = PadicApprox::from_rational(BigRat(5, 2), ctx);
    PadicApprox b = PadicApprox::from_rational(BigRat(1, 2), ctx);
    CHECK(a.add(b).agrees_with(PadicApprox::from_rational(BigRat(3), ctx)));
    CHECK(a.sub(b).agrees_with(PadicApprox::from_rational(BigRat(2), ctx)));
    CHECK(a.mul(b).agrees_with(PadicApprox::from_rational(BigRat(5, 4), ctx)));
    // x + (-x) cancels every certified digit: that is precision exhaustion,
    // not a certified zero.
    CHECK_THROWS_AS(a.neg().add(a), precision_exhausted);

    // Mixed valuations: 3 + 1/3 = 10/3.
    PadicApprox s = PadicApprox::from_rational(BigRat(3), ctx)
                        .add(PadicApprox::from_rational(BigRat(1, 3), ctx));
    CHECK(s.agrees_with(PadicApprox::from_rational(BigRat(10, 3), ctx)));
    CHECK(s.valuation() == Valuation::finite(-1));

    // Cancellation raises the valuation and costs digits: 1/3 + 2/3 = 1.
    PadicApprox t = PadicApprox::from_rational(BigRat(1, 3), ctx)
                        .add(PadicApprox::from_rational(BigRat(2, 3), ctx));
    CHECK(t.valuation() == Valuation::finite(0));
    CHECK(t.agrees_with(PadicApprox::from_rational(BigRat(1), ctx)));

    CHECK(a.pow(0).agrees_with(PadicApprox::from_rational(BigRat(1), ctx)));
    CHECK(a.pow(3).agrees_with(PadicApprox::from_rational(BigRat(125, 8), ctx)));
    CHECK(a.pow(-2).agrees_with(PadicApprox::from_rational(BigRat(4, 25), ctx)));

    PadicApprox z = PadicApprox::zero(ctx);
    CHECK(z.add(a).agrees_with(a));
    CHECK(a.mul(z).is_zero());
    CHECK_THROWS(z.inv());
    CHECK(z.pow(2).is_zero());
}

TEST_CASE("full cancellation is an error, not a guess") {
    PadicContext ctx(mpz_class(3), 4);
    PadicApprox a = PadicApprox::from_rational(BigRat(7), ctx);
    CHECK_THROWS_AS(a.sub(PadicApprox::from_rational(BigRat(7), ctx)),
                    precision_exhausted);
    // Values agreeing only beyond the window also cancel fully: 7 vs 7 + 3^4.
    CHECK_THROWS_AS(a.sub(PadicApprox::from_rational(BigRat(7 + 81), ctx)),
                    precision_exhausted);
}

TEST_CASE("agreement semantics") {
    PadicContext ctx(mpz_class(3), 6);
    PadicApprox a = PadicApprox::from_rational(BigRat(2), ctx);
    // Same class modulo 3^6.
    CHECK(a.agrees_with(PadicApprox::from_rational(BigRat(2 + 729), ctx)));
    CHECK(!a.agrees_with(PadicApprox::from_rational(BigRat(5), ctx)));
    // Fewer certified digits loosen agreement: 2 and 2 + 27 agree mod 3^3.
    PadicApprox coarse = PadicApprox::make(ctx, 0, mpz_class(2 + 27), 3);
    CHECK(coarse.agrees_with(a));
    // Zero agrees with a nonzero value only when that value could still be
    // zero at its certified absolute precision.
    PadicApprox z = PadicApprox::zero(ctx);
    CHECK(!z.agrees_with(a));
    PadicApprox tiny = PadicApprox::make(ctx, 6, mpz_class(1), 1);
    CHECK(z.agrees_with(tiny) == (tiny.valuation().value() >= tiny.abs_precision()));
}

TEST_CASE("context mismatch is rejected") {
    PadicContext c3(mpz_class(3), 4), c5(mpz_class(5), 4);
    PadicApprox a = PadicApprox::from_rational(BigRat(2), c3);
    PadicApprox b = PadicApprox::from_rational(BigRat(2), c5);
    CHECK_THROWS(a.add(b));
}

TEST_CASE("rational representative") {
    PadicContext ctx(mpz_class(5), 6);
    PadicApprox x = PadicApprox::from_rational(BigRat(2, 5), ctx);
    BigRat rep = x.rational_rep();
    // rep = 5^-1 * u with u ≡ 2 (mod 5^6) up to the stored window.
    CHECK(val_p(rep - BigRat(2, 5), 5) >= Valuation::finite(5));
}
