#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tbm/cyclotomic.hpp"
#include "tbm/series.hpp"

#include <stdexcept>

using namespace tbm;

namespace {
PolyQ y_minus_1() { return PolyQ{BigRat(-1), BigRat(1)}; }
} // namespace

TEST_CASE("polynomial ring basics") {
    PolyQ f{BigRat(1), BigRat(0), BigRat(2)};  // 1 + 2y^2
    PolyQ g{BigRat(-1), BigRat(1)};            // y - 1
    CHECK(f.degree() == 2);
    CHECK(g.degree() == 1);
    CHECK(PolyQ{}.is_zero());
    CHECK(PolyQ{}.degree() == -1);
    CHECK(f.coeff(0) == BigRat(1));
    CHECK(f.coeff(1) == BigRat(0));
    CHECK(f.coeff(2) == BigRat(2));
    CHECK(f.coeff(99) == BigRat(0));
    CHECK(f.leading() == BigRat(2));

    CHECK((f + g).coeff(0) == BigRat(0));
    CHECK((f - g).coeff(1) == BigRat(-1));
    PolyQ prod = f * g;  // (1+2y^2)(y-1) = -1 + y - 2y^2 + 2y^3
    CHECK(prod == PolyQ{BigRat(-1), BigRat(1), BigRat(-2), BigRat(2)});
    CHECK(f.scaled(BigRat(1, 2)) == PolyQ{BigRat(1, 2), BigRat(0), BigRat(1)});
    CHECK(PolyQ::monomial(3, BigRat(5)).degree() == 3);
    CHECK(PolyQ::monomial(0, BigRat(0)).is_zero());
    CHECK(PolyQ::var() == PolyQ{BigRat(0), BigRat(1)});
    CHECK(PolyQ::constant(BigRat(7)).degree() == 0);

    CHECK(f.eval(BigRat(3)) == BigRat(19));
    CHECK(f.derivative() == PolyQ{BigRat(0), BigRat(4)});
    CHECK(f.stretch(2) == PolyQ{BigRat(1), BigRat(0), BigRat(0), BigRat(0), BigRat(2)});
    CHECK(f.pow(2) == f * f);
    CHECK(f.pow(0) == PolyQ::constant(BigRat(1)));
}

TEST_CASE("division, gcd, exactness") {
    PolyQ f{BigRat(-1), BigRat(0), BigRat(0), BigRat(1)};  // y^3 - 1
    PolyQ g{BigRat(-1), BigRat(1)};                        // y - 1
    PolyQ q, rem;
    PolyQ::divrem(f, g, q, rem);
    CHECK(rem.is_zero());
    CHECK(q == PolyQ{BigRat(1), BigRat(1), BigRat(1)});
    CHECK(f.divexact(g) == q);
    CHECK_THROWS(f.divexact(PolyQ{BigRat(1), BigRat(1)}));  // y+1 does not divide

    PolyQ a = g * PolyQ{BigRat(2), BigRat(0), BigRat(6)};
    PolyQ b = g * PolyQ{BigRat(3), BigRat(3)};
    PolyQ d = PolyQ::gcd(a, b);
    CHECK(d.leading() == BigRat(1));  // monic
    CHECK(a.divexact(d).degree() + d.degree() == a.degree());
    CHECK(d == PolyQ{BigRat(-1), BigRat(1)});

    // Division property on a fixed sample: f = q*g + rem with deg rem < deg g.
    PolyQ ff{BigRat(3), BigRat(-2), BigRat(5), BigRat(1), BigRat(4)};
    PolyQ gg{BigRat(1), BigRat(2), BigRat(1)};
    PolyQ::divrem(ff, gg, q, rem);
    CHECK(q * gg + rem == ff);
    CHECK(rem.degree() < gg.degree());

    CHECK(f.monic().leading() == BigRat(1));
    CHECK(PolyQ{BigRat(2), BigRat(4)}.monic() == PolyQ{BigRat(1, 2), BigRat(1)});
    CHECK(f.is_integral());
    CHECK(!PolyQ{BigRat(1, 2)}.is_integral());
}

TEST_CASE("rational functions") {
    RatFunc x = RatFunc::var();
    RatFunc one(BigRat(1));
    RatFunc f = one / (one - x);  // 1/(1-y), canonically -1/(y-1)
    CHECK(f.den() == PolyQ{BigRat(-1), BigRat(1)});
    CHECK(f.num() == PolyQ{BigRat(-1)});
    CHECK((f * (one - x)) == one);
    CHECK(f - f == RatFunc(BigRat(0)));
    CHECK((f + f) == RatFunc(BigRat(2)) * f);
    CHECK(f.inverse() == one - x);
    CHECK(f.pow(2) == f * f);
    CHECK(f.pow(-1) == one - x);
    CHECK(f.is_zero() == false);
    CHECK(RatFunc(BigRat(0)).is_zero());
    CHECK(RatFunc(BigRat(5, 3)).is_constant());
    CHECK(RatFunc(BigRat(5, 3)).as_constant() == BigRat(5, 3));
    CHECK_THROWS(x.as_constant());

    // Normalization: common factors cancel.
    RatFunc g(PolyQ{BigRat(0), BigRat(2), BigRat(2)}, PolyQ{BigRat(0), BigRat(2)});
    CHECK(g == one + x);

    // Zero denominator rejected.
    CHECK_THROWS(RatFunc(PolyQ::var(), PolyQ{}));

    CHECK(f.eval(BigRat(3)) == BigRat(-1, 2));
    CHECK_THROWS(f.eval(BigRat(1)));  // pole

    // d/dy [1/(1-y)] = 1/(1-y)^2.
    CHECK(f.derivative() == f * f);

    // y -> y^2 and y -> 1/y substitutions.
    RatFunc h = x / (one - x);
    CHECK(h.subst_pow(2) == (x * x) / (one - x * x));
    CHECK(h.subst_inv() == one / (x - one));
}

TEST_CASE("two-variable polynomials") {
    RatFunc c1(PolyQ{BigRat(1)}, y_minus_1());  // 1/(y-1)
    TwistedPoly f = TwistedPoly::x_monomial(2, c1) + TwistedPoly(RatFunc(BigRat(3)));
    CHECK(f.xdegree() == 2);
    CHECK(f.coeff(0) == RatFunc(BigRat(3)));
    CHECK(f.coeff(1).is_zero());
    CHECK(f.coeff(2) == c1);

    // x -> 2x + 1 expands binomially.
    TwistedPoly g = f.subst_x_affine(BigRat(2), BigRat(1));
    CHECK(g.coeff(2) == RatFunc(BigRat(4)) * c1);
    CHECK(g.coeff(1) == RatFunc(BigRat(4)) * c1);
    CHECK(g.coeff(0) == RatFunc(BigRat(3)) + c1);

    // Partial and full evaluation agree.
    CHECK(f.eval_x(BigRat(2)).eval(BigRat(3)) == f.eval(BigRat(2), BigRat(3)));
    CHECK(f.eval(BigRat(2), BigRat(3)) == BigRat(3) + BigRat(4, 2));

    // y substitutions distribute over coefficients.
    CHECK(f.subst_y_pow(3).coeff(2) ==
          RatFunc(PolyQ{BigRat(1)}, PolyQ{BigRat(-1), BigRat(0), BigRat(0), BigRat(1)}));
    CHECK(f.subst_y_inv().coeff(2) == c1.subst_inv());

    CHECK((f - f).is_zero());
    CHECK((f * TwistedPoly(RatFunc(BigRat(1)))) == f);
}

TEST_CASE("truncated series") {
    // Geometric: (1 - t)^-1 = 1 + t + t^2 + ... exactly to the order.
    int order = 6;
    TruncSeries one_minus_t(order);
    one_minus_t.set_coeff(0, TwistedPoly(RatFunc(BigRat(1))));
    one_minus_t.set_coeff(1, TwistedPoly(RatFunc(BigRat(-1))));
    TruncSeries inv = one_minus_t.inverse();
    for (int j = 0; j <= order; ++j)
        CHECK(inv.coeff(j) == TwistedPoly(RatFunc(BigRat(1))));
    // Inverse is two-sided to truncation.
    TruncSeries prod = inv * one_minus_t;
    CHECK(prod.coeff(0) == TwistedPoly(RatFunc(BigRat(1))));
    for (int j = 1; j <= order; ++j) CHECK(prod.coeff(j).is_zero());

    // t^0 coefficient must be a nonzero constant in x.
    TruncSeries bad(2);
    CHECK_THROWS(bad.inverse());
    bad.set_coeff(0, TwistedPoly::x_monomial(1, RatFunc(BigRat(1))));
    CHECK_THROWS(bad.inverse());
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == PolyQ{BigRat(-1), BigRat(1)});
    CHECK(cyclotomic_poly(2) == PolyQ{BigRat(1), BigRat(1)});
    CHECK(cyclotomic_poly(6) == PolyQ{BigRat(1), BigRat(-1), BigRat(1)});
    CHECK(cyclotomic_poly(5) ==
          PolyQ{BigRat(1), BigRat(1), BigRat(1), BigRat(1), BigRat(1)});
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(30) == 8);

    // prod_{d | n} Phi_d = y^n - 1 for every n <= 30.
    for (long n = 1; n <= 30; ++n) {
        PolyQ prod = PolyQ::constant(BigRat(1));
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic_poly(d);
        PolyQ target = PolyQ::monomial(static_cast<int>(n), BigRat(1)) -
                       PolyQ::constant(BigRat(1));
        CHECK(prod == target);
    }
}

TEST_CASE("cyclotomic field arithmetic") {
    CyclotomicField f3(3);
    CHECK(f3.degree() == 2);
    CycloElt y = f3.generator();
    // y^3 = 1 and 1 + y + y^2 = 0 in Q[y]/Phi_3.
    CHECK(f3.is_zero(f3.sub(f3.pow(y, 3), f3.element(BigRat(1)))));
    CHECK(f3.is_zero(f3.add(f3.add(f3.element(BigRat(1)), y), f3.mul(y, y))));
    CHECK(f3.trace(y) == BigRat(-1));
    CHECK(f3.trace(f3.element(BigRat(1))) == BigRat(2));  // phi(3) = 2

    CyclotomicField f4(4);
    CHECK(f4.trace(f4.element(BigRat(1))) == BigRat(2));
    // y^-1 = -y since y^2 = -1.
    CycloElt inv_y = f4.inv(f4.generator());
    CHECK(f4.is_zero(f4.sub(inv_y, f4.neg(f4.generator()))));
    CHECK(f4.is_zero(f4.sub(f4.pow(f4.generator(), -1), inv_y)));

    CyclotomicField f2(2);
    CHECK(f2.trace(f2.generator()) == BigRat(-1));  // y = -1
    // y + 1 = 0 in Q[y]/Phi_2: not invertible.
    CHECK_THROWS(f2.inv(f2.element(PolyQ{BigRat(1), BigRat(1)})));

    // Trace is Q-linear: trace(2a + b/3) = 2 trace(a) + trace(b)/3.
    CyclotomicField f6(6);
    CycloElt a = f6.element(PolyQ{BigRat(1), BigRat(2)});
    CycloElt b = f6.element(PolyQ{BigRat(0), BigRat(-5)});
    CycloElt comb = f6.add(f6.mul(f6.element(BigRat(2)), a),
                           f6.mul(f6.element(BigRat(1, 3)), b));
    CHECK(f6.trace(comb) == BigRat(2) * f6.trace(a) + BigRat(1, 3) * f6.trace(b));

    // Evaluating a rational function at the generator: 1/(y^5 - 1) in Q(zeta_3)
    // equals the reduced inverse of y^2 - 1 (since y^5 = y^2).
    RatFunc g(PolyQ{BigRat(1)},
              PolyQ{BigRat(-1), BigRat(0), BigRat(0), BigRat(0), BigRat(0), BigRat(1)});
    CycloElt val = f3.eval(g);
    CycloElt direct = f3.inv(f3.sub(f3.pow(f3.generator(), 5), f3.element(BigRat(1))));
    CHECK(f3.is_zero(f3.sub(val, direct)));

    // Denominator vanishing in the field is an error: 1/(y^3 - 1) at zeta_3.
    RatFunc bad(PolyQ{BigRat(1)},
                PolyQ{BigRat(-1), BigRat(0), BigRat(0), BigRat(1)});
    CHECK_THROWS(f3.eval(bad));

    // Extended gcd certificate.
    PolyQ s, t;
    PolyQ g1{BigRat(-1), BigRat(0), BigRat(1)};      // y^2 - 1
    PolyQ g2{BigRat(0), BigRat(0), BigRat(0), BigRat(1)};  // y^3
    PolyQ d = poly_egcd(g1, g2, s, t);
    CHECK(s * g1 + t * g2 == d);
    CHECK(d.leading() == BigRat(1));
}
