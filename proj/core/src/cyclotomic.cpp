#include "tbm/cyclotomic.hpp"

#include <stdexcept>

namespace tbm {

PolyQ cyclotomic_poly(long d) {
    if (d < 1) throw std::invalid_argument("cyclotomic_poly: d must be >= 1");
    // Phi_d = (y^d - 1) / prod_{e | d, e < d} Phi_e, built bottom-up.
    std::vector<PolyQ> phi(static_cast<size_t>(d) + 1);
    for (long m = 1; m <= d; ++m) {
        if (d % m != 0) continue;
        std::vector<BigRat> c(static_cast<size_t>(m) + 1, BigRat(0));
        c[0] = BigRat(-1);
        c[static_cast<size_t>(m)] = BigRat(1);
        PolyQ f(std::move(c));
        for (long e = 1; e < m; ++e)
            if (m % e == 0) f = f.divexact(phi[static_cast<size_t>(e)]);
        phi[static_cast<size_t>(m)] = f;
    }
    return phi[static_cast<size_t>(d)];
}

long euler_phi(long d) {
    if (d < 1) throw std::invalid_argument("euler_phi: d must be >= 1");
    long result = d;
    long n = d;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        while (n % q == 0) n /= q;
        result -= result / q;
    }
    if (n > 1) result -= result / n;
    return result;
}

PolyQ poly_egcd(const PolyQ& a, const PolyQ& b, PolyQ& s, PolyQ& t) {
    // Standard extended Euclid over Q[y] with a final monic normalization.
    PolyQ r0 = a, r1 = b;
    PolyQ s0 = PolyQ::constant(BigRat(1)), s1;
    PolyQ t0, t1 = PolyQ::constant(BigRat(1));
    while (!r1.is_zero()) {
        PolyQ q, r;
        PolyQ::divrem(r0, r1, q, r);
        PolyQ s2 = s0 - q * s1;
        PolyQ t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        s = PolyQ();
        t = PolyQ();
        return PolyQ();
    }
    BigRat lc_inv = r0.leading().inverse();
    s = s0.scaled(lc_inv);
    t = t0.scaled(lc_inv);
    return r0.scaled(lc_inv);
}

CyclotomicField::CyclotomicField(long d) : d_(d), phi_(cyclotomic_poly(d)) {}

void CyclotomicField::check(const CycloElt& a) const {
    if (a.d != d_)
        throw std::invalid_argument("CyclotomicField: element from a different field");
}

CycloElt CyclotomicField::element(const PolyQ& f) const {
    PolyQ q, r;
    PolyQ::divrem(f, phi_, q, r);
    return CycloElt{d_, std::move(r)};
}

CycloElt CyclotomicField::add(const CycloElt& a, const CycloElt& b) const {
    check(a); check(b);
    return CycloElt{d_, a.rep + b.rep};
}

CycloElt CyclotomicField::sub(const CycloElt& a, const CycloElt& b) const {
    check(a); check(b);
    return CycloElt{d_, a.rep - b.rep};
}

CycloElt CyclotomicField::mul(const CycloElt& a, const CycloElt& b) const {
    check(a); check(b);
    return element(a.rep * b.rep);
}

CycloElt CyclotomicField::neg(const CycloElt& a) const {
    check(a);
    return CycloElt{d_, -a.rep};
}

CycloElt CyclotomicField::pow(const CycloElt& a, long e) const {
    check(a);
    CycloElt base = e < 0 ? inv(a) : a;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1UL
                            : static_cast<unsigned long>(e);
    CycloElt r = element(BigRat(1));
    while (n > 0) {
        if (n & 1UL) r = mul(r, base);
        base = mul(base, base);
        n >>= 1UL;
    }
    return r;
}

CycloElt CyclotomicField::inv(const CycloElt& a) const {
    check(a);
    if (a.rep.is_zero()) throw std::domain_error("CyclotomicField::inv: zero element");
    PolyQ s, t;
    PolyQ g = poly_egcd(a.rep, phi_, s, t);
    if (g.degree() != 0)
        throw std::domain_error("CyclotomicField::inv: element not invertible");
    // s * a + t * Phi = 1, so s is the inverse mod Phi.
    return element(s);
}

BigRat CyclotomicField::trace(const CycloElt& a) const {
    check(a);
    BigRat tr(0);
    CycloElt col = a;
    const long n = degree();
    for (long j = 0; j < n; ++j) {
        // col = a * y^j reduced mod Phi; its y^j coefficient is the j-th
        // diagonal entry of the multiplication matrix.
        tr += col.rep.coeff(static_cast<int>(j));
        if (j + 1 < n) col = mul(col, generator());
    }
    return tr;
}

CycloElt CyclotomicField::eval_poly(const PolyQ& f, const CycloElt& at) const {
    check(at);
    CycloElt acc = element(BigRat(0));
    for (int i = f.degree(); i >= 0; --i) {
        acc = mul(acc, at);
        acc = add(acc, element(f.coeff(i)));
    }
    return acc;
}

CycloElt CyclotomicField::eval_ratfunc(const RatFunc& f, const CycloElt& at) const {
    CycloElt num = eval_poly(f.num(), at);
    CycloElt den = eval_poly(f.den(), at);
    if (den.rep.is_zero())
        throw std::domain_error("CyclotomicField::eval_ratfunc: denominator vanishes");
    return mul(num, inv(den));
}

CycloElt CyclotomicField::eval(const RatFunc& f) const {
    return eval_ratfunc(f, generator());
}

} // namespace tbm
