#include "tbm/ratfunc.hpp"

#include <ostream>
#include <sstream>

namespace tbm {

RatFunc::RatFunc(PolyQ num, PolyQ den) {
    if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num.is_zero()) {
        num_ = PolyQ();
        den_ = PolyQ::constant(BigRat(1));
        return;
    }
    PolyQ g = PolyQ::gcd(num, den);
    if (g.degree() > 0) {
        num = num.divexact(g);
        den = den.divexact(g);
    }
    BigRat lc = den.leading();
    if (lc != BigRat(1)) {
        BigRat inv = lc.inverse();
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

BigRat RatFunc::as_constant() const {
    if (!is_constant() && !is_zero())
        throw std::domain_error("RatFunc: not a constant");
    if (is_zero()) return BigRat(0);
    return num_.coeff(0) / den_.coeff(0);
}

RatFunc RatFunc::operator-() const {
    return RatFunc(canonical_tag{}, -num_, den_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    // Classic gcd trick keeps the polynomials handed to the reducing
    // constructor as small as possible.
    PolyQ g = PolyQ::gcd(a.den_, b.den_);
    if (g.degree() == 0)
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    PolyQ da = a.den_.divexact(g);
    PolyQ db = b.den_.divexact(g);
    return RatFunc(a.num_ * db + b.num_ * da, a.den_ * db);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return a + (-b);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    // Cross-reduce before multiplying.
    PolyQ g1 = PolyQ::gcd(a.num_, b.den_);
    PolyQ g2 = PolyQ::gcd(b.num_, a.den_);
    PolyQ n1 = g1.degree() > 0 ? a.num_.divexact(g1) : a.num_;
    PolyQ d2 = g1.degree() > 0 ? b.den_.divexact(g1) : b.den_;
    PolyQ n2 = g2.degree() > 0 ? b.num_.divexact(g2) : b.num_;
    PolyQ d1 = g2.degree() > 0 ? a.den_.divexact(g2) : a.den_;
    return RatFunc(n1 * n2, d1 * d2);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    return a * b.inverse();
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0) return RatFunc(BigRat(1));
    RatFunc base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1UL
                            : static_cast<unsigned long>(e);
    // num and den are coprime, so powers need no re-reduction.
    return RatFunc(canonical_tag{}, base.num_.pow(static_cast<unsigned>(n)),
                   base.den_.pow(static_cast<unsigned>(n)));
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::subst_pow(int m) const {
    if (m < 1) throw std::invalid_argument("RatFunc::subst_pow: m must be >= 1");
    // gcd(f(y^m), g(y^m)) = gcd(f, g)(y^m), so stretching preserves the
    // canonical form and no reduction is needed.
    return RatFunc(canonical_tag{}, num_.stretch(m), den_.stretch(m));
}

RatFunc RatFunc::subst_inv() const {
    if (is_zero()) return RatFunc();
    // f(1/y) = y^{deg den - deg num} * rev(num)(y) / rev(den)(y), cleared of
    // any stray powers of y by the reducing constructor.
    std::vector<BigRat> rn(num_.coeffs().rbegin(), num_.coeffs().rend());
    std::vector<BigRat> rd(den_.coeffs().rbegin(), den_.coeffs().rend());
    PolyQ revn(std::move(rn));
    PolyQ revd(std::move(rd));
    int shift = den_.degree() - num_.degree();
    if (shift >= 0)
        return RatFunc(revn * PolyQ::monomial(shift, BigRat(1)), revd);
    return RatFunc(revn, revd * PolyQ::monomial(-shift, BigRat(1)));
}

BigRat RatFunc::eval(const BigRat& q) const {
    BigRat d = den_.eval(q);
    if (d.is_zero()) throw std::domain_error("RatFunc::eval: pole at the given point");
    return num_.eval(q) / d;
}

namespace {

// If f is a perfect power g^e (e >= 2) of a lower-degree polynomial,
// recover (g, e) via the squarefree part f / gcd(f, f').
bool perfect_power(const PolyQ& f, PolyQ& base, int& exp) {
    if (f.degree() < 2) return false;
    PolyQ g = PolyQ::gcd(f, f.derivative());
    if (g.degree() == 0) return false;
    PolyQ s = f.divexact(g).monic();
    if (s.degree() == 0 || f.degree() % s.degree() != 0) return false;
    int e = f.degree() / s.degree();
    if (e < 2) return false;
    if (s.pow(static_cast<unsigned>(e)) != f) return false;
    base = s;
    exp = e;
    return true;
}

} // namespace

std::string RatFunc::str(const std::string& var) const {
    if (den_.degree() == 0) return num_.str(var);
    std::ostringstream os;
    os << "(" << num_.str(var) << ")/";
    PolyQ base;
    int e = 0;
    if (perfect_power(den_, base, e))
        os << "(" << base.str(var) << ")^" << e;
    else
        os << "(" << den_.str(var) << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
    return os << f.str();
}

} // namespace tbm
