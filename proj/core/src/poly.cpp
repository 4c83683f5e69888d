#include "tbm/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace tbm {

void PolyQ::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyQ PolyQ::constant(const BigRat& c) {
    PolyQ f;
    if (!c.is_zero()) f.c_.push_back(c);
    return f;
}

PolyQ PolyQ::monomial(int degree, const BigRat& c) {
    if (degree < 0) throw std::invalid_argument("PolyQ::monomial: negative degree");
    PolyQ f;
    if (!c.is_zero()) {
        f.c_.assign(static_cast<size_t>(degree) + 1, BigRat(0));
        f.c_.back() = c;
    }
    return f;
}

PolyQ PolyQ::var() {
    return monomial(1, BigRat(1));
}

const BigRat& PolyQ::leading() const {
    if (is_zero()) throw std::domain_error("PolyQ: zero polynomial has no leading coefficient");
    return c_.back();
}

BigRat PolyQ::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return BigRat(0);
    return c_[static_cast<size_t>(i)];
}

PolyQ PolyQ::operator-() const {
    PolyQ r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    PolyQ r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigRat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) {
    return a + (-b);
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    PolyQ r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigRat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

PolyQ PolyQ::scaled(const BigRat& c) const {
    if (c.is_zero()) return PolyQ();
    PolyQ r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

PolyQ PolyQ::pow(unsigned e) const {
    PolyQ r = constant(BigRat(1));
    PolyQ base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

void PolyQ::divrem(const PolyQ& num, const PolyQ& den, PolyQ& quot, PolyQ& rem) {
    if (den.is_zero()) throw std::domain_error("PolyQ::divrem: division by zero polynomial");
    quot = PolyQ();
    rem = num;
    if (num.degree() < den.degree()) return;
    std::vector<BigRat> q(static_cast<size_t>(num.degree() - den.degree()) + 1, BigRat(0));
    std::vector<BigRat> r = num.c_;
    const BigRat lc_inv = den.leading().inverse();
    for (int i = num.degree(); i >= den.degree(); --i) {
        BigRat& top = r[static_cast<size_t>(i)];
        if (top.is_zero()) continue;
        BigRat f = top * lc_inv;
        q[static_cast<size_t>(i - den.degree())] = f;
        for (int j = 0; j <= den.degree(); ++j)
            r[static_cast<size_t>(i - den.degree() + j)] -= f * den.c_[static_cast<size_t>(j)];
    }
    quot = PolyQ(std::move(q));
    rem = PolyQ(std::move(r));
}

PolyQ PolyQ::divexact(const PolyQ& den) const {
    PolyQ q, r;
    divrem(*this, den, q, r);
    if (!r.is_zero()) throw std::domain_error("PolyQ::divexact: division is not exact");
    return q;
}

namespace {

// Integer polynomial helpers for the primitive PRS gcd.
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly to_primitive_z(const PolyQ& f) {
    mpz_class den_lcm = 1;
    for (const auto& c : f.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    ZPoly g(f.coeffs().size());
    mpz_class content = 0;
    for (size_t i = 0; i < g.size(); ++i) {
        g[i] = f.coeffs()[i].numerator() * (den_lcm / f.coeffs()[i].denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), g[i].get_mpz_t());
    }
    if (content > 1)
        for (auto& c : g) c /= content;
    ztrim(g);
    return g;
}

void make_primitive(ZPoly& f) {
    ztrim(f);
    if (f.empty()) return;
    mpz_class content = 0;
    for (const auto& c : f)
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1)
        for (auto& c : f) c /= content;
    if (f.back() < 0)
        for (auto& c : f) c = -c;
}

// Pseudo-remainder of a by b over Z (b nonzero, deg a >= deg b).
ZPoly zprem(ZPoly a, const ZPoly& b) {
    const mpz_class& lcb = b.back();
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        int da = static_cast<int>(a.size()) - 1;
        mpz_class top = a.back();
        for (auto& c : a) c *= lcb;
        for (int j = 0; j <= db; ++j)
            a[static_cast<size_t>(da - db + j)] -= top * b[static_cast<size_t>(j)];
        ztrim(a);
        if (a.empty()) break;
    }
    return a;
}

} // namespace

PolyQ PolyQ::gcd(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() && b.is_zero()) return PolyQ();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    ZPoly f = to_primitive_z(a);
    ZPoly g = to_primitive_z(b);
    if (f.size() < g.size()) std::swap(f, g);
    while (!g.empty()) {
        ZPoly r = zprem(f, g);
        make_primitive(r);
        f = std::move(g);
        g = std::move(r);
    }
    std::vector<BigRat> coeffs(f.size());
    for (size_t i = 0; i < f.size(); ++i) coeffs[i] = BigRat(f[i]);
    return PolyQ(std::move(coeffs)).monic();
}

PolyQ PolyQ::derivative() const {
    if (degree() < 1) return PolyQ();
    std::vector<BigRat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * BigRat(static_cast<long>(i));
    return PolyQ(std::move(d));
}

BigRat PolyQ::eval(const BigRat& x) const {
    BigRat r(0);
    for (size_t i = c_.size(); i-- > 0;)
        r = r * x + c_[i];
    return r;
}

PolyQ PolyQ::stretch(int m) const {
    if (m < 1) throw std::invalid_argument("PolyQ::stretch: m must be >= 1");
    if (m == 1 || is_zero()) return *this;
    std::vector<BigRat> s(static_cast<size_t>(degree()) * static_cast<size_t>(m) + 1,
                          BigRat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        s[i * static_cast<size_t>(m)] = c_[i];
    return PolyQ(std::move(s));
}

PolyQ PolyQ::monic() const {
    if (is_zero()) throw std::domain_error("PolyQ::monic: zero polynomial");
    return scaled(leading().inverse());
}

bool PolyQ::is_integral() const {
    for (const auto& c : c_)
        if (!c.is_integer()) return false;
    return true;
}

std::string PolyQ::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigRat& c = c_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        BigRat abs = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit_coeff = (abs == BigRat(1));
        if (i == 0) {
            os << abs.str();
        } else {
            if (!unit_coeff) os << abs.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PolyQ& f) {
    return os << f.str();
}

} // namespace tbm
