#include "tbm/twisted_poly.hpp"

#include <ostream>
#include <sstream>

namespace tbm {

void TwistedPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TwistedPoly TwistedPoly::x_monomial(int degree, const RatFunc& c) {
    if (degree < 0) throw std::invalid_argument("TwistedPoly::x_monomial: negative degree");
    TwistedPoly f;
    if (!c.is_zero()) {
        f.c_.assign(static_cast<size_t>(degree) + 1, RatFunc());
        f.c_.back() = c;
    }
    return f;
}

RatFunc TwistedPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return RatFunc();
    return c_[static_cast<size_t>(i)];
}

TwistedPoly TwistedPoly::operator-() const {
    TwistedPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

TwistedPoly operator+(const TwistedPoly& a, const TwistedPoly& b) {
    TwistedPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), RatFunc());
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

TwistedPoly operator-(const TwistedPoly& a, const TwistedPoly& b) {
    return a + (-b);
}

TwistedPoly operator*(const TwistedPoly& a, const TwistedPoly& b) {
    if (a.is_zero() || b.is_zero()) return TwistedPoly();
    TwistedPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, RatFunc());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

TwistedPoly TwistedPoly::scaled(const RatFunc& c) const {
    if (c.is_zero()) return TwistedPoly();
    TwistedPoly r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

TwistedPoly TwistedPoly::subst_x_affine(const BigRat& alpha, const BigRat& gamma) const {
    // (alpha*x + gamma)^j expanded with running binomial coefficients.
    TwistedPoly result;
    for (int j = 0; j <= xdegree(); ++j) {
        const RatFunc& cj = c_[static_cast<size_t>(j)];
        if (cj.is_zero()) continue;
        BigRat binom(1);
        std::vector<RatFunc> term(static_cast<size_t>(j) + 1, RatFunc());
        for (int m = j; m >= 0; --m) {
            // binom = C(j, m) at loop entry for m descending from j.
            BigRat scalar = binom * alpha.pow(m) * gamma.pow(j - m);
            term[static_cast<size_t>(m)] = cj * RatFunc(scalar);
            if (m > 0)
                binom *= BigRat(static_cast<long>(m), static_cast<long>(j - m + 1));
        }
        result = result + TwistedPoly(std::move(term));
    }
    return result;
}

TwistedPoly TwistedPoly::subst_y_pow(int m) const {
    TwistedPoly r = *this;
    for (auto& c : r.c_) c = c.subst_pow(m);
    return r;
}

TwistedPoly TwistedPoly::subst_y_inv() const {
    TwistedPoly r = *this;
    for (auto& c : r.c_) c = c.subst_inv();
    r.trim();
    return r;
}

RatFunc TwistedPoly::eval_x(const BigRat& x) const {
    RatFunc r;
    for (size_t i = c_.size(); i-- > 0;)
        r = r * RatFunc(x) + c_[i];
    return r;
}

BigRat TwistedPoly::eval(const BigRat& x, const BigRat& y) const {
    BigRat r(0);
    for (size_t i = c_.size(); i-- > 0;)
        r = r * x + c_[i].eval(y);
    return r;
}

std::string TwistedPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= xdegree(); ++i) {
        const RatFunc& c = c_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (i >= 1) {
            os << "*x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TwistedPoly& f) {
    return os << f.str();
}

} // namespace tbm
