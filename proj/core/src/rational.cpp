#include "tbm/rational.hpp"

#include "tbm/errors.hpp"

#include <ostream>
#include <sstream>

namespace tbm {

static mpz_class mpz_from_ll(long long n) {
    mpz_class z;
    if (n >= std::numeric_limits<long>::min() && n <= std::numeric_limits<long>::max()) {
        z = static_cast<long>(n);
    } else {
        std::ostringstream os;
        os << n;
        z = mpz_class(os.str());
    }
    return z;
}

BigRat::BigRat(long long n) : v_(mpz_from_ll(n)) {}

BigRat::BigRat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("BigRat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

BigRat::BigRat(long long num, long long den)
    : BigRat(mpz_from_ll(num), mpz_from_ll(den)) {}

BigRat BigRat::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("BigRat::parse: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("BigRat::parse: bad rational '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("BigRat::parse: zero denominator");
    q.canonicalize();
    BigRat r;
    r.v_ = q;
    return r;
}

std::string BigRat::str() const {
    return v_.get_str();
}

BigRat& BigRat::operator/=(const BigRat& o) {
    if (o.is_zero()) throw std::domain_error("BigRat: division by zero");
    v_ /= o.v_;
    return *this;
}

BigRat BigRat::inverse() const {
    if (is_zero()) throw std::domain_error("BigRat: inverse of zero");
    return BigRat(denominator(), numerator());
}

BigRat BigRat::pow(long e) const {
    if (e == 0) return BigRat(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("BigRat: negative power of zero");
        return BigRat(0);
    }
    BigRat base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1UL
                            : static_cast<unsigned long>(e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), n);
    return BigRat(num, den);
}

std::ostream& operator<<(std::ostream& os, const BigRat& q) {
    return os << q.str();
}

long Valuation::value() const {
    if (infinite_) throw std::domain_error("Valuation: infinite has no finite value");
    return v_;
}

std::string Valuation::str() const {
    if (infinite_) return "inf";
    return std::to_string(v_);
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
    return os << v.str();
}

Valuation val_p(const mpz_class& n, const mpz_class& p) {
    if (p < 2) throw std::invalid_argument("val_p: p must be >= 2");
    if (n == 0) return Valuation::infinite();
    mpz_class m = n;
    long v = 0;
    mpz_class q, r;
    for (;;) {
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        m = q;
        ++v;
    }
    return Valuation::finite(v);
}

Valuation val_p(const BigRat& q, const mpz_class& p) {
    if (q.is_zero()) return Valuation::infinite();
    Valuation vn = val_p(q.numerator(), p);
    Valuation vd = val_p(q.denominator(), p);
    return Valuation::finite(vn.value() - vd.value());
}

BigRat norm_p(const BigRat& q, const mpz_class& p) {
    Valuation v = val_p(q, p);
    if (v.is_infinite()) return BigRat(0);
    return BigRat(p).pow(-v.value());
}

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    mpz_class d = 3;
    while (d * d <= n) {
        if (n % d == 0) return false;
        d += 2;
    }
    return true;
}

mpz_class pow_mod(const mpz_class& a, const mpz_class& e, const mpz_class& m) {
    if (e < 0) throw std::invalid_argument("pow_mod: negative exponent");
    if (m < 2) throw std::invalid_argument("pow_mod: modulus must be >= 2");
    mpz_class r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

mpz_class inv_mod(const mpz_class& a, const mpz_class& m) {
    if (m < 2) throw std::invalid_argument("inv_mod: modulus must be >= 2");
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("inv_mod: argument not invertible");
    return r;
}

mpz_class pow_ui(const mpz_class& p, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
    return r;
}

} // namespace tbm
