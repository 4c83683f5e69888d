#pragma once

// Arbitrary-precision rational numbers (GMP-backed) together with p-adic
// valuation and absolute value.  BigRat is always stored in lowest terms
// with a positive denominator; equality is exact.

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>

namespace tbm {

class BigRat {
public:
    BigRat() : v_(0) {}
    BigRat(int n) : v_(n) {}
    BigRat(long n) : v_(static_cast<signed long>(n)) {}
    BigRat(long long n);
    explicit BigRat(const mpz_class& n) : v_(n) {}
    explicit BigRat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    BigRat(const mpz_class& num, const mpz_class& den);
    BigRat(long long num, long long den);

    // Accepts "n", "-n", "n/d" with optional sign on either part.
    static BigRat parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Prints "n" when the denominator is 1 and "n/d" otherwise.
    std::string str() const;

    BigRat operator-() const { BigRat r; r.v_ = -v_; return r; }
    BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
    BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
    BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
    BigRat& operator/=(const BigRat& o);

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRat& a, const BigRat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigRat& a, const BigRat& b) { return a.v_ >= b.v_; }

    BigRat inverse() const;

    // Integer power; negative exponents invert (error on zero base).
    BigRat pow(long e) const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigRat& q);

// p-adic valuation as an element of Z ∪ {+infinity}; +infinity is the
// valuation of zero and compares greater than every finite value.
class Valuation {
public:
    static Valuation infinite() { return Valuation(true, 0); }
    static Valuation finite(long v) { return Valuation(false, v); }

    bool is_infinite() const { return infinite_; }
    long value() const;  // error when infinite

    std::string str() const;

    friend bool operator==(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return a < b || a == b; }
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return b <= a; }

    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return infinite();
        return finite(a.v_ + b.v_);
    }

private:
    Valuation(bool inf, long v) : infinite_(inf), v_(v) {}
    bool infinite_;
    long v_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

// Exponent of p in n (error: p < 2 or p not prime is accepted here — only
// p >= 2 is checked — callers wanting prime checks use PadicContext).
Valuation val_p(const mpz_class& n, const mpz_class& p);
Valuation val_p(const BigRat& q, const mpz_class& p);

// |q|_p = p^{-val_p(q)} as an exact rational; |0|_p = 0.
BigRat norm_p(const BigRat& q, const mpz_class& p);

// Deterministic primality test (trial division; intended for word-sized p).
bool is_prime(const mpz_class& n);

// a^e mod m for e >= 0, m > 1.
mpz_class pow_mod(const mpz_class& a, const mpz_class& e, const mpz_class& m);

// Inverse of a modulo m; error when gcd(a, m) != 1.
mpz_class inv_mod(const mpz_class& a, const mpz_class& m);

// p^e for e >= 0.
mpz_class pow_ui(const mpz_class& p, unsigned long e);

} // namespace tbm
