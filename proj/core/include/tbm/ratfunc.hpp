#pragma once

// Rational functions over Q in one variable, kept in canonical form:
// numerator and denominator coprime, denominator monic and nonzero.
// Equality of canonical forms is therefore coefficientwise.

#include "tbm/poly.hpp"

#include <string>

namespace tbm {

class RatFunc {
public:
    RatFunc() : num_(), den_(PolyQ::constant(BigRat(1))) {}
    RatFunc(const BigRat& c) : RatFunc(PolyQ::constant(c)) {}
    RatFunc(long c) : RatFunc(PolyQ::constant(BigRat(c))) {}
    explicit RatFunc(PolyQ num) : num_(std::move(num)), den_(PolyQ::constant(BigRat(1))) {}
    RatFunc(PolyQ num, PolyQ den);  // reduces to canonical form

    static RatFunc var() { return RatFunc(PolyQ::var()); }

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    BigRat as_constant() const;  // error if not constant

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inverse() const;        // error on zero
    RatFunc pow(long e) const;      // negative exponents invert

    RatFunc derivative() const;

    // y -> y^m for m >= 1 (canonical form is preserved by stretching).
    RatFunc subst_pow(int m) const;
    // y -> 1/y.
    RatFunc subst_inv() const;
    // y -> q; error when q is a pole.
    BigRat eval(const BigRat& q) const;

    // "(3*y^2 - 1)/(y - 1)^2"; perfect-power denominators print factored.
    std::string str(const std::string& var = "y") const;

private:
    struct canonical_tag {};
    RatFunc(canonical_tag, PolyQ num, PolyQ den)
        : num_(std::move(num)), den_(std::move(den)) {}

    PolyQ num_;
    PolyQ den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

} // namespace tbm
