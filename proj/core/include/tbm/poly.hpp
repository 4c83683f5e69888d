#pragma once

// Dense univariate polynomials over Q, stored by ascending degree with no
// trailing zero coefficients (the zero polynomial has an empty coefficient
// vector and degree -1).

#include "tbm/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace tbm {

class PolyQ {
public:
    PolyQ() = default;
    PolyQ(std::initializer_list<BigRat> ascending) : c_(ascending) { trim(); }
    explicit PolyQ(std::vector<BigRat> ascending) : c_(std::move(ascending)) { trim(); }

    static PolyQ constant(const BigRat& c);
    static PolyQ monomial(int degree, const BigRat& c);
    // The variable itself, i.e. monomial(1, 1).
    static PolyQ var();

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const BigRat& leading() const;
    BigRat coeff(int i) const;
    const std::vector<BigRat>& coeffs() const { return c_; }

    PolyQ operator-() const;
    friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    PolyQ scaled(const BigRat& c) const;
    PolyQ pow(unsigned e) const;

    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

    // Quotient and remainder with deg(rem) < deg(divisor); error on zero divisor.
    static void divrem(const PolyQ& num, const PolyQ& den, PolyQ& quot, PolyQ& rem);
    // Division known to be exact; error if a remainder appears.
    PolyQ divexact(const PolyQ& den) const;

    // Monic greatest common divisor (primitive pseudo-remainder sequence
    // over Z to keep intermediate coefficients small); gcd(0, 0) = 0.
    static PolyQ gcd(const PolyQ& a, const PolyQ& b);

    PolyQ derivative() const;
    BigRat eval(const BigRat& x) const;
    // Substitutes var -> var^m (coefficient stretch), m >= 1.
    PolyQ stretch(int m) const;
    PolyQ monic() const;  // error on zero

    // True when every coefficient is an integer.
    bool is_integral() const;

    // Human-readable form such as "3*y^2 - 1"; zero prints "0".
    std::string str(const std::string& var = "y") const;

private:
    void trim();
    std::vector<BigRat> c_;
};

std::ostream& operator<<(std::ostream& os, const PolyQ& f);

} // namespace tbm
