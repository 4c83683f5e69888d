#pragma once

// Polynomials in x whose coefficients are rational functions of y — the
// natural home of the twisted Bernoulli polynomials.  Stored dense by
// ascending x-degree with no trailing zero coefficients.

#include "tbm/ratfunc.hpp"

#include <string>
#include <vector>

namespace tbm {

class TwistedPoly {
public:
    TwistedPoly() = default;
    explicit TwistedPoly(std::vector<RatFunc> ascending) : c_(std::move(ascending)) { trim(); }
    explicit TwistedPoly(const RatFunc& constant) : c_{constant} { trim(); }

    static TwistedPoly x_monomial(int degree, const RatFunc& c);

    int xdegree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    RatFunc coeff(int i) const;
    const std::vector<RatFunc>& coeffs() const { return c_; }

    TwistedPoly operator-() const;
    friend TwistedPoly operator+(const TwistedPoly& a, const TwistedPoly& b);
    friend TwistedPoly operator-(const TwistedPoly& a, const TwistedPoly& b);
    friend TwistedPoly operator*(const TwistedPoly& a, const TwistedPoly& b);
    TwistedPoly scaled(const RatFunc& c) const;

    friend bool operator==(const TwistedPoly& a, const TwistedPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TwistedPoly& a, const TwistedPoly& b) { return !(a == b); }

    // x -> alpha*x + gamma, expanded binomially.
    TwistedPoly subst_x_affine(const BigRat& alpha, const BigRat& gamma) const;
    // y -> y^m applied to every coefficient.
    TwistedPoly subst_y_pow(int m) const;
    // y -> 1/y applied to every coefficient.
    TwistedPoly subst_y_inv() const;

    // Partial evaluations.
    RatFunc eval_x(const BigRat& x) const;
    BigRat eval(const BigRat& x, const BigRat& y) const;

    std::string str() const;  // e.g. "((-2*y)/(y - 1)^2) + (...)*x"

private:
    void trim();
    std::vector<RatFunc> c_;
};

std::ostream& operator<<(std::ostream& os, const TwistedPoly& f);

} // namespace tbm
