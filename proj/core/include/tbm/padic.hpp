#pragma once

// Finite-precision p-adic numbers with certified digit counts.  A nonzero
// value is stored as p^v * u with u a unit known modulo p^digits; every
// operation propagates how many digits of the result are guaranteed, and
// addition whose certified digits cancel entirely throws
// precision_exhausted rather than inventing a valuation.

#include "tbm/errors.hpp"
#include "tbm/rational.hpp"

#include <string>

namespace tbm {

class PadicContext {
public:
    // p must be prime (checked deterministically), precision >= 1.
    PadicContext(const mpz_class& p, int precision);

    const mpz_class& p() const { return p_; }
    int precision() const { return m_; }
    const mpz_class& p_pow_precision() const { return pm_; }

    long p_long() const;  // error if p does not fit in long

    friend bool operator==(const PadicContext& a, const PadicContext& b) {
        return a.p_ == b.p_ && a.m_ == b.m_;
    }
    friend bool operator!=(const PadicContext& a, const PadicContext& b) {
        return !(a == b);
    }

private:
    mpz_class p_;
    int m_;
    mpz_class pm_;
};

class PadicApprox {
public:
    // The exact value zero (infinite valuation).
    static PadicApprox zero(const PadicContext& ctx);

    // Exact embedding of a rational; all ctx.precision() digits guaranteed.
    static PadicApprox from_rational(const BigRat& q, const PadicContext& ctx);

    // Nonzero value p^v * u with the given number of guaranteed digits.
    static PadicApprox make(const PadicContext& ctx, long v, const mpz_class& u,
                            int digits);

    const PadicContext& context() const { return ctx_; }
    bool is_zero() const { return zero_; }
    Valuation valuation() const;
    // Unit part reduced modulo p^digits (error on zero).
    mpz_class unit() const;
    int digits() const;           // guaranteed digits of the unit (error on zero)
    long abs_precision() const;   // valuation + digits (error on zero)

    // Exact rational p^v * u representing this approximation class.
    BigRat rational_rep() const;

    PadicApprox neg() const;
    PadicApprox add(const PadicApprox& o) const;
    PadicApprox sub(const PadicApprox& o) const;
    PadicApprox mul(const PadicApprox& o) const;
    PadicApprox inv() const;
    PadicApprox pow(long e) const;

    // True when both approximations agree modulo p^min(abs precision).
    bool agrees_with(const PadicApprox& o) const;

    // "p^v * u (mod p^e)" with e = valuation + guaranteed digits; "0" for zero.
    std::string str() const;

private:
    PadicApprox(const PadicContext& ctx) : ctx_(ctx), zero_(true), v_(0), u_(0), digits_(0) {}
    void check_same_context(const PadicApprox& o) const;

    PadicContext ctx_;
    bool zero_;
    long v_;
    mpz_class u_;   // stored modulo p^precision; certified only modulo p^digits_
    int digits_;
};

std::ostream& operator<<(std::ostream& os, const PadicApprox& x);

} // namespace tbm
