#pragma once

// Cyclotomic polynomials and exact arithmetic in Q[y]/Phi_d(y), including
// field traces — enough to sum a rational function of y over the primitive
// d-th roots of unity without ever leaving Q.

#include "tbm/ratfunc.hpp"

#include <vector>

namespace tbm {

// The d-th cyclotomic polynomial (monic, integer coefficients), d >= 1.
PolyQ cyclotomic_poly(long d);

// Euler's totient, d >= 1.
long euler_phi(long d);

// Extended gcd over Q[y]: returns monic g = gcd(a, b) and s, t with
// s*a + t*b = g.
PolyQ poly_egcd(const PolyQ& a, const PolyQ& b, PolyQ& s, PolyQ& t);

// An element of Q[y]/Phi_d(y), stored as its reduced representative
// (degree < phi(d)).
struct CycloElt {
    long d = 1;
    PolyQ rep;
};

class CyclotomicField {
public:
    explicit CyclotomicField(long d);

    long d() const { return d_; }
    const PolyQ& modulus() const { return phi_; }
    long degree() const { return static_cast<long>(phi_.degree()); }

    CycloElt element(const PolyQ& f) const;   // reduce mod Phi_d
    CycloElt element(const BigRat& c) const { return element(PolyQ::constant(c)); }
    CycloElt generator() const { return element(PolyQ::var()); }

    CycloElt add(const CycloElt& a, const CycloElt& b) const;
    CycloElt sub(const CycloElt& a, const CycloElt& b) const;
    CycloElt mul(const CycloElt& a, const CycloElt& b) const;
    CycloElt neg(const CycloElt& a) const;
    CycloElt pow(const CycloElt& a, long e) const;  // negative exponents invert

    // Inverse via extended gcd; error when the element is zero (Phi_d is
    // irreducible over Q, so every nonzero element is invertible).
    CycloElt inv(const CycloElt& a) const;

    bool is_zero(const CycloElt& a) const { return a.rep.is_zero(); }

    // Field trace from Q(zeta_d) to Q, computed as the trace of the
    // multiplication-by-a matrix on the power basis 1, y, ..., y^{phi(d)-1}.
    BigRat trace(const CycloElt& a) const;

    // Horner evaluation of a polynomial at an arbitrary field element.
    CycloElt eval_poly(const PolyQ& f, const CycloElt& at) const;

    // Evaluate a rational function at a field element; errors if the
    // denominator vanishes there.
    CycloElt eval_ratfunc(const RatFunc& f, const CycloElt& at) const;

    // Evaluate a rational function at the residue class of y itself.
    CycloElt eval(const RatFunc& f) const;

private:
    void check(const CycloElt& a) const;
    long d_;
    PolyQ phi_;
};

} // namespace tbm
