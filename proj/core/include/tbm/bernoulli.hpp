#pragma once

// Classical Bernoulli numbers/polynomials and the twisted family
// beta_k(x, y): the coefficient of t^k/k! in t*e^{xt}/(y*e^t - 1).
// Rows are produced by a triangular recurrence in closed form over Q(y);
// an independent generating-function expansion is provided as a
// cross-check, together with exact verifiers for the identities the
// family satisfies (forward difference, decomposition, symmetry,
// addition, inversion) and for the integrality structure of the
// numerators.

#include "tbm/series.hpp"
#include "tbm/twisted_poly.hpp"

#include <vector>

namespace tbm {

// C(n, r) as an exact rational (0 when r < 0 or r > n).
BigRat binomial(long n, long r);

BigRat factorial(long n);

// ---- classical Bernoulli numbers and polynomials ----

class BernoulliTable {
public:
    explicit BernoulliTable(int kmax);

    int kmax() const { return static_cast<int>(numbers_.size()) - 1; }
    const BigRat& number(int k) const;   // B_k (B_1 = -1/2)
    const PolyQ& poly(int k) const;      // B_k(x)

private:
    std::vector<BigRat> numbers_;
    std::vector<PolyQ> polys_;
};

BigRat bernoulli_number(int k);
PolyQ bernoulli_poly(int k);

// ---- the twisted family ----

// Solves the triangular system for row k with the given inhomogeneity
// h_k: f_{k,1} = h_k/(y-1), f_{k,i} = -y/(y-1) * sum_{j<i} f_{k,j} C(k-j, i-j),
// and returns sum_i f_{k,i} x^{k-i}.  Row 0 is the zero polynomial.
TwistedPoly solve_coefficients(int k, const BigRat& h_k);

// Rows 0..kmax, default inhomogeneity h(k) = k (the Bernoulli case).
class TwistedFamily {
public:
    explicit TwistedFamily(int kmax);
    TwistedFamily(int kmax, std::vector<BigRat> h);  // h[k] drives row k

    int kmax() const { return static_cast<int>(rows_.size()) - 1; }
    const BigRat& h(int k) const;
    const TwistedPoly& beta(int k) const;  // beta_k(x, y)
    RatFunc number(int k) const;           // beta_k(y) = beta_k(0, y)
    RatFunc f(int k, int i) const;         // coefficient of x^{k-i}

private:
    std::vector<BigRat> h_;
    std::vector<TwistedPoly> rows_;
};

// beta_k(x, y) with h(k) = k.
TwistedPoly twisted_bernoulli(int k);
// beta_k(y) = beta_k(0, y).
RatFunc twisted_bernoulli_number(int k);

// Independent construction of beta_k by expanding t*e^{xt}/(y*e^t - 1)
// as a truncated series; requires order >= k.
TwistedPoly twisted_bernoulli_gf(int k, int order);

// ---- exact identity checks ----

// y*f(x+1, y) - f(x, y) == h_k * x^{k-1}, k >= 1.
bool forward_difference_holds(const TwistedPoly& f, int k, const BigRat& h_k);
bool check_forward_difference(int k);

// f(x, y) == M^{k-1} * sum_{b=0}^{M-1} y^b f((x+b)/M, y^M), k >= 1, M >= 1.
bool decomposition_holds(const TwistedPoly& f, int k, int M);
bool check_decomposition(int k, int M);

// (-1)^k beta_k(x, 1/y) == y * beta_k(1-x, y).
bool check_symmetry(int k);

// beta_k(x + x', y) == sum_i C(k,i) x'^{k-i} beta_i(x, y), compared
// coefficientwise in x'.
bool check_addition(int k);

// beta_k(1/y) == (-1)^k beta_k(y) for k >= 2;
// beta_1(1/y) == -1 - beta_1(y).
bool check_inversion_numbers(int k);

// Structure of phi_{k,i} = f_{k,i} * (y-1)^i.
struct PhiReport {
    PolyQ phi;
    bool is_polynomial = false;      // (y-1)^i clears the denominator exactly
    bool integral_coeffs = false;    // integer coefficients (h_k integral)
    bool degree_bound_ok = false;    // deg <= i-1
    bool base_value_ok = false;      // phi(0) = 0 for i >= 2, = h_k for i = 1
    bool all_ok() const {
        return is_polynomial && integral_coeffs && degree_bound_ok && base_value_ok;
    }
};

PhiReport phi_structure(int k, int i, const BigRat& h_k);
PhiReport phi_structure(int k, int i);  // h(k) = k

// True when beta_k + perturbation violates the forward-difference identity
// or the M = 2 decomposition (the characterizing properties); the
// perturbation must be nonzero.
bool uniqueness_probe(int k, const TwistedPoly& perturbation);

} // namespace tbm
