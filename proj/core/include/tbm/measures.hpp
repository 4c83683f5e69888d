#pragma once

// p-adic measures and distributions on compact open balls a + (p^N):
// the twisted Bernoulli measures, the (unbounded) Bernoulli distributions,
// their regularizations, and the geometric measure z^a/(1 - z^{p^N});
// plus additivity/boundedness verification and exact sums over nontrivial
// roots of unity evaluated through cyclotomic field traces.

#include "tbm/bernoulli.hpp"
#include "tbm/cyclotomic.hpp"

#include <map>
#include <string>

namespace tbm {

// A compact open ball a + (p^N) inside Z_p; N = 0 means all of Z_p.
struct Ball {
    long p = 2;
    int N = 0;
    long long a = 0;

    // Validates: p prime, N >= 0, 0 <= a < p^N (and p^N fits in 64 bits).
    static Ball make(long p, int N, long long a);
    long long modulus() const;  // p^N
};

// p^N as long long; throws on overflow.
long long pow_ll(long p, int N);

enum class MeasureFamily { TwistedBernoulli, BernoulliDist, RegBernoulli, Koblitz };

class MeasureSpec {
public:
    // mu_{k,z}(a + (p^N)) = p^{N(k-1)} z^a beta_k(a/p^N, z^{p^N}).
    static MeasureSpec twisted(int k, const BigRat& z);
    // mu_{B,k}(a + (p^N)) = p^{N(k-1)} B_k(a/p^N)  (a distribution, unbounded).
    static MeasureSpec bernoulli(int k);
    // mu_{B,k,alpha}(ball) = mu_{B,k}(ball) - alpha^{-k} mu_{B,k}(ball moved to {a*alpha}_N).
    static MeasureSpec regularized(int k, const BigRat& alpha);
    // mu_z(a + (p^N)) = z^a / (1 - z^{p^N}) = -mu_{1,z}.
    static MeasureSpec koblitz(const BigRat& z);

    MeasureFamily family() const { return family_; }
    int k() const { return k_; }
    const BigRat& z() const { return z_; }
    const BigRat& alpha() const { return alpha_; }

    // Checks the p-dependent preconditions: val_p(z-1) <= 0 for the twisted
    // and geometric families, val_p(alpha) = 0 for the regularized one.
    void validate(long p) const;

    std::string describe() const;

private:
    MeasureSpec(MeasureFamily f, int k, BigRat z, BigRat alpha);
    MeasureFamily family_;
    int k_;
    BigRat z_;
    BigRat alpha_;
};

// Residue in [0, p^N) of the product a*q for a rational q whose reduced
// denominator is coprime to p (denominator inverted mod p^N).
long long rational_residue(long long a, const BigRat& q, long long pN);

// Exact value of the measure on the ball.
BigRat measure_value(const MeasureSpec& spec, const Ball& ball);

// Caching evaluator for repeated calls (per-level twisted coefficients and
// the Bernoulli table are computed once).  Not thread-safe; use one
// instance per thread.
class MeasureEvaluator {
public:
    MeasureEvaluator();
    BigRat value(const MeasureSpec& spec, const Ball& ball);

private:
    struct LevelData {
        BigRat y;                   // z^{p^N}
        std::vector<BigRat> f;      // f_{k,i}(y), i = 1..k
    };
    const LevelData& level_data(int k, const BigRat& z, long p, int N);
    const TwistedPoly& row(int k);
    const PolyQ& bernoulli_row(int k);

    std::vector<TwistedPoly> rows_;
    std::vector<PolyQ> bern_;
    std::map<std::string, LevelData> levels_;
};

// mu(ball) = sum_{b<p} mu(refined ball) verified exactly, recursing
// `depth` levels down.
bool check_additivity(const MeasureSpec& spec, const Ball& ball, int depth);

struct BoundednessReport {
    Valuation min_valuation = Valuation::infinite();
    Ball argmin;                 // first ball attaining the minimum
    long long values_scanned = 0;
    bool bounded() const {
        return min_valuation.is_infinite() || min_valuation.value() >= 0;
    }
};

// Scans val_p(mu_{k,z}(a + (p^N))) over all 0 <= a < p^N, N <= N_max.
BoundednessReport boundedness_scan(int k, const BigRat& z, long p, int N_max,
                                   int threads = 1);

// Sum of mu_{k,zeta}(ball) over the c-th roots of unity zeta != 1, computed
// exactly as a sum of field traces over Q[y]/Phi_d for d | c, d > 1.
// Requires gcd(c, p) = 1; c = 1 gives the empty sum 0.
BigRat root_of_unity_measure_sum(long c, int k, const Ball& ball);

struct CycloIdentityReport {
    BigRat roots_sum;         // sum over nontrivial c-th roots of unity
    BigRat reg_negation;      // -mu_{B,k,1/c}(ball)
    BigRat scaled_roots_sum;  // c^{-k} * roots_sum
    bool unscaled_holds = false;   // roots_sum == reg_negation
    bool scaled_holds = false;     // scaled_roots_sum == reg_negation
};

// Tests both normalizations of the roots-of-unity identity against the
// regularized Bernoulli measure with alpha = 1/c.
CycloIdentityReport check_cyclotomic_identity(long c, int k, const Ball& ball);

} // namespace tbm
