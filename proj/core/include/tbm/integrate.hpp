#pragma once

// Riemann-sum integration of monomials x^r against the p-adic measures,
// over Z_p or its unit group: exact rational partial sums, a fast modular
// evaluation path with certified p-adic precision, closed-form moments,
// convergence certification by valuation growth, the moment index-shift
// identity, and p-adic zeta special values with their regularized-measure
// approximations.

#include "tbm/measures.hpp"
#include "tbm/padic.hpp"

#include <optional>
#include <utility>

namespace tbm {

// ZpStar restricts every sum to representatives coprime to p.
enum class Domain { Zp, ZpStar };

std::string domain_name(Domain d);

// S_N = sum_a a^r mu(a + (p^N)) over 0 <= a < p^N, restricted to units for
// ZpStar.  Exact rational arithmetic throughout.  Negative r is admitted
// only over ZpStar (a^r is then the exact rational 1/a^{|r|}).
BigRat riemann_sum(const MeasureSpec& spec, long r, Domain domain, long p, int N,
                   int threads = 1);

// Integrand c_1 x^{r_1} + ... + c_m x^{r_m} summed against the measure in a
// single scan (independent of the monomial-by-monomial route, which it must
// match exactly by linearity).
BigRat riemann_sum_linear(const MeasureSpec& spec,
                          const std::vector<std::pair<BigRat, long>>& integrand,
                          Domain domain, long p, int N, int threads = 1);

// The same sum evaluated modulo p^{M+guard} so that p^N-term sums never
// build giant exact integers.  The result carries at least M certified
// digits; `guard` = 0 selects the default max(M/2, 2), and on internal
// cancellation the guard doubles for up to five retries before
// precision_exhausted is thrown.  A sum indistinguishable from zero at the
// certified window is returned as the exact zero.
PadicApprox riemann_sum_fast(const MeasureSpec& spec, long r, Domain domain, long p,
                             int N, const PadicContext& ctx, int guard = 0,
                             int threads = 1);

// Limit of the Riemann sums of x^r against the twisted measure mu_{k,z}:
//   over Z_p:    (k/(r+k)) beta_{r+k}(z)
//   over Z_p^*:  (k/(r+k)) (beta_{r+k}(z) - p^{r+k-1} beta_{r+k}(z^p))
// Requires k >= 1, r >= 0, val_p(z-1) <= 0.
BigRat closed_form_moment(int k, long r, const BigRat& z, Domain domain, long p);

enum class SumMode { Exact, Fast };

struct ConvergenceOptions {
    int N_begin = 1;
    int N_max = 8;
    std::optional<BigRat> limit;   // claimed limit, when one is known
    long threshold = 6;            // required valuation of S_N - limit
    SumMode mode = SumMode::Exact;
    int precision = 14;            // certified digits for fast-mode sums
    bool stop_at_threshold = true; // stop scanning once the threshold is met
    int threads = 1;
};

struct ConvergenceReport {
    std::vector<int> levels;
    std::vector<BigRat> sums;              // exact sums (fast mode: representatives)
    std::vector<std::string> sum_display;  // exact: "n/d"; fast: p-adic form
    std::vector<Valuation> diff_valuations;   // val_p(S_{N+1} - S_N), aligned to levels[0..]
    std::optional<BigRat> limit_claim;
    std::vector<Valuation> limit_valuations;  // val_p(S_N - limit); empty without a limit
    long threshold = 6;
    SumMode mode = SumMode::Exact;
    // Last limit valuation (diff valuation when no limit is claimed)
    // reached the threshold.
    bool threshold_reached = false;
    // limit_valuations never decrease across the scanned levels.
    bool limit_vals_nondecreasing = false;
    // diff_valuations strictly increase across the scanned levels (the
    // Cauchy certificate used when no closed form exists).
    bool diffs_strictly_increasing = false;
};

// Scans S_N for N = N_begin..N_max recording valuation growth toward the
// claimed limit (or the Cauchy differences when no limit is given).
ConvergenceReport check_convergence(const MeasureSpec& spec, long r, Domain domain,
                                    long p, const ConvergenceOptions& opt = {});

// Moment index shift: integrating x^r against mu_{k,z} equals k times the
// x^{r+k-1} moment of mu_{1,z}; exact verdict at closed-form level.
bool check_index_shift(int k, long r, const BigRat& z, Domain domain, long p);

struct IndexShiftReport {
    bool closed_form_equal = false;
    std::vector<int> levels;
    std::vector<Valuation> level_valuations;  // val_p(S^{(k)}_N - k S^{(1)}_N)
};

// Closed-form verdict plus finite-level agreement of the two Riemann sums.
IndexShiftReport index_shift_report(int k, long r, const BigRat& z, Domain domain,
                                    long p, int N_begin, int N_max, int threads = 1);

// zeta_p(1-k) = (1 - p^{k-1}) (-B_k / k) for k >= 1.
BigRat zeta_p(int k, long p);

struct ZetaReport {
    int k = 0;
    long p = 0;
    BigRat alpha;
    BigRat exact;  // zeta_p(1-k)
    std::vector<int> levels;
    // (1/(alpha^{-k}-1)) * sum of x^{k-1} against mu_{B,1,alpha} over units.
    std::vector<BigRat> moment_route;
    // (1/(k(alpha^{-k}-1))) * mass of mu_{B,k,alpha} on the units.
    std::vector<BigRat> mass_route;
    std::vector<Valuation> moment_valuations;  // val_p(route - exact)
    std::vector<Valuation> mass_valuations;
    long threshold = 4;
    bool threshold_reached = false;  // both routes reach the threshold
};

// Compares zeta_p(1-k) against both regularized-measure expressions at
// levels 1..N_max.  Requires k >= 1, alpha a p-adic unit with alpha^k != 1.
ZetaReport check_zeta_triple(int k, long p, const BigRat& alpha, int N_max,
                             long threshold = 4, int threads = 1);

} // namespace tbm
