#include "tbm/integrate.hpp"

#include "tbm/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tbm {

std::string domain_name(Domain d) {
    return d == Domain::Zp ? "zp" : "zpstar";
}

namespace {

bool include_rep(long long a, long p, Domain domain) {
    return domain == Domain::Zp || a % p != 0;
}

void check_sum_args(const MeasureSpec& spec, long r, Domain domain, long p, int N) {
    spec.validate(p);
    if (N < 0) throw std::invalid_argument("riemann_sum: N must be >= 0");
    if (r < 0 && domain == Domain::Zp)
        throw std::invalid_argument("riemann_sum: negative powers require the unit domain");
}

// ---------------------------------------------------------------------------
// Exact path.  All family-specific loops reduce the p^N-term scan to integer
// accumulations (no per-term rational canonicalization).

// T_j = sum over representatives of a^j z^a for every j in [0, jmax],
// returned as exact rationals.  With z = 1 these are plain power sums.
std::vector<BigRat> weighted_power_sums(const BigRat& z, long jmax, Domain domain,
                                        long p, int N, int threads) {
    const long long pN = pow_ll(p, N);
    const unsigned long A = static_cast<unsigned long>(pN - 1);
    const mpz_class zn = z.numerator(), zd = z.denominator();
    const bool trivial_weight = (zn == 1 && zd == 1);

    struct Block {
        std::vector<mpz_class> acc;
    };
    auto blocks = parallel_blocks<Block>(pN, threads, [&](long long lo, long long hi) {
        Block blk;
        blk.acc.assign(static_cast<size_t>(jmax + 1), mpz_class(0));
        // pw = zn^a * zd^(A-a), an integer proportional to z^a.
        mpz_class pw;
        if (!trivial_weight) {
            mpz_class za, zb;
            mpz_pow_ui(za.get_mpz_t(), zn.get_mpz_t(), static_cast<unsigned long>(lo));
            mpz_pow_ui(zb.get_mpz_t(), zd.get_mpz_t(), A - static_cast<unsigned long>(lo));
            pw = za * zb;
        }
        mpz_class apow;
        for (long long a = lo; a < hi; ++a) {
            if (include_rep(a, p, domain)) {
                for (long j = 0; j <= jmax; ++j) {
                    mpz_ui_pow_ui(apow.get_mpz_t(), static_cast<unsigned long>(a),
                                  static_cast<unsigned long>(j));
                    if (trivial_weight)
                        blk.acc[static_cast<size_t>(j)] += apow;
                    else
                        mpz_addmul(blk.acc[static_cast<size_t>(j)].get_mpz_t(),
                                   apow.get_mpz_t(), pw.get_mpz_t());
                }
            }
            if (!trivial_weight && a + 1 < hi) {
                pw *= zn;
                if (zd != 1) mpz_divexact(pw.get_mpz_t(), pw.get_mpz_t(), zd.get_mpz_t());
            }
        }
        return blk;
    });

    mpz_class zdA(1);
    if (zd != 1) mpz_pow_ui(zdA.get_mpz_t(), zd.get_mpz_t(), A);
    std::vector<BigRat> sums(static_cast<size_t>(jmax + 1));
    for (long j = 0; j <= jmax; ++j) {
        mpz_class total(0);
        for (const auto& blk : blocks) total += blk.acc[static_cast<size_t>(j)];
        sums[static_cast<size_t>(j)] = BigRat(total, zdA);
    }
    return sums;
}

// M_j = sum over representatives of a^r * b_a^j for j in [0, jmax], where
// b_a = (a * step) mod p^N walks the image of the ball under multiplication
// by a unit.
std::vector<BigRat> mixed_power_sums(long r, long jmax, long long step, Domain domain,
                                     long p, int N, int threads) {
    const long long pN = pow_ll(p, N);
    struct Block {
        std::vector<mpz_class> acc;
    };
    auto blocks = parallel_blocks<Block>(pN, threads, [&](long long lo, long long hi) {
        Block blk;
        blk.acc.assign(static_cast<size_t>(jmax + 1), mpz_class(0));
        long long b = (lo * step) % pN;
        mpz_class apow, bpow;
        for (long long a = lo; a < hi; ++a) {
            if (include_rep(a, p, domain)) {
                mpz_ui_pow_ui(apow.get_mpz_t(), static_cast<unsigned long>(a),
                              static_cast<unsigned long>(r));
                for (long j = 0; j <= jmax; ++j) {
                    mpz_ui_pow_ui(bpow.get_mpz_t(), static_cast<unsigned long>(b),
                                  static_cast<unsigned long>(j));
                    mpz_addmul(blk.acc[static_cast<size_t>(j)].get_mpz_t(),
                               apow.get_mpz_t(), bpow.get_mpz_t());
                }
            }
            b += step;
            if (b >= pN) b -= pN;
        }
        return blk;
    });
    std::vector<BigRat> sums(static_cast<size_t>(jmax + 1));
    for (long j = 0; j <= jmax; ++j) {
        mpz_class total(0);
        for (const auto& blk : blocks) total += blk.acc[static_cast<size_t>(j)];
        sums[static_cast<size_t>(j)] = BigRat(total);
    }
    return sums;
}

// Generic per-term scan; the only exact route for negative r.
BigRat generic_exact_sum(const MeasureSpec& spec,
                         const std::vector<std::pair<BigRat, long>>& integrand,
                         Domain domain, long p, int N, int threads) {
    const long long pN = pow_ll(p, N);
    auto blocks = parallel_blocks<BigRat>(pN, threads, [&](long long lo, long long hi) {
        MeasureEvaluator ev;
        BigRat sum(0);
        for (long long a = lo; a < hi; ++a) {
            if (!include_rep(a, p, domain)) continue;
            BigRat f(0);
            for (const auto& [c, e] : integrand) {
                if (a == 0 && e != 0) continue;  // 0^e = 0 for e > 0 (e < 0 never at a = 0)
                f += c * BigRat(a).pow(e);
            }
            if (f.is_zero()) continue;
            sum += f * ev.value(spec, Ball{p, N, a});
        }
        return sum;
    });
    BigRat total(0);
    for (const auto& b : blocks) total += b;
    return total;
}

// Exact negative power of p as a rational.
BigRat p_power(long p, long e) { return BigRat(p).pow(e); }

BigRat exact_sum(const MeasureSpec& spec, long r, Domain domain, long p, int N,
                 int threads) {
    check_sum_args(spec, r, domain, p, N);
    const long long pN = pow_ll(p, N);
    if (r < 0)
        return generic_exact_sum(spec, {{BigRat(1), r}}, domain, p, N, threads);

    switch (spec.family()) {
    case MeasureFamily::TwistedBernoulli: {
        const int k = spec.k();
        const BigRat y = spec.z().pow(pN);
        if (y == BigRat(1))
            throw std::domain_error("riemann_sum: z^{p^N} = 1 is a pole of the measure");
        const TwistedPoly beta = twisted_bernoulli(k);
        auto T = weighted_power_sums(spec.z(), r + k - 1, domain, p, N, threads);
        BigRat sum(0);
        for (int i = 1; i <= k; ++i) {
            BigRat fi = beta.coeff(k - i).eval(y);
            sum += fi * p_power(p, static_cast<long>(N) * (i - 1)) *
                   T[static_cast<size_t>(r + k - i)];
        }
        return sum;
    }
    case MeasureFamily::Koblitz: {
        const BigRat y = spec.z().pow(pN);
        BigRat den = BigRat(1) - y;
        if (den.is_zero())
            throw std::domain_error("riemann_sum: z^{p^N} = 1 is a pole of the measure");
        auto T = weighted_power_sums(spec.z(), r, domain, p, N, threads);
        return T[static_cast<size_t>(r)] / den;
    }
    case MeasureFamily::BernoulliDist: {
        const int k = spec.k();
        const PolyQ poly = bernoulli_poly(k);
        auto U = weighted_power_sums(BigRat(1), r + k, domain, p, N, threads);
        BigRat sum(0);
        for (int j = 0; j <= k; ++j)
            sum += poly.coeff(j) * p_power(p, static_cast<long>(N) * (k - 1 - j)) *
                   U[static_cast<size_t>(r + j)];
        return sum;
    }
    case MeasureFamily::RegBernoulli: {
        const int k = spec.k();
        MeasureSpec plain = MeasureSpec::bernoulli(k);
        BigRat plain_part = exact_sum(plain, r, domain, p, N, threads);
        const PolyQ poly = bernoulli_poly(k);
        const long long step = rational_residue(1, spec.alpha(), pN);
        auto M = mixed_power_sums(r, k, step, domain, p, N, threads);
        BigRat moved(0);
        for (int j = 0; j <= k; ++j)
            moved += poly.coeff(j) * p_power(p, static_cast<long>(N) * (k - 1 - j)) *
                     M[static_cast<size_t>(j)];
        return plain_part - spec.alpha().pow(-k) * moved;
    }
    }
    throw std::logic_error("riemann_sum: unknown family");
}

// ---------------------------------------------------------------------------
// Fast path: every quantity is carried as p^v * u with u tracked modulo
// p^L (L = requested digits + guard) together with the absolute precision
// A up to which the value is certified.  Cancellation turns a value into an
// "approximate zero" known only to be 0 modulo p^A; finalization retries
// with a larger guard when the certified digits fall short.

constexpr long kPrecCap = 1L << 40;  // "exact" absolute precision sentinel

struct FastCtx {
    mpz_class p;
    long L = 0;
    mpz_class pL;

    FastCtx(long prime, long digits) : p(prime), L(digits) {
        mpz_pow_ui(pL.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(digits));
    }
};

struct PVal {
    bool zero = true;  // value known to be 0 modulo p^A
    long v = 0;
    mpz_class u;       // unit part modulo p^L (meaningful when !zero)
    long A = kPrecCap; // certified absolute precision

    static PVal exact_zero() { return PVal{}; }
    static PVal approx_zero(long A) {
        PVal x;
        x.A = std::min(A, kPrecCap);
        return x;
    }
    static PVal nonzero(long v, mpz_class u, long A) {
        PVal x;
        x.zero = false;
        x.v = v;
        x.u = std::move(u);
        x.A = std::min(A, kPrecCap);
        return x;
    }
};

PVal pv_from_rational(const BigRat& q, const FastCtx& c) {
    if (q.is_zero()) return PVal::exact_zero();
    long v = val_p(q, c.p).value();
    mpz_class num = q.numerator(), den = q.denominator();
    long vn = val_p(num, c.p).value();
    long vd = val_p(den, c.p).value();
    if (vn > 0) {
        mpz_class pv = pow_ui(c.p, static_cast<unsigned long>(vn));
        num /= pv;
    }
    if (vd > 0) {
        mpz_class pv = pow_ui(c.p, static_cast<unsigned long>(vd));
        den /= pv;
    }
    mpz_class u;
    mpz_mod(u.get_mpz_t(), num.get_mpz_t(), c.pL.get_mpz_t());
    if (den != 1) {
        u *= inv_mod(den, c.pL);
        mpz_mod(u.get_mpz_t(), u.get_mpz_t(), c.pL.get_mpz_t());
    }
    return PVal::nonzero(v, u, v + c.L);
}

PVal pv_from_long(long long n, const FastCtx& c) {
    if (n == 0) return PVal::exact_zero();
    mpz_class m(static_cast<long>(n));
    long v = val_p(m, c.p).value();
    if (v > 0) {
        mpz_class pv = pow_ui(c.p, static_cast<unsigned long>(v));
        m /= pv;
    }
    mpz_class u;
    mpz_mod(u.get_mpz_t(), m.get_mpz_t(), c.pL.get_mpz_t());
    return PVal::nonzero(v, u, v + c.L);
}

PVal pv_one(const FastCtx& c) { return PVal::nonzero(0, 1, c.L); }

PVal pv_p_power(long e, const FastCtx& c) { return PVal::nonzero(e, 1, e + c.L); }

PVal pv_neg(const PVal& a, const FastCtx& c) {
    if (a.zero) return a;
    mpz_class u = c.pL - a.u;
    mpz_mod(u.get_mpz_t(), u.get_mpz_t(), c.pL.get_mpz_t());
    return PVal::nonzero(a.v, u, a.A);
}

PVal pv_mul(const PVal& a, const PVal& b, const FastCtx& c) {
    if (a.zero && b.zero) {
        if (a.A >= kPrecCap && b.A >= kPrecCap) return PVal::exact_zero();
        return PVal::approx_zero(a.A + b.A);  // val(x1 x2) >= A1 + A2
    }
    if (a.zero || b.zero) {
        const PVal& z = a.zero ? a : b;
        const PVal& n = a.zero ? b : a;
        if (z.A >= kPrecCap) return PVal::exact_zero();
        return PVal::approx_zero(z.A + n.v);
    }
    mpz_class u = a.u * b.u;
    mpz_mod(u.get_mpz_t(), u.get_mpz_t(), c.pL.get_mpz_t());
    long A = std::min(a.A + b.v, b.A + a.v);
    return PVal::nonzero(a.v + b.v, std::move(u), A);
}

PVal pv_add(const PVal& a, const PVal& b, const FastCtx& c) {
    if (a.zero && b.zero) {
        if (a.A >= kPrecCap && b.A >= kPrecCap) return PVal::exact_zero();
        return PVal::approx_zero(std::min(a.A, b.A));
    }
    if (a.zero || b.zero) {
        const PVal& z = a.zero ? a : b;
        const PVal& n = a.zero ? b : a;
        long A = std::min(z.A, n.A);
        if (n.v < A) return PVal::nonzero(n.v, n.u, A);
        return PVal::approx_zero(A);
    }
    long A = std::min(a.A, b.A);
    long vm = std::min(a.v, b.v);
    long window = A - vm;  // >= 1: each A exceeds its own v
    mpz_class pw = pow_ui(c.p, static_cast<unsigned long>(window));
    // A shift at or beyond the window contributes nothing modulo p^window.
    mpz_class w(0);
    if (a.v - vm < window)
        w += pow_ui(c.p, static_cast<unsigned long>(a.v - vm)) * a.u;
    if (b.v - vm < window)
        w += pow_ui(c.p, static_cast<unsigned long>(b.v - vm)) * b.u;
    mpz_class wr;
    mpz_mod(wr.get_mpz_t(), w.get_mpz_t(), pw.get_mpz_t());
    if (wr == 0) return PVal::approx_zero(A);
    long t = val_p(wr, c.p).value();
    mpz_class pt = pow_ui(c.p, static_cast<unsigned long>(t));
    mpz_class u = wr / pt;
    return PVal::nonzero(vm + t, std::move(u), A);
}

PVal pv_inv(const PVal& a, const FastCtx& c) {
    if (a.zero)
        throw precision_exhausted(
            "fast Riemann sum: inverting a value indistinguishable from zero");
    mpz_class u = inv_mod(a.u, c.pL);
    return PVal::nonzero(-a.v, std::move(u), a.A - 2 * a.v);
}

PVal pv_pow(const PVal& a, long e, const FastCtx& c) {
    if (e == 0) return pv_one(c);
    PVal base = e < 0 ? pv_inv(a, c) : a;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1UL
                            : static_cast<unsigned long>(e);
    if (base.zero) {
        if (base.A >= kPrecCap) return PVal::exact_zero();
        return PVal::approx_zero(base.A);  // conservative: |x^n| <= |x|
    }
    mpz_class u;
    mpz_powm_ui(u.get_mpz_t(), base.u.get_mpz_t(), n, c.pL.get_mpz_t());
    long v = base.v * static_cast<long>(n);
    long A = v + (base.A - base.v);  // relative digits preserved
    return PVal::nonzero(v, std::move(u), A);
}

// Horner evaluation of an exact polynomial at a PVal point.
PVal pv_eval_poly(const PolyQ& f, const PVal& at, const FastCtx& c) {
    if (f.is_zero()) return PVal::exact_zero();
    PVal acc = pv_from_rational(f.leading(), c);
    for (long j = f.degree() - 1; j >= 0; --j)
        acc = pv_add(pv_mul(acc, at, c), pv_from_rational(f.coeff(j), c), c);
    return acc;
}

PVal pv_eval_ratfunc(const RatFunc& f, const PVal& at, const FastCtx& c) {
    PVal num = pv_eval_poly(f.num(), at, c);
    PVal den = pv_eval_poly(f.den(), at, c);
    return pv_mul(num, pv_inv(den, c), c);
}

// a^r as a PVal; a > 0, and r < 0 requires a coprime to p.
PVal pv_rep_power(long long a, long r, const FastCtx& c) {
    if (r == 0) return pv_one(c);
    PVal base = pv_from_long(a, c);
    return pv_pow(base, r, c);
}

// One fast-path attempt at working precision L; returns the accumulated
// sum (exact zero when no representative contributes).
PVal fast_attempt(const MeasureSpec& spec, long r, Domain domain, long p, int N,
                  const FastCtx& c, int threads) {
    const long long pN = pow_ll(p, N);

    auto reduce = [&](const std::vector<PVal>& blocks) {
        PVal total = PVal::exact_zero();
        for (const auto& b : blocks) total = pv_add(total, b, c);
        return total;
    };

    switch (spec.family()) {
    case MeasureFamily::TwistedBernoulli:
    case MeasureFamily::Koblitz: {
        const BigRat& z = spec.z();
        if (z.is_zero()) {
            // Only a = 0 contributes (z^a = 0 for a > 0); exact evaluation.
            if (domain == Domain::ZpStar || r != 0) return PVal::exact_zero();
            return pv_from_rational(measure_value(spec, Ball{p, N, 0}), c);
        }
        const long v_z = val_p(z, c.p).value();
        mpz_class zn = z.numerator(), zd = z.denominator();
        long vn = val_p(zn, c.p).value(), vd = val_p(zd, c.p).value();
        if (vn > 0) zn /= pow_ui(c.p, static_cast<unsigned long>(vn));
        if (vd > 0) zd /= pow_ui(c.p, static_cast<unsigned long>(vd));
        mpz_class u_z;
        mpz_mod(u_z.get_mpz_t(), zn.get_mpz_t(), c.pL.get_mpz_t());
        if (zd != 1) {
            u_z *= inv_mod(zd, c.pL);
            mpz_mod(u_z.get_mpz_t(), u_z.get_mpz_t(), c.pL.get_mpz_t());
        }

        // y = z^{p^N}: valuation p^N * v_z, unit part by modular powering.
        const long v_y = static_cast<long>(pN) * v_z;
        mpz_class u_y;
        mpz_powm_ui(u_y.get_mpz_t(), u_z.get_mpz_t(), static_cast<unsigned long>(pN),
                    c.pL.get_mpz_t());
        PVal y = PVal::nonzero(v_y, u_y, v_y + c.L);

        // Per-level coefficients g_i = f_i(y) p^{N(i-1)} (empty for the
        // geometric family, which carries the single factor 1/(1-y)).
        std::vector<PVal> g;
        const int k = spec.k();
        if (spec.family() == MeasureFamily::TwistedBernoulli) {
            const TwistedPoly beta = twisted_bernoulli(k);
            g.reserve(static_cast<size_t>(k));
            for (int i = 1; i <= k; ++i)
                g.push_back(pv_mul(pv_eval_ratfunc(beta.coeff(k - i), y, c),
                                   pv_p_power(static_cast<long>(N) * (i - 1), c), c));
        }

        auto blocks = parallel_blocks<PVal>(pN, threads, [&](long long lo, long long hi) {
            PVal sum = PVal::exact_zero();
            // Incremental unit part of z^a from the block start.
            mpz_class uz_cur;
            mpz_powm_ui(uz_cur.get_mpz_t(), u_z.get_mpz_t(),
                        static_cast<unsigned long>(lo), c.pL.get_mpz_t());
            for (long long a = lo; a < hi; ++a) {
                bool used = include_rep(a, p, domain) && !(a == 0 && r > 0);
                if (used) {
                    PVal za = PVal::nonzero(static_cast<long>(a) * v_z, uz_cur,
                                            static_cast<long>(a) * v_z + c.L);
                    PVal term = pv_mul(pv_rep_power(a, r, c), za, c);
                    if (spec.family() == MeasureFamily::TwistedBernoulli) {
                        PVal apt = pv_from_long(a, c);
                        PVal acc = g[0];
                        for (int i = 2; i <= k; ++i)
                            acc = pv_add(pv_mul(acc, apt, c), g[static_cast<size_t>(i - 1)], c);
                        term = pv_mul(term, acc, c);
                    }
                    sum = pv_add(sum, term, c);
                }
                if (a + 1 < hi) {
                    uz_cur *= u_z;
                    mpz_mod(uz_cur.get_mpz_t(), uz_cur.get_mpz_t(), c.pL.get_mpz_t());
                }
            }
            return sum;
        });
        PVal total = reduce(blocks);
        if (spec.family() == MeasureFamily::Koblitz) {
            PVal den = pv_add(pv_one(c), pv_neg(y, c), c);  // 1 - y
            total = pv_mul(total, pv_inv(den, c), c);
        }
        return total;
    }
    case MeasureFamily::BernoulliDist:
    case MeasureFamily::RegBernoulli: {
        auto blocks = parallel_blocks<PVal>(pN, threads, [&](long long lo, long long hi) {
            MeasureEvaluator ev;
            PVal sum = PVal::exact_zero();
            for (long long a = lo; a < hi; ++a) {
                if (!include_rep(a, p, domain)) continue;
                if (a == 0 && r > 0) continue;
                PVal mu = pv_from_rational(ev.value(spec, Ball{p, N, a}), c);
                sum = pv_add(sum, pv_mul(pv_rep_power(a, r, c), mu, c), c);
            }
            return sum;
        });
        return reduce(blocks);
    }
    }
    throw std::logic_error("riemann_sum_fast: unknown family");
}

} // namespace

BigRat riemann_sum(const MeasureSpec& spec, long r, Domain domain, long p, int N,
                   int threads) {
    return exact_sum(spec, r, domain, p, N, threads);
}

BigRat riemann_sum_linear(const MeasureSpec& spec,
                          const std::vector<std::pair<BigRat, long>>& integrand,
                          Domain domain, long p, int N, int threads) {
    spec.validate(p);
    if (N < 0) throw std::invalid_argument("riemann_sum_linear: N must be >= 0");
    for (const auto& [c, e] : integrand) {
        (void)c;
        if (e < 0 && domain == Domain::Zp)
            throw std::invalid_argument(
                "riemann_sum_linear: negative powers require the unit domain");
    }
    return generic_exact_sum(spec, integrand, domain, p, N, threads);
}

PadicApprox riemann_sum_fast(const MeasureSpec& spec, long r, Domain domain, long p,
                             int N, const PadicContext& ctx, int guard, int threads) {
    check_sum_args(spec, r, domain, p, N);
    if (ctx.p_long() != p)
        throw std::invalid_argument("riemann_sum_fast: context prime differs from p");
    const int M = ctx.precision();
    if (guard <= 0) guard = std::max(M / 2, 2);

    for (int attempt = 0; attempt < 6; ++attempt, guard *= 2) {
        FastCtx c(p, M + guard);
        PVal total = fast_attempt(spec, r, domain, p, N, c, threads);
        if (total.zero) {
            // Nothing contributed, or the certified window shows only zeros.
            if (total.A >= kPrecCap) return PadicApprox::zero(ctx);
            if (total.A >= M) return PadicApprox::zero(ctx);
            continue;
        }
        long digits = total.A - total.v;
        if (digits >= M) return PadicApprox::make(ctx, total.v, total.u, M);
    }
    throw precision_exhausted(
        "riemann_sum_fast: could not certify " + std::to_string(M) +
        " digits after guard-doubling retries (deep cancellation)");
}

BigRat closed_form_moment(int k, long r, const BigRat& z, Domain domain, long p) {
    if (k < 1) throw std::invalid_argument("closed_form_moment: k must be >= 1");
    if (r < 0) throw std::invalid_argument("closed_form_moment: r must be >= 0");
    MeasureSpec::twisted(k, z).validate(p);
    const int n = static_cast<int>(r) + k;
    RatFunc beta_n = twisted_bernoulli_number(n);
    BigRat scale(k, static_cast<long long>(n));
    BigRat head = beta_n.eval(z);
    if (domain == Domain::Zp) return scale * head;
    BigRat zp = z.pow(p);
    return scale * (head - p_power(p, n - 1) * beta_n.eval(zp));
}

ConvergenceReport check_convergence(const MeasureSpec& spec, long r, Domain domain,
                                    long p, const ConvergenceOptions& opt) {
    if (opt.N_begin < 0 || opt.N_max < opt.N_begin)
        throw std::invalid_argument("check_convergence: invalid level range");
    ConvergenceReport rep;
    rep.limit_claim = opt.limit;
    rep.threshold = opt.threshold;
    rep.mode = opt.mode;

    PadicContext ctx(mpz_class(p), opt.precision);
    std::vector<PadicApprox> fast_sums;
    std::optional<PadicApprox> fast_limit;
    if (opt.mode == SumMode::Fast && opt.limit)
        fast_limit = PadicApprox::from_rational(*opt.limit, ctx);

    auto certified_valuation = [&](const PadicApprox& a, const PadicApprox& b) {
        try {
            return a.sub(b).valuation();
        } catch (const precision_exhausted&) {
            // Agreement beyond the certified window: report the window
            // itself (the true valuation is at least this).
            return Valuation::finite(std::min(a.abs_precision(), b.abs_precision()));
        }
    };

    for (int N = opt.N_begin; N <= opt.N_max; ++N) {
        rep.levels.push_back(N);
        if (opt.mode == SumMode::Exact) {
            BigRat s = riemann_sum(spec, r, domain, p, N, opt.threads);
            rep.sums.push_back(s);
            rep.sum_display.push_back(s.str());
            if (rep.sums.size() >= 2) {
                const BigRat& prev = rep.sums[rep.sums.size() - 2];
                rep.diff_valuations.push_back(val_p(s - prev, mpz_class(p)));
            }
            if (opt.limit)
                rep.limit_valuations.push_back(val_p(s - *opt.limit, mpz_class(p)));
        } else {
            PadicApprox s = riemann_sum_fast(spec, r, domain, p, N, ctx, 0, opt.threads);
            fast_sums.push_back(s);
            rep.sums.push_back(s.rational_rep());
            rep.sum_display.push_back(s.str());
            if (fast_sums.size() >= 2)
                rep.diff_valuations.push_back(
                    certified_valuation(s, fast_sums[fast_sums.size() - 2]));
            if (opt.limit)
                rep.limit_valuations.push_back(certified_valuation(s, *fast_limit));
        }
        if (opt.stop_at_threshold && opt.limit && !rep.limit_valuations.empty() &&
            rep.limit_valuations.back() >= Valuation::finite(opt.threshold))
            break;
    }

    const Valuation bar = Valuation::finite(opt.threshold);
    if (opt.limit)
        rep.threshold_reached =
            !rep.limit_valuations.empty() && rep.limit_valuations.back() >= bar;
    else
        rep.threshold_reached =
            !rep.diff_valuations.empty() && rep.diff_valuations.back() >= bar;

    rep.limit_vals_nondecreasing = true;
    for (size_t i = 1; i < rep.limit_valuations.size(); ++i)
        if (rep.limit_valuations[i] < rep.limit_valuations[i - 1])
            rep.limit_vals_nondecreasing = false;

    rep.diffs_strictly_increasing = rep.diff_valuations.size() >= 1;
    for (size_t i = 1; i < rep.diff_valuations.size(); ++i)
        if (!(rep.diff_valuations[i - 1] < rep.diff_valuations[i]))
            rep.diffs_strictly_increasing = false;

    return rep;
}

bool check_index_shift(int k, long r, const BigRat& z, Domain domain, long p) {
    if (k < 1 || r < 0)
        throw std::invalid_argument("check_index_shift: need k >= 1, r >= 0");
    BigRat lhs = closed_form_moment(k, r, z, domain, p);
    BigRat rhs = BigRat(k) * closed_form_moment(1, r + k - 1, z, domain, p);
    return lhs == rhs;
}

IndexShiftReport index_shift_report(int k, long r, const BigRat& z, Domain domain,
                                    long p, int N_begin, int N_max, int threads) {
    IndexShiftReport rep;
    rep.closed_form_equal = check_index_shift(k, r, z, domain, p);
    MeasureSpec mu_k = MeasureSpec::twisted(k, z);
    MeasureSpec mu_1 = MeasureSpec::twisted(1, z);
    for (int N = N_begin; N <= N_max; ++N) {
        BigRat lhs = riemann_sum(mu_k, r, domain, p, N, threads);
        BigRat rhs = BigRat(k) * riemann_sum(mu_1, r + k - 1, domain, p, N, threads);
        rep.levels.push_back(N);
        rep.level_valuations.push_back(val_p(lhs - rhs, mpz_class(p)));
    }
    return rep;
}

BigRat zeta_p(int k, long p) {
    if (k < 1) throw std::invalid_argument("zeta_p: k must be >= 1");
    if (!is_prime(mpz_class(p))) throw std::invalid_argument("zeta_p: p must be prime");
    BigRat bk = bernoulli_number(k);
    return (BigRat(1) - p_power(p, k - 1)) * (-bk / BigRat(k));
}

ZetaReport check_zeta_triple(int k, long p, const BigRat& alpha, int N_max,
                             long threshold, int threads) {
    if (k < 1) throw std::invalid_argument("check_zeta_triple: k must be >= 1");
    if (N_max < 1) throw std::invalid_argument("check_zeta_triple: N_max must be >= 1");
    BigRat am = alpha.pow(-k);
    if (am == BigRat(1))
        throw std::domain_error("check_zeta_triple: alpha^k = 1 degenerates the measure");

    ZetaReport rep;
    rep.k = k;
    rep.p = p;
    rep.alpha = alpha;
    rep.exact = zeta_p(k, p);
    rep.threshold = threshold;

    MeasureSpec moment_spec = MeasureSpec::regularized(1, alpha);
    MeasureSpec mass_spec = MeasureSpec::regularized(k, alpha);
    moment_spec.validate(p);

    const BigRat c1 = (am - BigRat(1)).inverse();
    const BigRat c2 = (BigRat(k) * (am - BigRat(1))).inverse();
    for (int N = 1; N <= N_max; ++N) {
        BigRat e1 = c1 * riemann_sum(moment_spec, k - 1, Domain::ZpStar, p, N, threads);
        BigRat e2 = c2 * riemann_sum(mass_spec, 0, Domain::ZpStar, p, N, threads);
        rep.levels.push_back(N);
        rep.moment_route.push_back(e1);
        rep.mass_route.push_back(e2);
        rep.moment_valuations.push_back(val_p(e1 - rep.exact, mpz_class(p)));
        rep.mass_valuations.push_back(val_p(e2 - rep.exact, mpz_class(p)));
    }
    const Valuation bar = Valuation::finite(threshold);
    rep.threshold_reached = !rep.levels.empty() &&
                            rep.moment_valuations.back() >= bar &&
                            rep.mass_valuations.back() >= bar;
    return rep;
}

} // namespace tbm
