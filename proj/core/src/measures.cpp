#include "tbm/measures.hpp"

#include "tbm/parallel.hpp"

#include <limits>
#include <numeric>
#include <sstream>

namespace tbm {

long long pow_ll(long p, int N) {
    if (p < 2 || N < 0) throw std::invalid_argument("pow_ll: need p >= 2, N >= 0");
    long long r = 1;
    for (int i = 0; i < N; ++i) {
        if (r > std::numeric_limits<long long>::max() / p)
            throw std::overflow_error("pow_ll: p^N does not fit in 64 bits");
        r *= p;
    }
    return r;
}

Ball Ball::make(long p, int N, long long a) {
    if (!is_prime(mpz_class(p))) throw std::invalid_argument("Ball: p must be prime");
    if (N < 0) throw std::invalid_argument("Ball: N must be >= 0");
    long long pN = pow_ll(p, N);
    if (a < 0 || a >= pN) throw std::invalid_argument("Ball: need 0 <= a < p^N");
    return Ball{p, N, a};
}

long long Ball::modulus() const {
    return pow_ll(p, N);
}

MeasureSpec::MeasureSpec(MeasureFamily f, int k, BigRat z, BigRat alpha)
    : family_(f), k_(k), z_(std::move(z)), alpha_(std::move(alpha)) {}

MeasureSpec MeasureSpec::twisted(int k, const BigRat& z) {
    if (k < 1) throw std::invalid_argument("MeasureSpec::twisted: k must be >= 1");
    return MeasureSpec(MeasureFamily::TwistedBernoulli, k, z, BigRat(0));
}

MeasureSpec MeasureSpec::bernoulli(int k) {
    if (k < 1) throw std::invalid_argument("MeasureSpec::bernoulli: k must be >= 1");
    return MeasureSpec(MeasureFamily::BernoulliDist, k, BigRat(0), BigRat(0));
}

MeasureSpec MeasureSpec::regularized(int k, const BigRat& alpha) {
    if (k < 1) throw std::invalid_argument("MeasureSpec::regularized: k must be >= 1");
    return MeasureSpec(MeasureFamily::RegBernoulli, k, BigRat(0), alpha);
}

MeasureSpec MeasureSpec::koblitz(const BigRat& z) {
    return MeasureSpec(MeasureFamily::Koblitz, 1, z, BigRat(0));
}

void MeasureSpec::validate(long p) const {
    switch (family_) {
    case MeasureFamily::TwistedBernoulli:
    case MeasureFamily::Koblitz: {
        Valuation v = val_p(z_ - BigRat(1), mpz_class(p));
        if (v.is_infinite() || v.value() > 0)
            throw std::domain_error(
                "measure requires |z-1|_p >= 1 (val_p(z-1) <= 0); got z = " + z_.str() +
                ", p = " + std::to_string(p));
        break;
    }
    case MeasureFamily::RegBernoulli: {
        Valuation v = val_p(alpha_, mpz_class(p));
        if (v.is_infinite() || v.value() != 0)
            throw std::domain_error("regularized measure requires alpha to be a p-adic unit; got alpha = " +
                                    alpha_.str() + ", p = " + std::to_string(p));
        break;
    }
    case MeasureFamily::BernoulliDist:
        break;
    }
}

std::string MeasureSpec::describe() const {
    std::ostringstream os;
    switch (family_) {
    case MeasureFamily::TwistedBernoulli:
        os << "twisted(k=" << k_ << ", z=" << z_.str() << ")";
        break;
    case MeasureFamily::BernoulliDist:
        os << "bernoulli(k=" << k_ << ")";
        break;
    case MeasureFamily::RegBernoulli:
        os << "regularized(k=" << k_ << ", alpha=" << alpha_.str() << ")";
        break;
    case MeasureFamily::Koblitz:
        os << "koblitz(z=" << z_.str() << ")";
        break;
    }
    return os.str();
}

long long rational_residue(long long a, const BigRat& q, long long pN) {
    if (pN < 1) throw std::invalid_argument("rational_residue: modulus must be >= 1");
    if (pN == 1) return 0;
    mpz_class m(static_cast<long>(pN));
    mpz_class num = q.numerator(), den = q.denominator();
    mpz_class r = mpz_class(static_cast<long>(a)) * num * inv_mod(den, m);
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    return r.get_si();
}

MeasureEvaluator::MeasureEvaluator() = default;

const TwistedPoly& MeasureEvaluator::row(int k) {
    while (static_cast<int>(rows_.size()) <= k)
        rows_.push_back(twisted_bernoulli(static_cast<int>(rows_.size())));
    return rows_[static_cast<size_t>(k)];
}

const PolyQ& MeasureEvaluator::bernoulli_row(int k) {
    if (static_cast<int>(bern_.size()) <= k) {
        BernoulliTable table(k);
        bern_.clear();
        for (int i = 0; i <= k; ++i) bern_.push_back(table.poly(i));
    }
    return bern_[static_cast<size_t>(k)];
}

const MeasureEvaluator::LevelData& MeasureEvaluator::level_data(int k, const BigRat& z,
                                                                long p, int N) {
    std::ostringstream key;
    key << k << "|" << z.str() << "|" << p << "|" << N;
    auto it = levels_.find(key.str());
    if (it != levels_.end()) return it->second;
    LevelData ld;
    long long pN = pow_ll(p, N);
    ld.y = z.pow(pN);
    if (ld.y == BigRat(1))
        throw std::domain_error("measure evaluation: z^{p^N} = 1 is a pole of beta_k");
    const TwistedPoly& beta = row(k);
    ld.f.resize(static_cast<size_t>(k));
    for (int i = 1; i <= k; ++i)
        ld.f[static_cast<size_t>(i - 1)] = beta.coeff(k - i).eval(ld.y);
    return levels_.emplace(key.str(), std::move(ld)).first->second;
}

BigRat MeasureEvaluator::value(const MeasureSpec& spec, const Ball& ball) {
    spec.validate(ball.p);
    const long long pN = ball.modulus();
    const int k = spec.k();
    switch (spec.family()) {
    case MeasureFamily::TwistedBernoulli: {
        const LevelData& ld = level_data(k, spec.z(), ball.p, ball.N);
        const BigRat x(ball.a, pN);
        BigRat beta = ld.f[0];
        for (int i = 2; i <= k; ++i)
            beta = beta * x + ld.f[static_cast<size_t>(i - 1)];
        BigRat scale = BigRat(static_cast<long>(ball.p)).pow(static_cast<long>(ball.N) * (k - 1));
        return scale * spec.z().pow(ball.a) * beta;
    }
    case MeasureFamily::BernoulliDist: {
        const BigRat x(ball.a, pN);
        BigRat scale = BigRat(static_cast<long>(ball.p)).pow(static_cast<long>(ball.N) * (k - 1));
        return scale * bernoulli_row(k).eval(x);
    }
    case MeasureFamily::RegBernoulli: {
        MeasureSpec plain = MeasureSpec::bernoulli(k);
        long long a2 = rational_residue(ball.a, spec.alpha(), pN);
        Ball moved{ball.p, ball.N, a2};
        return value(plain, ball) - spec.alpha().pow(-k) * value(plain, moved);
    }
    case MeasureFamily::Koblitz: {
        BigRat zq = spec.z().pow(pN);
        BigRat den = BigRat(1) - zq;
        if (den.is_zero())
            throw std::domain_error("measure evaluation: z^{p^N} = 1 is a pole");
        return spec.z().pow(ball.a) / den;
    }
    }
    throw std::logic_error("MeasureEvaluator::value: unknown family");
}

BigRat measure_value(const MeasureSpec& spec, const Ball& ball) {
    MeasureEvaluator ev;
    return ev.value(spec, ball);
}

namespace {

bool additivity_rec(MeasureEvaluator& ev, const MeasureSpec& spec, const Ball& ball,
                    int depth) {
    if (depth <= 0) return true;
    const long long pN = ball.modulus();
    BigRat total = ev.value(spec, ball);
    BigRat sum(0);
    for (long b = 0; b < ball.p; ++b) {
        Ball child{ball.p, ball.N + 1, ball.a + b * pN};
        sum += ev.value(spec, child);
    }
    if (sum != total) return false;
    for (long b = 0; b < ball.p; ++b) {
        Ball child{ball.p, ball.N + 1, ball.a + b * pN};
        if (!additivity_rec(ev, spec, child, depth - 1)) return false;
    }
    return true;
}

} // namespace

bool check_additivity(const MeasureSpec& spec, const Ball& ball, int depth) {
    if (depth < 1) throw std::invalid_argument("check_additivity: depth must be >= 1");
    MeasureEvaluator ev;
    return additivity_rec(ev, spec, ball, depth);
}

BoundednessReport boundedness_scan(int k, const BigRat& z, long p, int N_max, int threads) {
    MeasureSpec spec = MeasureSpec::twisted(k, z);
    spec.validate(p);
    if (z.is_zero()) throw std::invalid_argument("boundedness_scan: z must be nonzero");
    if (N_max < 0) throw std::invalid_argument("boundedness_scan: N_max must be >= 0");
    const TwistedPoly beta = twisted_bernoulli(k);
    const long v_z = val_p(z, mpz_class(p)).value();

    BoundednessReport report;
    struct Block {
        Valuation min = Valuation::infinite();
        long long argmin = -1;
        long long count = 0;
    };
    for (int N = 0; N <= N_max; ++N) {
        const long long pN = pow_ll(p, N);
        const BigRat y = z.pow(pN);
        std::vector<BigRat> f(static_cast<size_t>(k));
        for (int i = 1; i <= k; ++i)
            f[static_cast<size_t>(i - 1)] = beta.coeff(k - i).eval(y);
        const long base = static_cast<long>(N) * (k - 1);
        auto blocks = parallel_blocks<Block>(pN, threads, [&](long long lo, long long hi) {
            Block blk;
            for (long long a = lo; a < hi; ++a) {
                const BigRat x(a, pN);
                BigRat b = f[0];
                for (int i = 2; i <= k; ++i)
                    b = b * x + f[static_cast<size_t>(i - 1)];
                // val(mu) = N(k-1) + a*val(z) + val(beta value); the z^a
                // factor contributes only its valuation.
                Valuation vb = val_p(b, mpz_class(p));
                Valuation v = vb.is_infinite()
                                  ? vb
                                  : Valuation::finite(vb.value() + base + a * v_z);
                ++blk.count;
                if (v < blk.min) {
                    blk.min = v;
                    blk.argmin = a;
                }
            }
            return blk;
        });
        for (const auto& blk : blocks) {
            report.values_scanned += blk.count;
            if (blk.min < report.min_valuation) {
                report.min_valuation = blk.min;
                report.argmin = Ball{p, N, blk.argmin};
            }
        }
    }
    return report;
}

BigRat root_of_unity_measure_sum(long c, int k, const Ball& ball) {
    if (c < 1) throw std::invalid_argument("root_of_unity_measure_sum: c must be >= 1");
    if (k < 1) throw std::invalid_argument("root_of_unity_measure_sum: k must be >= 1");
    if (std::gcd(c, ball.p) != 1)
        throw std::invalid_argument("root_of_unity_measure_sum: requires gcd(c, p) = 1");
    const TwistedPoly beta = twisted_bernoulli(k);
    const long long pN = ball.modulus();
    const BigRat x(ball.a, pN);
    const BigRat scale = BigRat(static_cast<long>(ball.p)).pow(static_cast<long>(ball.N) * (k - 1));
    BigRat total(0);
    for (long d = 2; d <= c; ++d) {
        if (c % d != 0) continue;
        CyclotomicField F(d);
        // zeta^{p^N} and zeta^a reduce through exponents mod d.
        CycloElt eta = F.pow(F.generator(), pN % d);
        CycloElt za = F.pow(F.generator(), ball.a % d);
        CycloElt acc = F.eval_ratfunc(beta.coeff(k - 1), eta);
        for (int i = 2; i <= k; ++i) {
            acc = CycloElt{d, acc.rep.scaled(x)};
            acc = F.add(acc, F.eval_ratfunc(beta.coeff(k - i), eta));
        }
        total += F.trace(F.mul(za, acc));
    }
    return scale * total;
}

CycloIdentityReport check_cyclotomic_identity(long c, int k, const Ball& ball) {
    if (c < 1) throw std::invalid_argument("check_cyclotomic_identity: c must be >= 1");
    if (std::gcd(c, ball.p) != 1)
        throw std::invalid_argument("check_cyclotomic_identity: requires gcd(c, p) = 1");
    CycloIdentityReport rep;
    rep.roots_sum = root_of_unity_measure_sum(c, k, ball);
    rep.reg_negation = -measure_value(MeasureSpec::regularized(k, BigRat(1, c)), ball);
    rep.scaled_roots_sum = BigRat(c).pow(-k) * rep.roots_sum;
    rep.unscaled_holds = (rep.roots_sum == rep.reg_negation);
    rep.scaled_holds = (rep.scaled_roots_sum == rep.reg_negation);
    return rep;
}

} // namespace tbm
