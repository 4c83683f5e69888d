#include "tbm/polylog.hpp"

namespace tbm {

namespace {

RatFunc one_minus_var() {
    PolyQ d = PolyQ::constant(BigRat(1)) - PolyQ::var();
    return RatFunc(d);
}

} // namespace

RatFunc neg_polylog(int k) {
    if (k < 0) throw std::invalid_argument("neg_polylog: k must be >= 0");
    RatFunc li(PolyQ::var(), PolyQ::constant(BigRat(1)) - PolyQ::var());
    RatFunc var(PolyQ::var());
    for (int i = 0; i < k; ++i) li = var * li.derivative();
    return li;
}

bool check_apostol(int k) {
    if (k < 2) throw std::invalid_argument("check_apostol: k must be >= 2");
    RatFunc lhs = neg_polylog(k - 1);
    RatFunc rhs = RatFunc(BigRat(-1, static_cast<long long>(k))) *
                  twisted_bernoulli_number(k);
    return lhs == rhs;
}

bool check_polylog_constant_gap() {
    RatFunc geometric = RatFunc(PolyQ::constant(BigRat(1))) / one_minus_var();
    return neg_polylog(0) - geometric == RatFunc(BigRat(-1));
}

bool koblitz_constant_check() {
    const RatFunc target = RatFunc(PolyQ::constant(BigRat(1))) / one_minus_var();
    for (long p : {2L, 3L, 5L}) {
        for (int N = 1; N <= 4; ++N) {
            long long pN = pow_ll(p, N);
            std::vector<BigRat> ones(static_cast<size_t>(pN), BigRat(1));
            PolyQ numerator(ones);  // 1 + z + ... + z^{p^N - 1}
            PolyQ denominator = PolyQ::constant(BigRat(1)) -
                                PolyQ::monomial(static_cast<int>(pN), BigRat(1));
            if (RatFunc(numerator, denominator) != target) return false;
        }
    }
    return true;
}

BigRat padic_polylog(int k, const BigRat& z, long p) {
    if (k < 1) throw std::invalid_argument("padic_polylog: k must be >= 1");
    MeasureSpec::twisted(k, z).validate(p);
    RatFunc beta_k = twisted_bernoulli_number(k);
    BigRat head = beta_k.eval(z);
    BigRat tail = beta_k.eval(z.pow(p));
    return -(head - BigRat(p).pow(k - 1) * tail) / BigRat(k);
}

bool check_polylog_routes(int k, const BigRat& z, long p) {
    BigRat closed = padic_polylog(k, z, p);
    BigRat moment = -closed_form_moment(1, k - 1, z, Domain::ZpStar, p);
    BigRat mass = -closed_form_moment(k, 0, z, Domain::ZpStar, p) / BigRat(k);
    return closed == moment && closed == mass;
}

bool check_integral_inversion(int k, const BigRat& z, long p) {
    BigRat lhs = closed_form_moment(k, 0, z.inverse(), Domain::ZpStar, p);
    BigRat rhs = closed_form_moment(k, 0, z, Domain::ZpStar, p);
    return lhs == (k % 2 == 0 ? rhs : -rhs);
}

ConvergenceReport padic_polylog_via_integral(int k, const BigRat& z, long p,
                                             ConvergenceOptions opt) {
    MeasureSpec spec = MeasureSpec::koblitz(z);
    spec.validate(p);
    if (k >= 1 && !opt.limit) opt.limit = padic_polylog(k, z, p);
    return check_convergence(spec, static_cast<long>(k) - 1, Domain::ZpStar, p, opt);
}

} // namespace tbm
