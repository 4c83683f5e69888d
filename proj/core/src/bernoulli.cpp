#include "tbm/bernoulli.hpp"

#include <stdexcept>

namespace tbm {

BigRat binomial(long n, long r) {
    if (r < 0 || r > n || n < 0) return BigRat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return BigRat(b);
}

BigRat factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return BigRat(f);
}

BernoulliTable::BernoulliTable(int kmax) {
    if (kmax < 0) throw std::invalid_argument("BernoulliTable: kmax must be >= 0");
    numbers_.resize(static_cast<size_t>(kmax) + 1);
    numbers_[0] = BigRat(1);
    for (int k = 1; k <= kmax; ++k) {
        // sum_{j=0}^{k} C(k+1, j) B_j = 0.
        BigRat acc(0);
        for (int j = 0; j < k; ++j)
            acc += binomial(k + 1, j) * numbers_[static_cast<size_t>(j)];
        numbers_[static_cast<size_t>(k)] = -acc / BigRat(static_cast<long>(k) + 1);
    }
    polys_.resize(static_cast<size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) {
        std::vector<BigRat> c(static_cast<size_t>(k) + 1);
        for (int i = 0; i <= k; ++i)
            c[static_cast<size_t>(k - i)] = binomial(k, i) * numbers_[static_cast<size_t>(i)];
        polys_[static_cast<size_t>(k)] = PolyQ(std::move(c));
    }
}

const BigRat& BernoulliTable::number(int k) const {
    if (k < 0 || k > kmax()) throw std::out_of_range("BernoulliTable::number: k out of range");
    return numbers_[static_cast<size_t>(k)];
}

const PolyQ& BernoulliTable::poly(int k) const {
    if (k < 0 || k > kmax()) throw std::out_of_range("BernoulliTable::poly: k out of range");
    return polys_[static_cast<size_t>(k)];
}

BigRat bernoulli_number(int k) {
    return BernoulliTable(k).number(k);
}

PolyQ bernoulli_poly(int k) {
    return BernoulliTable(k).poly(k);
}

TwistedPoly solve_coefficients(int k, const BigRat& h_k) {
    if (k < 0) throw std::invalid_argument("solve_coefficients: k must be >= 0");
    if (k == 0) return TwistedPoly();
    const RatFunc y = RatFunc::var();
    const RatFunc one(BigRat(1));
    const RatFunc y_minus_1 = y - one;
    const RatFunc lead_factor = -(y / y_minus_1);
    std::vector<RatFunc> f(static_cast<size_t>(k) + 1);  // f[1..k]
    f[1] = RatFunc(h_k) / y_minus_1;
    for (int i = 2; i <= k; ++i) {
        RatFunc acc;
        for (int j = 1; j < i; ++j)
            acc += f[static_cast<size_t>(j)] * RatFunc(binomial(k - j, i - j));
        f[static_cast<size_t>(i)] = lead_factor * acc;
    }
    std::vector<RatFunc> coeffs(static_cast<size_t>(k), RatFunc());  // x^0 .. x^{k-1}
    for (int i = 1; i <= k; ++i)
        coeffs[static_cast<size_t>(k - i)] = f[static_cast<size_t>(i)];
    return TwistedPoly(std::move(coeffs));
}

TwistedFamily::TwistedFamily(int kmax) {
    if (kmax < 0) throw std::invalid_argument("TwistedFamily: kmax must be >= 0");
    h_.resize(static_cast<size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) h_[static_cast<size_t>(k)] = BigRat(static_cast<long>(k));
    rows_.resize(static_cast<size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k)
        rows_[static_cast<size_t>(k)] = solve_coefficients(k, h_[static_cast<size_t>(k)]);
}

TwistedFamily::TwistedFamily(int kmax, std::vector<BigRat> h) : h_(std::move(h)) {
    if (kmax < 0) throw std::invalid_argument("TwistedFamily: kmax must be >= 0");
    if (h_.size() != static_cast<size_t>(kmax) + 1)
        throw std::invalid_argument("TwistedFamily: h must have kmax + 1 entries");
    rows_.resize(static_cast<size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k)
        rows_[static_cast<size_t>(k)] = solve_coefficients(k, h_[static_cast<size_t>(k)]);
}

const BigRat& TwistedFamily::h(int k) const {
    if (k < 0 || k > kmax()) throw std::out_of_range("TwistedFamily::h: k out of range");
    return h_[static_cast<size_t>(k)];
}

const TwistedPoly& TwistedFamily::beta(int k) const {
    if (k < 0 || k > kmax()) throw std::out_of_range("TwistedFamily::beta: k out of range");
    return rows_[static_cast<size_t>(k)];
}

RatFunc TwistedFamily::number(int k) const {
    return beta(k).coeff(0);
}

RatFunc TwistedFamily::f(int k, int i) const {
    if (i < 1 || i > k) throw std::out_of_range("TwistedFamily::f: need 1 <= i <= k");
    return beta(k).coeff(k - i);
}

TwistedPoly twisted_bernoulli(int k) {
    return solve_coefficients(k, BigRat(static_cast<long>(k)));
}

RatFunc twisted_bernoulli_number(int k) {
    return twisted_bernoulli(k).coeff(0);
}

TwistedPoly twisted_bernoulli_gf(int k, int order) {
    if (k < 0) throw std::invalid_argument("twisted_bernoulli_gf: k must be >= 0");
    if (order < k)
        throw std::invalid_argument("twisted_bernoulli_gf: truncation order must be >= k");
    // numerator t * e^{xt}: coefficient of t^j is x^{j-1}/(j-1)!.
    TruncSeries num(order);
    for (int j = 1; j <= order; ++j)
        num.set_coeff(j, TwistedPoly::x_monomial(j - 1, RatFunc(factorial(j - 1).inverse())));
    // denominator y * e^t - 1: t^0 -> y - 1, t^j -> y/j!.
    TruncSeries den(order);
    const RatFunc y = RatFunc::var();
    den.set_coeff(0, TwistedPoly(y - RatFunc(BigRat(1))));
    for (int j = 1; j <= order; ++j)
        den.set_coeff(j, TwistedPoly(y * RatFunc(factorial(j).inverse())));
    TruncSeries gf = num * den.inverse();
    return gf.coeff(k).scaled(RatFunc(factorial(k)));
}

bool forward_difference_holds(const TwistedPoly& f, int k, const BigRat& h_k) {
    if (k < 1) throw std::invalid_argument("forward_difference_holds: k must be >= 1");
    TwistedPoly lhs = f.subst_x_affine(BigRat(1), BigRat(1)).scaled(RatFunc::var()) - f;
    TwistedPoly rhs = TwistedPoly::x_monomial(k - 1, RatFunc(h_k));
    return lhs == rhs;
}

bool check_forward_difference(int k) {
    return forward_difference_holds(twisted_bernoulli(k), k, BigRat(static_cast<long>(k)));
}

bool decomposition_holds(const TwistedPoly& f, int k, int M) {
    if (k < 1) throw std::invalid_argument("decomposition_holds: k must be >= 1");
    if (M < 1) throw std::invalid_argument("decomposition_holds: M must be >= 1");
    const TwistedPoly stretched = f.subst_y_pow(M);
    const BigRat Minv(1, static_cast<long>(M));
    TwistedPoly sum;
    for (int b = 0; b < M; ++b) {
        TwistedPoly term = stretched.subst_x_affine(Minv, BigRat(static_cast<long>(b)) * Minv);
        sum = sum + term.scaled(RatFunc(PolyQ::monomial(b, BigRat(1))));
    }
    TwistedPoly rhs = sum.scaled(RatFunc(BigRat(static_cast<long>(M)).pow(k - 1)));
    return f == rhs;
}

bool check_decomposition(int k, int M) {
    return decomposition_holds(twisted_bernoulli(k), k, M);
}

bool check_symmetry(int k) {
    if (k < 1) throw std::invalid_argument("check_symmetry: k must be >= 1");
    TwistedPoly beta = twisted_bernoulli(k);
    BigRat sign = (k % 2 == 0) ? BigRat(1) : BigRat(-1);
    TwistedPoly lhs = beta.subst_y_inv().scaled(RatFunc(sign));
    TwistedPoly rhs = beta.subst_x_affine(BigRat(-1), BigRat(1)).scaled(RatFunc::var());
    return lhs == rhs;
}

bool check_addition(int k) {
    if (k < 0) throw std::invalid_argument("check_addition: k must be >= 0");
    TwistedFamily fam(k);
    const TwistedPoly& beta = fam.beta(k);
    // Compare coefficients of x'^m in beta_k(x + x') =
    // sum_i C(k,i) x'^{k-i} beta_i(x): for each m the left side is
    // sum_{j >= m} c_j C(j, m) x^{j-m} and the right side C(k, m) beta_{k-m}.
    for (int m = 0; m <= k; ++m) {
        std::vector<RatFunc> lhs_coeffs;
        for (int j = m; j <= beta.xdegree(); ++j)
            lhs_coeffs.push_back(beta.coeff(j) * RatFunc(binomial(j, m)));
        TwistedPoly lhs(std::move(lhs_coeffs));
        TwistedPoly rhs = fam.beta(k - m).scaled(RatFunc(binomial(k, m)));
        if (lhs != rhs) return false;
    }
    return true;
}

bool check_inversion_numbers(int k) {
    if (k < 1) throw std::invalid_argument("check_inversion_numbers: k must be >= 1");
    RatFunc b = twisted_bernoulli_number(k);
    RatFunc lhs = b.subst_inv();
    if (k == 1) return lhs == -(RatFunc(BigRat(1)) + b);
    BigRat sign = (k % 2 == 0) ? BigRat(1) : BigRat(-1);
    return lhs == b * RatFunc(sign);
}

PhiReport phi_structure(int k, int i, const BigRat& h_k) {
    if (k < 1 || i < 1 || i > k)
        throw std::invalid_argument("phi_structure: need k >= 1 and 1 <= i <= k");
    TwistedPoly row = solve_coefficients(k, h_k);
    RatFunc fki = row.coeff(k - i);
    PolyQ y_minus_1({BigRat(-1), BigRat(1)});
    RatFunc prod = fki * RatFunc(y_minus_1.pow(static_cast<unsigned>(i)));
    PhiReport rep;
    rep.is_polynomial = (prod.den().degree() == 0);
    if (!rep.is_polynomial) return rep;
    rep.phi = prod.num();
    rep.integral_coeffs = !h_k.is_integer() || rep.phi.is_integral();
    rep.degree_bound_ok = rep.phi.degree() <= i - 1;
    BigRat at_zero = rep.phi.eval(BigRat(0));
    rep.base_value_ok = (i >= 2) ? at_zero.is_zero() : (at_zero == h_k);
    return rep;
}

PhiReport phi_structure(int k, int i) {
    return phi_structure(k, i, BigRat(static_cast<long>(k)));
}

bool uniqueness_probe(int k, const TwistedPoly& perturbation) {
    if (k < 1) throw std::invalid_argument("uniqueness_probe: k must be >= 1");
    if (perturbation.is_zero())
        throw std::invalid_argument("uniqueness_probe: perturbation must be nonzero");
    TwistedPoly g = twisted_bernoulli(k) + perturbation;
    bool fd = forward_difference_holds(g, k, BigRat(static_cast<long>(k)));
    bool dec = decomposition_holds(g, k, 2);
    return !(fd && dec);
}

} // namespace tbm
