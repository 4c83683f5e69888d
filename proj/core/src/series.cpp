#include "tbm/series.hpp"

#include <stdexcept>

namespace tbm {

TruncSeries::TruncSeries(int order) {
    if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
    c_.assign(static_cast<size_t>(order) + 1, TwistedPoly());
}

TruncSeries::TruncSeries(int order, std::vector<TwistedPoly> coeffs) : TruncSeries(order) {
    if (coeffs.size() > c_.size())
        throw std::invalid_argument("TruncSeries: more coefficients than order allows");
    for (size_t i = 0; i < coeffs.size(); ++i) c_[i] = std::move(coeffs[i]);
}

const TwistedPoly& TruncSeries::coeff(int j) const {
    if (j < 0 || j > order()) throw std::out_of_range("TruncSeries::coeff: index out of range");
    return c_[static_cast<size_t>(j)];
}

void TruncSeries::set_coeff(int j, TwistedPoly v) {
    if (j < 0 || j > order()) throw std::out_of_range("TruncSeries::set_coeff: index out of range");
    c_[static_cast<size_t>(j)] = std::move(v);
}

void TruncSeries::check_orders(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("TruncSeries: mismatched truncation orders");
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries::check_orders(a, b);
    TruncSeries r(a.order());
    for (int j = 0; j <= a.order(); ++j) r.c_[static_cast<size_t>(j)] = a.c_[j] + b.c_[j];
    return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries::check_orders(a, b);
    TruncSeries r(a.order());
    for (int j = 0; j <= a.order(); ++j) r.c_[static_cast<size_t>(j)] = a.c_[j] - b.c_[j];
    return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries::check_orders(a, b);
    TruncSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a.c_[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= a.order(); ++j) {
            if (b.c_[static_cast<size_t>(j)].is_zero()) continue;
            r.c_[static_cast<size_t>(i + j)] =
                r.c_[static_cast<size_t>(i + j)] + a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
        }
    }
    return r;
}

TruncSeries TruncSeries::inverse() const {
    const TwistedPoly& c0 = c_[0];
    if (c0.is_zero() || c0.xdegree() > 0)
        throw std::domain_error("TruncSeries::inverse: constant term must be a nonzero element of Q(y)");
    RatFunc b0 = c0.coeff(0).inverse();
    TruncSeries b(order());
    b.c_[0] = TwistedPoly(b0);
    for (int n = 1; n <= order(); ++n) {
        TwistedPoly acc;
        for (int j = 1; j <= n; ++j)
            acc = acc + c_[static_cast<size_t>(j)] * b.c_[static_cast<size_t>(n - j)];
        b.c_[static_cast<size_t>(n)] = (-acc).scaled(b0);
    }
    return b;
}

} // namespace tbm
