#pragma once

// Truncated power series in t with coefficients in Q(y)[x], used to expand
// generating functions exactly up to a fixed order.

#include "tbm/twisted_poly.hpp"

#include <vector>

namespace tbm {

class TruncSeries {
public:
    // Zero series of the given truncation order (terms t^0 .. t^order).
    explicit TruncSeries(int order);
    TruncSeries(int order, std::vector<TwistedPoly> coeffs);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const TwistedPoly& coeff(int j) const;
    void set_coeff(int j, TwistedPoly v);

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    // Product truncated to min(order a, order b).
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

    // Multiplicative inverse; requires the t^0 coefficient to be a nonzero
    // element of Q(y) (x-degree 0).
    TruncSeries inverse() const;

private:
    static void check_orders(const TruncSeries& a, const TruncSeries& b);
    std::vector<TwistedPoly> c_;
};

} // namespace tbm
