#include "tbm/padic.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace tbm {

PadicContext::PadicContext(const mpz_class& p, int precision) : p_(p), m_(precision) {
    if (!is_prime(p)) throw std::invalid_argument("PadicContext: p must be prime");
    if (precision < 1) throw std::invalid_argument("PadicContext: precision must be >= 1");
    pm_ = pow_ui(p_, static_cast<unsigned long>(m_));
}

long PadicContext::p_long() const {
    if (!p_.fits_slong_p()) throw std::domain_error("PadicContext: p does not fit in long");
    return p_.get_si();
}

PadicApprox PadicApprox::zero(const PadicContext& ctx) {
    return PadicApprox(ctx);
}

PadicApprox PadicApprox::make(const PadicContext& ctx, long v, const mpz_class& u,
                              int digits) {
    if (digits < 1 || digits > ctx.precision())
        throw std::invalid_argument("PadicApprox: digits out of range");
    mpz_class r;
    mpz_mod(r.get_mpz_t(), u.get_mpz_t(), ctx.p_pow_precision().get_mpz_t());
    if (r == 0 || r % ctx.p() == 0)
        throw std::invalid_argument("PadicApprox: unit part must be a p-adic unit");
    PadicApprox x(ctx);
    x.zero_ = false;
    x.v_ = v;
    x.u_ = r;
    x.digits_ = digits;
    return x;
}

PadicApprox PadicApprox::from_rational(const BigRat& q, const PadicContext& ctx) {
    if (q.is_zero()) return zero(ctx);
    long v = val_p(q, ctx.p()).value();
    mpz_class num = q.numerator(), den = q.denominator();
    long vn = val_p(num, ctx.p()).value();
    long vd = val_p(den, ctx.p()).value();
    mpz_class pvn = pow_ui(ctx.p(), static_cast<unsigned long>(vn));
    mpz_class pvd = pow_ui(ctx.p(), static_cast<unsigned long>(vd));
    mpz_class nu = num / pvn, du = den / pvd;
    mpz_class u;
    mpz_mod(u.get_mpz_t(), nu.get_mpz_t(), ctx.p_pow_precision().get_mpz_t());
    u = u * inv_mod(du, ctx.p_pow_precision());
    mpz_mod(u.get_mpz_t(), u.get_mpz_t(), ctx.p_pow_precision().get_mpz_t());
    return make(ctx, v, u, ctx.precision());
}

Valuation PadicApprox::valuation() const {
    if (zero_) return Valuation::infinite();
    return Valuation::finite(v_);
}

mpz_class PadicApprox::unit() const {
    if (zero_) throw std::domain_error("PadicApprox: zero has no unit part");
    mpz_class pd = pow_ui(ctx_.p(), static_cast<unsigned long>(digits_));
    mpz_class r;
    mpz_mod(r.get_mpz_t(), u_.get_mpz_t(), pd.get_mpz_t());
    return r;
}

int PadicApprox::digits() const {
    if (zero_) throw std::domain_error("PadicApprox: zero has no digit count");
    return digits_;
}

long PadicApprox::abs_precision() const {
    if (zero_) throw std::domain_error("PadicApprox: zero has no finite precision");
    return v_ + digits_;
}

BigRat PadicApprox::rational_rep() const {
    if (zero_) return BigRat(0);
    BigRat pv = BigRat(ctx_.p()).pow(v_);
    return pv * BigRat(unit());
}

void PadicApprox::check_same_context(const PadicApprox& o) const {
    if (ctx_ != o.ctx_)
        throw std::invalid_argument("PadicApprox: mismatched contexts");
}

PadicApprox PadicApprox::neg() const {
    if (zero_) return *this;
    PadicApprox r = *this;
    r.u_ = ctx_.p_pow_precision() - u_;
    mpz_mod(r.u_.get_mpz_t(), r.u_.get_mpz_t(), ctx_.p_pow_precision().get_mpz_t());
    return r;
}

PadicApprox PadicApprox::add(const PadicApprox& o) const {
    check_same_context(o);
    if (zero_) return o;
    if (o.zero_) return *this;
    // Absolute precision of the sum: both terms are certified modulo
    // p^min(v_i + digits_i).
    long prec = std::min(v_ + digits_, o.v_ + o.digits_);
    long vmin = std::min(v_, o.v_);
    long window = prec - vmin;  // >= 1 because digits >= 1
    mpz_class pw = pow_ui(ctx_.p(), static_cast<unsigned long>(window));
    // A shift at or beyond the window contributes nothing modulo p^window.
    mpz_class w(0);
    if (v_ - vmin < window)
        w += pow_ui(ctx_.p(), static_cast<unsigned long>(v_ - vmin)) * u_;
    if (o.v_ - vmin < window)
        w += pow_ui(ctx_.p(), static_cast<unsigned long>(o.v_ - vmin)) * o.u_;
    mpz_class wr;
    mpz_mod(wr.get_mpz_t(), w.get_mpz_t(), pw.get_mpz_t());
    if (wr == 0)
        throw precision_exhausted(
            "PadicApprox::add: all certified digits cancelled (sum is 0 mod p^" +
            std::to_string(prec) + "); raise the working precision");
    long t = val_p(wr, ctx_.p()).value();
    long v = vmin + t;
    int digits = static_cast<int>(prec - v);
    digits = std::min(digits, ctx_.precision());
    mpz_class pt = pow_ui(ctx_.p(), static_cast<unsigned long>(t));
    mpz_class u = wr / pt;
    return make(ctx_, v, u, digits);
}

PadicApprox PadicApprox::sub(const PadicApprox& o) const {
    return add(o.neg());
}

PadicApprox PadicApprox::mul(const PadicApprox& o) const {
    check_same_context(o);
    if (zero_ || o.zero_) return zero(ctx_);
    mpz_class u = u_ * o.u_;
    mpz_mod(u.get_mpz_t(), u.get_mpz_t(), ctx_.p_pow_precision().get_mpz_t());
    return make(ctx_, v_ + o.v_, u, std::min(digits_, o.digits_));
}

PadicApprox PadicApprox::inv() const {
    if (zero_) throw std::domain_error("PadicApprox: inverse of zero");
    return make(ctx_, -v_, inv_mod(u_, ctx_.p_pow_precision()), digits_);
}

PadicApprox PadicApprox::pow(long e) const {
    if (e == 0) {
        return make(ctx_, 0, 1, zero_ ? ctx_.precision() : digits_);
    }
    if (zero_) {
        if (e < 0) throw std::domain_error("PadicApprox: negative power of zero");
        return *this;
    }
    PadicApprox base = e < 0 ? inv() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1UL
                            : static_cast<unsigned long>(e);
    mpz_class u;
    mpz_powm_ui(u.get_mpz_t(), base.u_.get_mpz_t(), n, ctx_.p_pow_precision().get_mpz_t());
    long v = base.v_ * static_cast<long>(n);
    return make(ctx_, v, u, base.digits_);
}

bool PadicApprox::agrees_with(const PadicApprox& o) const {
    check_same_context(o);
    if (zero_ && o.zero_) return true;
    if (zero_ || o.zero_) {
        const PadicApprox& nz = zero_ ? o : *this;
        // Zero agrees with x when x is 0 modulo its own certified window,
        // which for a unit-normalized nonzero value never happens.
        return nz.v_ >= nz.abs_precision();
    }
    long prec = std::min(abs_precision(), o.abs_precision());
    if (v_ >= prec && o.v_ >= prec) return true;
    if (v_ != o.v_) return false;
    long d = prec - v_;
    mpz_class pd = pow_ui(ctx_.p(), static_cast<unsigned long>(d));
    mpz_class a, b;
    mpz_mod(a.get_mpz_t(), u_.get_mpz_t(), pd.get_mpz_t());
    mpz_mod(b.get_mpz_t(), o.u_.get_mpz_t(), pd.get_mpz_t());
    return a == b;
}

std::string PadicApprox::str() const {
    if (zero_) return "0";
    std::ostringstream os;
    os << ctx_.p() << "^" << v_ << " * " << unit().get_str()
       << " (mod " << ctx_.p() << "^" << (v_ + digits_) << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PadicApprox& x) {
    return os << x.str();
}

} // namespace tbm
