#include "qaffine/zratfunc.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qaffine {

void zpoly_divmod(const ZPoly& a, const ZPoly& b, ZPoly& quot, ZPoly& rem) {
    quot = ZPoly();
    rem = a;
    const int db = b.highest_exp();
    const QScalar lead_inv = b.coeff(db).pow(-1);
    while (!rem.is_zero() && rem.highest_exp() >= db) {
        const int exp = rem.highest_exp() - db;
        const QScalar c = rem.coeff(rem.highest_exp()) * lead_inv;
        quot.add_to_coeff(exp, c);
        rem -= b.scaled(c).shifted(exp);
    }
}

ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
    while (!b.is_zero()) {
        ZPoly q, r;
        zpoly_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero())
        return a;
    return a.scaled(a.coeff(a.highest_exp()).pow(-1));
}

ZPoly zpoly_div_exact(const ZPoly& a, const ZPoly& b) {
    ZPoly q, r;
    zpoly_divmod(a, b, q, r);
    if (!r.is_zero())
        throw std::logic_error("zpoly_div_exact: division left a remainder");
    return q;
}

ZRatFunc::ZRatFunc(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw std::invalid_argument("ZRatFunc: zero denominator");
    reduce();
}

void ZRatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = ZPoly(1);
        return;
    }
    // Move Laurent units into the numerator so the denominator is ordinary
    // with a z^0 term.
    const int sd = den_.lowest_exp();
    if (sd != 0) {
        den_ = den_.shifted(-sd);
        num_ = num_.shifted(-sd);
    }
    if (!den_.is_constant()) {
        // Strip the numerator's unit before the polynomial gcd, then restore it.
        const int sn = num_.lowest_exp();
        ZPoly num_ord = sn == 0 ? num_ : num_.shifted(-sn);
        if (!num_ord.is_constant()) {
            const ZPoly g = zpoly_gcd(num_ord, den_);
            if (!g.is_constant()) {
                num_ord = zpoly_div_exact(num_ord, g);
                den_ = zpoly_div_exact(den_, g);
            }
        }
        num_ = sn == 0 ? num_ord : num_ord.shifted(sn);
    }
    // Normalize the denominator's lowest coefficient to 1.
    const QScalar low = den_.coeff(0);
    if (!low.is_one()) {
        const QScalar inv = low.pow(-1);
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

ZRatFunc ZRatFunc::operator+(const ZRatFunc& o) const {
    if (is_zero())
        return o;
    if (o.is_zero())
        return *this;
    if (den_ == o.den_)
        return ZRatFunc(num_ + o.num_, den_);
    return ZRatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ZRatFunc ZRatFunc::operator-(const ZRatFunc& o) const { return *this + (-o); }

ZRatFunc ZRatFunc::operator*(const ZRatFunc& o) const {
    if (is_zero() || o.is_zero())
        return ZRatFunc();
    if (is_poly() && o.is_poly()) {
        ZRatFunc r;
        r.num_ = num_ * o.num_;
        r.den_ = ZPoly(1);
        return r;
    }
    return ZRatFunc(num_ * o.num_, den_ * o.den_);
}

ZRatFunc ZRatFunc::operator-() const {
    ZRatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

ZRatFunc ZRatFunc::reciprocal() const {
    if (is_zero())
        throw std::domain_error("ZRatFunc::reciprocal of zero");
    return ZRatFunc(den_, num_);
}

std::string ZRatFunc::to_string() const {
    if (is_poly())
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Cplx evaluate_numeric(const ZRatFunc& f, Cplx q0, Cplx z0) {
    const Cplx den = evaluate_numeric(f.den(), q0, z0);
    if (std::abs(den) < 1e-300)
        throw PoleError(f.den().to_string());
    return evaluate_numeric(f.num(), q0, z0) / den;
}

} // namespace qaffine
