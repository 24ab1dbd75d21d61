#include "qaffine/rat_func.hpp"

#include <stdexcept>

namespace qaffine {

void poly_divmod(const LaurentPolyQ& a, const LaurentPolyQ& b, LaurentPolyQ& quot,
                 LaurentPolyQ& rem) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    quot = LaurentPolyQ();
    rem = a;
    const int db = b.highest_exp();
    const Rat lb = b.coeff(db);
    while (!rem.is_zero() && rem.highest_exp() >= db) {
        const int e = rem.highest_exp() - db;
        const Rat c = rem.coeff(rem.highest_exp()) / lb;
        const LaurentPolyQ t = LaurentPolyQ::monomial(c, e);
        quot += t;
        rem -= t * b;
    }
}

LaurentPolyQ poly_gcd(LaurentPolyQ a, LaurentPolyQ b) {
    while (!b.is_zero()) {
        LaurentPolyQ q, r;
        poly_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a.scale(Rat(1) / a.coeff(a.highest_exp()));
    return a;
}

LaurentPolyQ poly_div_exact(const LaurentPolyQ& a, const LaurentPolyQ& b) {
    LaurentPolyQ q, r;
    poly_divmod(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("poly_div_exact: inexact division");
    return q;
}

RatFuncQ::RatFuncQ(const LaurentPolyQ& n, const LaurentPolyQ& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw std::domain_error("RatFuncQ: zero denominator");
    reduce();
}

void RatFuncQ::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPolyQ(Rat(1));
        return;
    }
    // Pull Laurent units out so both parts are ordinary with nonzero constant term.
    const int sn = num_.lowest_exp();
    const int sd = den_.lowest_exp();
    LaurentPolyQ n0 = num_.shifted(-sn);
    LaurentPolyQ d0 = den_.shifted(-sd);
    if (!n0.is_constant() && !d0.is_constant()) {
        const LaurentPolyQ g = poly_gcd(n0, d0);
        if (!g.is_one()) {
            n0 = poly_div_exact(n0, g);
            d0 = poly_div_exact(d0, g);
        }
    }
    const Rat lead = d0.coeff(0);
    if (lead != 1) {
        const Rat inv = Rat(1) / lead;
        n0.scale(inv);
        d0.scale(inv);
    }
    num_ = n0.shifted(sn - sd);
    den_ = std::move(d0);
}

RatFuncQ RatFuncQ::operator+(const RatFuncQ& o) const {
    if (num_.is_zero()) return o;
    if (o.num_.is_zero()) return *this;
    RatFuncQ r;
    if (den_ == o.den_) {
        r.num_ = num_ + o.num_;
        r.den_ = den_;
        if (r.num_.is_zero()) {
            r.den_ = LaurentPolyQ(Rat(1));
            return r;
        }
        if (!r.den_.is_one()) r.reduce();
        return r;
    }
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
    r.reduce();
    return r;
}

RatFuncQ RatFuncQ::operator-(const RatFuncQ& o) const { return *this + (-o); }

RatFuncQ RatFuncQ::operator-() const {
    RatFuncQ r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFuncQ RatFuncQ::operator*(const RatFuncQ& o) const {
    if (num_.is_zero() || o.num_.is_zero()) return RatFuncQ();
    RatFuncQ r;
    r.num_ = num_ * o.num_;
    r.den_ = den_ * o.den_;
    if (!r.den_.is_one()) r.reduce();
    return r;
}

RatFuncQ RatFuncQ::operator/(const RatFuncQ& o) const { return *this * o.reciprocal(); }

RatFuncQ RatFuncQ::reciprocal() const {
    if (num_.is_zero()) throw std::domain_error("RatFuncQ: reciprocal of zero");
    RatFuncQ r;
    r.num_ = den_;
    r.den_ = num_;
    r.reduce();
    return r;
}

RatFuncQ RatFuncQ::subst_q_power(int k) const {
    return RatFuncQ(num_.subst_q_power(k), den_.subst_q_power(k));
}

std::string RatFuncQ::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace qaffine
