#pragma once

#include <string>

#include "qaffine/rat_func.hpp"

namespace qaffine {

// Element of the coefficient field: rational functions in q extended by sqrt(2),
// stored as rational_part + sqrt2_part * sqrt(2) with both parts canonical.
// Division uses the conjugate: 1/(a + b*sqrt2) = (a - b*sqrt2)/(a^2 - 2 b^2).
class QScalar {
public:
    QScalar() = default;
    QScalar(const Rat& c) : r_(c) {}
    QScalar(long c) : r_(Rat(c)) {}
    QScalar(const LaurentPolyQ& p) : r_(p) {}
    QScalar(const RatFuncQ& r) : r_(r) {}
    QScalar(RatFuncQ r, RatFuncQ s) : r_(std::move(r)), s_(std::move(s)) {}

    static QScalar sqrt2() { return QScalar(RatFuncQ(), RatFuncQ(Rat(1))); }
    static QScalar q_power(int exp) { return QScalar(RatFuncQ::q_power(exp)); }

    const RatFuncQ& rational_part() const { return r_; }
    const RatFuncQ& sqrt2_part() const { return s_; }

    bool is_zero() const { return r_.is_zero() && s_.is_zero(); }
    bool is_one() const { return r_.is_one() && s_.is_zero(); }
    bool is_rational() const { return s_.is_zero(); }

    QScalar operator+(const QScalar& o) const { return QScalar(r_ + o.r_, s_ + o.s_); }
    QScalar operator-(const QScalar& o) const { return QScalar(r_ - o.r_, s_ - o.s_); }
    QScalar operator-() const { return QScalar(-r_, -s_); }
    QScalar operator*(const QScalar& o) const;
    QScalar operator/(const QScalar& o) const { return *this * o.reciprocal(); }
    QScalar& operator+=(const QScalar& o) {
        r_ += o.r_;
        s_ += o.s_;
        return *this;
    }
    QScalar& operator-=(const QScalar& o) {
        r_ -= o.r_;
        s_ -= o.s_;
        return *this;
    }
    QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
    QScalar& operator/=(const QScalar& o) { return *this = *this / o; }

    QScalar reciprocal() const; // pre: !is_zero()
    QScalar pow(int k) const;   // negative k inverts; pre for k < 0: !is_zero()

    bool operator==(const QScalar& o) const { return r_ == o.r_ && s_ == o.s_; }
    bool operator!=(const QScalar& o) const { return !(*this == o); }

    QScalar subst_q_power(int k) const {
        return QScalar(r_.subst_q_power(k), s_.subst_q_power(k));
    }

    // Canonical string form: "R", "sqrt2*(S)" or "R + sqrt2*(S)" with R, S
    // rendered by RatFuncQ::to_string. See docs/scalar-grammar.md.
    std::string to_string() const;
    static QScalar from_string(const std::string& text); // throws on malformed input

private:
    RatFuncQ r_, s_;
};

QScalar operator*(const Rat& c, const QScalar& x);

} // namespace qaffine
