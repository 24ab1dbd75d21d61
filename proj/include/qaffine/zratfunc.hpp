#pragma once

#include <string>

#include "qaffine/zpoly.hpp"

namespace qaffine {

// Ordinary-polynomial division in z over the coefficient field:
// a = quot * b + rem with deg(rem) < deg(b). pre: b nonzero; lowest_exp >= 0.
void zpoly_divmod(const ZPoly& a, const ZPoly& b, ZPoly& quot, ZPoly& rem);

// Monic gcd (leading coefficient 1) of two ordinary polynomials in z.
ZPoly zpoly_gcd(ZPoly a, ZPoly b);

// Exact quotient; throws std::logic_error when the division leaves a remainder.
ZPoly zpoly_div_exact(const ZPoly& a, const ZPoly& b);

// Rational function in the spectral variable z with QScalar coefficients.
// Canonical form: numerator and denominator share no polynomial factor, the
// denominator is an ordinary polynomial with lowest exponent 0 whose lowest
// coefficient is 1, and Laurent units z^k live in the numerator. Equality of
// canonical forms is structural.
class ZRatFunc {
public:
    ZRatFunc() = default; // zero
    explicit ZRatFunc(ZPoly num) : num_(std::move(num)), den_(ZPoly(1)) {}
    explicit ZRatFunc(QScalar c) : num_(ZPoly(std::move(c))), den_(ZPoly(1)) {}
    explicit ZRatFunc(long c) : num_(ZPoly(c)), den_(ZPoly(1)) {}
    ZRatFunc(ZPoly num, ZPoly den); // pre: den nonzero; reduces to canonical form

    static ZRatFunc z_power(int exp) { return ZRatFunc(ZPoly::z_power(exp)); }

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_poly() const { return den_.is_one(); }

    ZRatFunc operator+(const ZRatFunc& o) const;
    ZRatFunc operator-(const ZRatFunc& o) const;
    ZRatFunc operator*(const ZRatFunc& o) const;
    ZRatFunc operator/(const ZRatFunc& o) const { return *this * o.reciprocal(); }
    ZRatFunc operator-() const;
    ZRatFunc& operator+=(const ZRatFunc& o) { return *this = *this + o; }
    ZRatFunc& operator-=(const ZRatFunc& o) { return *this = *this - o; }
    ZRatFunc& operator*=(const ZRatFunc& o) { return *this = *this * o; }
    ZRatFunc& operator/=(const ZRatFunc& o) { return *this = *this / o; }

    ZRatFunc reciprocal() const; // pre: !is_zero()

    bool operator==(const ZRatFunc& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const ZRatFunc& o) const { return !(*this == o); }

    // "(num)/(den)", or just the numerator rendering when den == 1.
    std::string to_string() const;

private:
    void reduce();

    ZPoly num_;
    ZPoly den_ = ZPoly(1);
};

Cplx evaluate_numeric(const ZRatFunc& f, Cplx q0, Cplx z0);

} // namespace qaffine
