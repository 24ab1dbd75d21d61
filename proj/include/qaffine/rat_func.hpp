#pragma once

#include <string>

#include "qaffine/laurent_poly.hpp"

namespace qaffine {

// Quotient/remainder and gcd for ordinary polynomials in q (lowest exponent >= 0).
// The gcd is returned monic; gcd(0, 0) = 0.
void poly_divmod(const LaurentPolyQ& a, const LaurentPolyQ& b, LaurentPolyQ& quot,
                 LaurentPolyQ& rem);
LaurentPolyQ poly_gcd(LaurentPolyQ a, LaurentPolyQ b);
LaurentPolyQ poly_div_exact(const LaurentPolyQ& a, const LaurentPolyQ& b);

// Rational function in q with exact rational coefficients.
// Canonical form: gcd(num, den) = 1, den is an ordinary polynomial with
// lowest exponent 0 and lowest-degree coefficient 1 (Laurent units live in
// the numerator). Equality is structural equality of the two parts.
class RatFuncQ {
public:
    RatFuncQ() : den_(Rat(1)) {}
    RatFuncQ(const Rat& c) : num_(c), den_(Rat(1)) {}
    RatFuncQ(long c) : num_(Rat(c)), den_(Rat(1)) {}
    RatFuncQ(const LaurentPolyQ& n) : num_(n), den_(Rat(1)) {}
    RatFuncQ(const LaurentPolyQ& n, const LaurentPolyQ& d);

    static RatFuncQ q_power(int exp) { return RatFuncQ(LaurentPolyQ::q_power(exp)); }

    const LaurentPolyQ& num() const { return num_; }
    const LaurentPolyQ& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_poly() const { return den_.is_one(); }

    RatFuncQ operator+(const RatFuncQ& o) const;
    RatFuncQ operator-(const RatFuncQ& o) const;
    RatFuncQ operator*(const RatFuncQ& o) const;
    RatFuncQ operator/(const RatFuncQ& o) const;
    RatFuncQ operator-() const;
    RatFuncQ& operator+=(const RatFuncQ& o) { return *this = *this + o; }
    RatFuncQ& operator-=(const RatFuncQ& o) { return *this = *this - o; }
    RatFuncQ& operator*=(const RatFuncQ& o) { return *this = *this * o; }
    RatFuncQ& operator/=(const RatFuncQ& o) { return *this = *this / o; }

    RatFuncQ reciprocal() const; // pre: !is_zero()

    bool operator==(const RatFuncQ& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFuncQ& o) const { return !(*this == o); }

    RatFuncQ subst_q_power(int k) const;

    // "(num)/(den)" with both parts in polynomial rendering; bare "num" when den = 1.
    std::string to_string() const;

private:
    LaurentPolyQ num_, den_;
    void reduce();
};

} // namespace qaffine
