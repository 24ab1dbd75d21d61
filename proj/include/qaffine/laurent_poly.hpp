#pragma once

#include <map>
#include <string>

#include "qaffine/rational.hpp"

namespace qaffine {

// Laurent polynomial in the deformation parameter q over the rationals.
// Invariant: the coefficient map stores no zeros; the empty map is 0.
class LaurentPolyQ {
public:
    using Map = std::map<int, Rat>;

    LaurentPolyQ() = default;
    LaurentPolyQ(const Rat& c) {
        if (c != 0) coeffs_[0] = c;
    }
    LaurentPolyQ(long c) : LaurentPolyQ(Rat(c)) {}

    static LaurentPolyQ monomial(const Rat& c, int exp);
    static LaurentPolyQ q_power(int exp) { return monomial(1, exp); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return coeffs_.size() == 1; }
    bool is_constant() const;

    // pre: !is_zero()
    int lowest_exp() const { return coeffs_.begin()->first; }
    int highest_exp() const { return coeffs_.rbegin()->first; }
    int term_count() const { return static_cast<int>(coeffs_.size()); }

    const Map& terms() const { return coeffs_; }
    Rat coeff(int exp) const;

    LaurentPolyQ& operator+=(const LaurentPolyQ& o);
    LaurentPolyQ& operator-=(const LaurentPolyQ& o);
    LaurentPolyQ operator+(const LaurentPolyQ& o) const;
    LaurentPolyQ operator-(const LaurentPolyQ& o) const;
    LaurentPolyQ operator*(const LaurentPolyQ& o) const;
    LaurentPolyQ& operator*=(const LaurentPolyQ& o);
    LaurentPolyQ operator-() const;

    LaurentPolyQ& scale(const Rat& c);
    LaurentPolyQ shifted(int exp) const; // multiply by q^exp

    bool operator==(const LaurentPolyQ& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPolyQ& o) const { return !(*this == o); }

    // Substitute q -> q^k (k != 0; q -> q^{-1} gives the bar involution).
    LaurentPolyQ subst_q_power(int k) const;

    // Canonical rendering, highest exponent first, e.g. "2*q^3 - q + 1/2*q^-1".
    std::string to_string() const;

    void set_coeff(int exp, const Rat& c); // maintains the no-zero invariant

private:
    Map coeffs_;
};

LaurentPolyQ operator*(const Rat& c, const LaurentPolyQ& p);

} // namespace qaffine
