#pragma once

#include <map>
#include <string>

#include "qaffine/numeric.hpp"
#include "qaffine/qscalar.hpp"

namespace qaffine {

// Laurent polynomial in the spectral variable z with QScalar coefficients.
// Invariant: no zero coefficients are stored.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(QScalar c) { set_coeff(0, std::move(c)); }
    explicit ZPoly(long c) { set_coeff(0, QScalar(c)); }

    static ZPoly monomial(QScalar c, int exp) {
        ZPoly p;
        p.set_coeff(exp, std::move(c));
        return p;
    }
    static ZPoly z_power(int exp) { return monomial(QScalar(1), exp); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    bool is_constant() const; // zero or a single z^0 term
    bool is_monomial() const { return coeffs_.size() == 1; }

    int lowest_exp() const { return coeffs_.begin()->first; }   // pre: !is_zero()
    int highest_exp() const { return coeffs_.rbegin()->first; } // pre: !is_zero()
    std::size_t term_count() const { return coeffs_.size(); }
    const std::map<int, QScalar>& terms() const { return coeffs_; }

    QScalar coeff(int exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? QScalar() : it->second;
    }
    void set_coeff(int exp, QScalar c) {
        if (c.is_zero())
            coeffs_.erase(exp);
        else
            coeffs_[exp] = std::move(c);
    }
    void add_to_coeff(int exp, const QScalar& c);

    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    ZPoly operator+(const ZPoly& o) const {
        ZPoly r = *this;
        r += o;
        return r;
    }
    ZPoly operator-(const ZPoly& o) const {
        ZPoly r = *this;
        r -= o;
        return r;
    }
    ZPoly operator*(const ZPoly& o) const;
    ZPoly& operator*=(const ZPoly& o) { return *this = *this * o; }
    ZPoly operator-() const;

    ZPoly scaled(const QScalar& c) const;
    ZPoly shifted(int exp) const; // multiply by z^exp

    bool operator==(const ZPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const ZPoly& o) const { return !(*this == o); }

    // Descending z-exponents; each coefficient parenthesized, e.g.
    // "(q^2 - q^-2)*z^2 + (-1)*z + (q)". See docs/scalar-grammar.md.
    std::string to_string() const;

private:
    std::map<int, QScalar> coeffs_;
};

ZPoly operator*(const QScalar& c, const ZPoly& p);

// Exact substitution z = z0. pre: z0 nonzero when p has negative exponents.
QScalar zpoly_at(const ZPoly& p, const QScalar& z0);

Cplx evaluate_numeric(const ZPoly& p, Cplx q0, Cplx z0);

} // namespace qaffine
