#pragma once

#include <map>
#include <string>
#include <utility>

#include "qaffine/zpoly.hpp"

namespace qaffine {

// Sparse polynomial in two spectral variables (z, w) with QScalar
// coefficients. Only used where a single variable is not enough, e.g. the
// Yang-Baxter product. Invariant: no zero coefficients are stored.
class BiPoly {
public:
    using Key = std::pair<int, int>; // (z-exponent, w-exponent)

    BiPoly() = default;

    // Embeddings of a one-variable polynomial p:
    static BiPoly in_z(const ZPoly& p);  // p(z)
    static BiPoly in_w(const ZPoly& p);  // p(w)
    static BiPoly in_zw(const ZPoly& p); // p(z*w)

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t term_count() const { return coeffs_.size(); }
    const std::map<Key, QScalar>& terms() const { return coeffs_; }

    void add_to_coeff(int ze, int we, const QScalar& c);

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly operator+(const BiPoly& o) const {
        BiPoly r = *this;
        r += o;
        return r;
    }
    BiPoly operator-(const BiPoly& o) const {
        BiPoly r = *this;
        r -= o;
        return r;
    }
    BiPoly operator*(const BiPoly& o) const;

    bool operator==(const BiPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    std::string to_string() const; // "(c)*z^i*w^j + ..." in key order

private:
    std::map<Key, QScalar> coeffs_;
};

Cplx evaluate_numeric(const BiPoly& p, Cplx q0, Cplx z0, Cplx w0);

} // namespace qaffine
