#pragma once

#include <stdexcept>

#include "qaffine/qscalar.hpp"

namespace qaffine {

// q-integer [n] = (q^n - q^-n)/(q - q^-1), a Laurent polynomial:
// [n] = q^{n-1} + q^{n-3} + ... + q^{1-n} for n > 0, [0] = 0, [-n] = -[n].
LaurentPolyQ qint(int n);

// [n]! = [n][n-1]...[1], n >= 0.
LaurentPolyQ qfactorial(int n);

// Gaussian binomial [n]!/([n-r]! [r]!); a Laurent polynomial for 0 <= r <= n.
LaurentPolyQ qbinom(int n, int r);

inline QScalar qint_s(int n) { return QScalar(qint(n)); }

inline RatFuncQ q_integer(int n) { return RatFuncQ(qint(n)); }

// [2r] for a half-integer index r, taking the doubled index 2r so that all
// q-exponents stay integral.
inline RatFuncQ q_integer_double(int two_r) { return RatFuncQ(qint(two_r)); }

inline RatFuncQ q_factorial(int n) { return RatFuncQ(qfactorial(n)); }
inline RatFuncQ q_binomial(int n, int r) {
    if (r < 0 || r > n) throw std::domain_error("q_binomial: need 0 <= r <= n");
    return RatFuncQ(qbinom(n, r));
}

} // namespace qaffine
