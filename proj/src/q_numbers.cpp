#include "qaffine/q_numbers.hpp"

#include <stdexcept>

namespace qaffine {

LaurentPolyQ qint(int n) {
    LaurentPolyQ p;
    if (n == 0) return p;
    const int a = n > 0 ? n : -n;
    for (int e = a - 1; e >= 1 - a; e -= 2) p.set_coeff(e, Rat(n > 0 ? 1 : -1));
    return p;
}

LaurentPolyQ qfactorial(int n) {
    if (n < 0) throw std::domain_error("qfactorial: negative argument");
    LaurentPolyQ p(Rat(1));
    for (int k = 2; k <= n; ++k) p *= qint(k);
    return p;
}

LaurentPolyQ qbinom(int n, int r) {
    if (r < 0 || r > n) return LaurentPolyQ();
    const RatFuncQ v = RatFuncQ(qfactorial(n)) / RatFuncQ(qfactorial(r) * qfactorial(n - r));
    // The quotient of factorials is always a Laurent polynomial.
    if (!v.is_poly()) throw std::logic_error("qbinom: non-polynomial quotient");
    return v.num();
}

} // namespace qaffine
