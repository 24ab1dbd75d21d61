#include "qaffine/numeric.hpp"

#include <cmath>

namespace qaffine {

Cplx pow_int(Cplx base, int e) {
    if (e == 0) return Cplx(1.0, 0.0);
    Cplx b = e > 0 ? base : Cplx(1.0, 0.0) / base;
    unsigned n = e > 0 ? static_cast<unsigned>(e) : static_cast<unsigned>(-(long)e);
    Cplx r(1.0, 0.0);
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

Cplx evaluate_numeric(const LaurentPolyQ& p, Cplx q0) {
    if (!p.is_zero() && p.lowest_exp() < 0 && q0 == Cplx(0.0, 0.0)) throw PoleError("q");
    Cplx r(0.0, 0.0);
    for (const auto& [e, c] : p.terms()) r += c.get_d() * pow_int(q0, e);
    return r;
}

Cplx evaluate_numeric(const RatFuncQ& f, Cplx q0) {
    const Cplx den = evaluate_numeric(f.den(), q0);
    if (std::abs(den) < 1e-300) throw PoleError(f.den().to_string());
    return evaluate_numeric(f.num(), q0) / den;
}

Cplx evaluate_numeric(const QScalar& x, Cplx q0) {
    return evaluate_numeric(x.rational_part(), q0) +
           std::sqrt(2.0) * evaluate_numeric(x.sqrt2_part(), q0);
}

} // namespace qaffine
