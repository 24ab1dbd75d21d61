#pragma once

#include <sstream>
#include <string>

#include "qaffine/numeric.hpp"
#include "qaffine/qscalar.hpp"

namespace qaffine {

// Coefficient contexts select the scalar field a computation runs over:
// exact symbolic values, or complex floating point with q pinned to q0.
// Every templated operation takes the context as its first argument and
// derives its coefficient type from it, so a whole verification runs in
// one mode end to end.

struct ExactCtx {
    using Coeff = QScalar;
    static constexpr const char* kModeName = "exact";

    QScalar from_qscalar(const QScalar& s) const { return s; }
    QScalar from_long(long v) const { return QScalar(v); }
    QScalar q_power(int k) const { return QScalar::q_power(k); }
    bool is_zero(const QScalar& c) const { return c.is_zero(); }
    std::string render(const QScalar& c) const { return c.to_string(); }
};

struct NumericCtx {
    using Coeff = Cplx;
    static constexpr const char* kModeName = "numeric";
    Cplx q0;

    explicit NumericCtx(Cplx q) : q0(q) {}
    Cplx from_qscalar(const QScalar& s) const { return evaluate_numeric(s, q0); }
    Cplx from_long(long v) const { return Cplx(static_cast<double>(v), 0.0); }
    Cplx q_power(int k) const { return pow_int(q0, k); }
    // Only structurally produced zeros are dropped; rounding residue is kept
    // so that tolerances are applied by the caller, never silently here.
    bool is_zero(const Cplx& c) const { return c == Cplx(0.0, 0.0); }
    std::string render(const Cplx& c) const {
        std::ostringstream os;
        os.precision(17);
        os << c.real();
        if (c.imag() != 0.0)
            os << (c.imag() < 0.0 ? " - " : " + ") << std::abs(c.imag()) << "i";
        return os.str();
    }
};

inline bool coeff_is_zero(const QScalar& c) { return c.is_zero(); }
inline bool coeff_is_zero(const Cplx& c) { return c == Cplx(0.0, 0.0); }

inline bool coeff_is_one(const QScalar& c) { return c.is_one(); }
inline bool coeff_is_one(const Cplx& c) { return c == Cplx(1.0, 0.0); }

} // namespace qaffine
