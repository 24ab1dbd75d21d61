#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "qaffine/qscalar.hpp"

namespace qaffine {

using Cplx = std::complex<double>;

// Raised when a numeric substitution lands on a vanishing denominator;
// carries the canonical rendering of the denominator that vanished.
struct PoleError : std::runtime_error {
    std::string denominator;
    explicit PoleError(std::string den)
        : std::runtime_error("evaluation hit a pole of 1/(" + den + ")"),
          denominator(std::move(den)) {}
};

Cplx evaluate_numeric(const LaurentPolyQ& p, Cplx q0);
Cplx evaluate_numeric(const RatFuncQ& f, Cplx q0);
Cplx evaluate_numeric(const QScalar& x, Cplx q0);

Cplx pow_int(Cplx base, int e);

} // namespace qaffine
