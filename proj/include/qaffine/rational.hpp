#pragma once

#include <gmpxx.h>
#include <string>

namespace qaffine {

// Exact rational scalar backing all symbolic coefficients.
using Rat = mpq_class;

inline Rat rat_pow(const Rat& x, unsigned k) {
    Rat r(1);
    Rat b = x;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

inline std::string rat_to_string(const Rat& x) { return x.get_str(); }

} // namespace qaffine
