#pragma once

#include <array>
#include <string>

#include "qaffine/report.hpp"
#include "qaffine/zmatrix.hpp"
#include "qaffine/zpoly.hpp"

namespace qaffine {

// Spin-1 R-matrix on V (x) V. The tensor basis is ordered
//   (v1 v1, v1 v0, v1 v-1, v0 v1, v0 v0, v0 v-1, v-1 v1, v-1 v0, v-1 v-1),
// and entry(row, col) is the amplitude from the input pair indexed by the
// column to the output pair indexed by the row.
struct RMatrixValue {
    Mat9 m;
};

RMatrixValue build_rmatrix();

// Tensor-pair index helpers: component indices 0,1,2 stand for v_1, v_0,
// v_{-1}; the spin label of component index a is 1 - a.
inline int pair_index(int a, int b) { return 3 * a + b; }
inline int pair_weight(int idx) { return 2 - idx / 3 - idx % 3; }
std::string pair_label(int idx); // e.g. "(v1,v0)"

// The same matrix with the common denominator
// (z - q^2)(zq^2 - q^-2)(zq - q^-1) cleared; every entry is then a
// polynomial in z of degree <= 3. Used by the two-variable identity check.
struct RMatrixNumerators {
    std::array<std::array<ZPoly, 9>, 9> num;
    ZPoly den;
};
RMatrixNumerators rmatrix_numerators(const RMatrixValue& r);

// Exact value at a given spectral point (every denominator is checked first).
std::array<std::array<QScalar, 9>, 9> rmatrix_at(const RMatrixValue& r,
                                                 const QScalar& z0);
// Floating-point value at (q0, z0).
std::array<std::array<Cplx, 9>, 9> rmatrix_numeric(const RMatrixValue& r, Cplx q0,
                                                   Cplx z0);

// The value at z=1 is the swap operator on the tensor square.
VerificationReport check_initial_condition();
// Support pattern, weight conservation, proportional and repeated entries.
VerificationReport check_rmatrix_structure();
// Two-variable braid identity on the tensor cube: symbolic, numeric spot
// check, and the z=w=1 degeneration.
VerificationReport check_yang_baxter(bool parallel = true);
// Informational only: inversion relation and a crossing-type scan.
VerificationReport check_rmatrix_diagnostics();

} // namespace qaffine
