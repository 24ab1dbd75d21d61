#pragma once

#include "qaffine/report.hpp"
#include "qaffine/zmatrix.hpp"

namespace qaffine {

// The 3-dimensional spectral-parameter representation on the ordered basis
// (v_1, v_0, v_{-1}); basis index j carries the spin label m = 1 - j.
struct EvalRep {
    Mat3 e1, f1, t1, e0, f0, t0;
};

EvalRep build_evaluation_rep();

// Defining relations on the 3-dimensional representation: Cartan
// conjugations, ladder commutators, level-zero constraint, and both cubic
// Serre identities, all symbolic in z.
VerificationReport check_evalrep_relations();

} // namespace qaffine
