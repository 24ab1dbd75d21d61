#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qaffine/fock.hpp"
#include "qaffine/qscalar.hpp"
#include "qaffine/report.hpp"

namespace qaffine {

// One geometric term of a per-mode coefficient function: contributes
// coef * q^(qexp * n) at oscillator mode n.
struct GeomTerm {
    Rat coef;
    int qexp = 0;
};

// Evaluates the sum of the terms at mode n.
QScalar geom_sum(const std::vector<GeomTerm>& terms, int n);

// Zero-mode factor of the shape (sign * q^a * z^b)^{P}: acting on momentum p
// it multiplies by sign^p * q^(qexp_per_p * p) and shifts the z-exponent by
// zexp_per_p * p. The momentum it reads is always the one BEFORE the owning
// spec's e^{Q} shift (all e^{Q} stand to the left of all momentum powers).
struct MomentumFactor {
    int sign = 1;
    int qexp_per_p = 0;
    int zexp_per_p = 0;
};

// Pure exponential field
//
//   exp{sum_n c_n a_{-n} z^n} * exp{sum_n d_n a_n z^{-n}} * e^{s Q} * (zP factors)
//
// where c_n = geom_sum(creation, n) / [2n] and d_n = geom_sum(annihilation, n)
// / [2n]. The division by [2n] keeps the stored terms geometric for every
// field in the family; coefficient functions are evaluated lazily per mode up
// to the active truncation.
struct ExpFieldSpec {
    std::string name;
    std::vector<GeomTerm> creation;
    std::vector<GeomTerm> annihilation;
    int expq_shift = 0;
    std::vector<MomentumFactor> momentum;
    int weight2 = 0; // doubled homogeneity offset, additive under merging
};

// Generators available as finite commutant operators inside field
// definitions; both arise as the zero mode of the corresponding current.
enum class ChevGen { e1, f1 };

// Immutable description of an operator-valued Laurent series. Values are
// built with the factory functions below and applied by FieldEngine.
struct FieldOperator {
    enum class Kind {
        Exponential,    // a single ExpFieldSpec
        FermionField,   // the half-odd fermion generating series
        Scaled,         // base with argument multiplied by q^{arg_scale_qexp}
        Product,        // ordered factors, rightmost applied first
        ModeCommutator, // [base(z), M]_x = base(z) M - x M base(z)
        ScalarMultiple, // scale * base
    };

    Kind kind = Kind::Exponential;
    std::string name;
    int weight2 = 0; // exponent law: k = deg(target) - deg(source) - weight

    ExpFieldSpec spec;                         // Exponential
    std::shared_ptr<const FieldOperator> base; // Scaled/ModeCommutator/ScalarMultiple
    int arg_scale_qexp = 0;                    // Scaled; even so z^{1/2} never appears
    std::vector<FieldOperator> factors;        // Product
    ChevGen comm_gen = ChevGen::e1;            // ModeCommutator
    QScalar comm_factor;                       // ModeCommutator twist x
    QScalar scale;                             // ScalarMultiple
};

FieldOperator exp_field(ExpFieldSpec spec);
FieldOperator fermion_field();
// pre: arg_scale_qexp even (half-integer exponents would need q^{1/2})
FieldOperator scaled(FieldOperator base, int arg_scale_qexp);
// Factors are applied right to left. At most one fermion factor is allowed,
// and annihilation parts may only reach content already present in the input
// (bosonic factors must not reabsorb bosons an inner factor created); the
// named fields' product shapes satisfy both.
FieldOperator product(std::string name, std::vector<FieldOperator> factors);
FieldOperator mode_commutator(std::string name, FieldOperator base, ChevGen gen,
                              QScalar x);
FieldOperator scalar_multiple(FieldOperator base, QScalar c);

// Named constructors for the full operator family:
//   "E+", "E-"                 half boson exponentials
//   "B"                        fermion generating series
//   "X+", "X-"                 raising/lowering currents sqrt2 * B * E±
//   "psi+", "psi-"             diagonal currents (annihilation-only / creation-only)
//   "phi_1", "phi_0", "phi_-1" type I vertex operator components
//   "psi_-1", "psi_0", "psi_1" type II vertex operator components
//   "phi*_1", ... "psi*_-1"... duals: the opposite component at argument z*q^-2
// Throws std::invalid_argument for unknown names.
FieldOperator build_field(const std::string& name);

// A normal-ordered product of exponential factors: all creation exponentials
// stand left of all annihilation exponentials, every e^{Q} is moved left of
// every momentum power, and each momentum power reads the input's original
// momentum. Each factor is bound to a formal variable index.
struct NormalOrderedProduct {
    struct Factor {
        ExpFieldSpec spec;
        int var = 0;            // formal variable this factor's argument uses
        int arg_scale_qexp = 0; // argument multiplier q^{...}, even
    };
    std::vector<Factor> factors;
};

// Folds the factors of each variable into a single spec (argument scales are
// absorbed into the coefficient terms and momentum factors, e^{Q} shifts are
// summed). Factors must be listed with their variables already grouped or
// groupable; the result has one factor per distinct variable, ordered by
// variable index.
NormalOrderedProduct
normal_ordered_merge(const std::vector<NormalOrderedProduct::Factor>& factors);

// True when every coefficient function cancels identically and the combined
// zero-mode factor is trivial, so the product is the identity operator.
bool is_identity(const NormalOrderedProduct& merged);

// Asserts the homogeneity law behind argument rescaling: every series
// coefficient of the field applied to a basis state sits at the z-exponent
// (target degree - source degree - weight), and conjugating the grading
// operator into the field matches scaling the argument. The scale used for
// the explicit conjugation check is q^2, which keeps half-integer degrees
// exactly representable.
VerificationReport check_scaling_covariance(const FieldOperator& f,
                                            const Truncation& t);

} // namespace qaffine
