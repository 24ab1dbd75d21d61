#pragma once

#include <string>

#include "qaffine/fock.hpp"
#include "qaffine/rational.hpp"
#include "qaffine/report.hpp"

namespace qaffine {

// Verification suites for the level-two free-field realization. Each
// function checks one family of operator identities on the truncated Fock
// space and returns a deterministic report: PASS means a structurally zero
// difference (exact suites) or a residual within the stated tolerance
// (numeric suites); SKIPPED marks states or modes whose images could leave
// the window, which are counted but never silently asserted.
//
// `parallel` fans independent checks out across OpenMP threads; the report
// content is identical either way.

// Heisenberg and Clifford generator relations: [a_m, a_n] and {b_r, b_s}
// on every basis state, boson modes |m|,|n| <= 2, fermion modes
// |r|,|s| <= 5/2, plus the momentum/zero-mode exchange K e^Q = q^2 e^Q K.
VerificationReport verify_oscillators(const Truncation& t, bool parallel = true);

// Current-algebra relations in mode form for |m|,|n| <= mode_range:
// Cartan conjugations, boson-current commutators, [X^+_m, X^-_n] against
// the exact psi^{+-} mode expansion, the quadratic current relation, and
// the degree gradings.
VerificationReport verify_drinfeld(const Truncation& t, int mode_range = 2,
                                   bool parallel = true);

// Finite-generator presentation: Cartan conjugations, [e_i, f_j], both
// cubic Serre relations, and the affine degree gradings, with
// e_0 = X^-_1 t_1^{-1} and f_0 = t_1 X^+_{-1}.
VerificationReport verify_chevalley(const Truncation& t, bool parallel = true);

// Two-point contraction identities for the fundamental fields: each product
// A(z)B(w) is compared against its contraction kernel (expanded in the
// stated region) times the merged normal-ordered operator, coefficient by
// coefficient, through at least `series_order` powers of the ratio variable
// on the vacuum and a panel of excited states. The fermion bilinear
// B(z)B(w) is checked against an additive scalar kernel plus the
// normal-ordered pair.
VerificationReport verify_normal_ordering(int series_order = 8,
                                          bool parallel = true);

// Commutation relations between the vertex-operator components and the
// finite generators e_1, f_1, t_1, verified mode by mode for z-exponents
// |k| <= mode_range, plus the two current-commutation identities that pin
// the fermionic factors of the top components.
VerificationReport verify_intertwiner_relations(const Truncation& t,
                                                int mode_range = 3,
                                                bool parallel = true);

// Which exchange-algebra family to verify.
enum class ExchangePair {
    TypeI,  // phi_j(z2) phi_i(z1) = sum R^{kl}_{ij}(z1/z2) phi_k(z1) phi_l(z2)
    TypeII, // psi_i(z1) psi_j(z2) = sum R^{kl}_{ij}(z1/z2) psi_l(z2) psi_k(z1)
    Mixed,  // psi_i(z1) phi_j(z2) = -phi_j(z2) psi_i(z1)
};
std::string exchange_pair_name(ExchangePair pair);

// Exchange relations by exact rational reconstruction: both orderings of a
// product are computed as matrix-element series between panel states (all
// weight-compatible pairs with doubled degree <= panel_degree2), multiplied
// by the cleared R-matrix denominator, and compared as Laurent polynomials,
// with all tail coefficients through `series_order` further orders checked
// to vanish exactly. Incomplete reconstructions are SKIPPED with
// diagnostics, never passed.
VerificationReport verify_exchange(ExchangePair pair, const Truncation& t,
                                   int panel_degree2 = 4, int series_order = 12,
                                   bool parallel = true);

// Numeric verification that phi_i(z) phistar_i(z) is the stated multiple of
// the identity: partial sums of the diagonal matrix elements over
// intermediate states of degree <= degree_cap at q = q0, with monotone
// residual decay demanded over the final three increments; off-diagonal
// elements must tend to zero. Also runs the exact structural checks: the
// merged four-factor normal-ordered product is the identity, and the
// component ratios of the scalar factors.
VerificationReport verify_invertibility(const Rat& q0, const Truncation& t,
                                        int degree_cap = 12, int panel_degree2 = 4,
                                        double tolerance = 1e-6,
                                        bool parallel = true);

// Module structure: highest-weight conditions at |0> and e^Q |0>, parity
// projectors commuting with sampled algebra generators, the off-sector
// property P s Theta(z) P s = 0 for all twelve vertex components mode by
// mode, the degree operator cross-check, and scaling covariance of the
// components.
VerificationReport verify_module_structure(const Truncation& t,
                                           bool parallel = true);

} // namespace qaffine
