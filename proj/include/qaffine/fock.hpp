#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qaffine/coeff_ctx.hpp"
#include "qaffine/q_numbers.hpp"
#include "qaffine/qscalar.hpp"

namespace qaffine {

// Basis state of the charged boson-fermion Fock space: a product of boson
// creation modes a_{-n} (n >= 1, with multiplicity), distinct fermion
// creation modes b_{-r} (r a positive half-odd integer), and e^{pQ} acting
// on the vacuum.
//
// Canonical form: boson modes ascending; fermion modes strictly ascending in
// the creation string read left to right (the sign convention counts the
// transpositions needed to restore this order). Fermion modes are stored
// doubled (2r, an odd positive integer) so all bookkeeping stays integral,
// and the degree is cached doubled for the same reason.
struct FockState {
    int p = 0;
    std::vector<std::pair<int, int>> bosons; // (mode n, multiplicity), ascending n
    std::vector<int> fermions;               // doubled modes 2r, odd, ascending
    int deg2 = 0;                            // 2 * degree, cached

    static FockState vacuum() { return FockState{}; }
};

// 2 * (sum n*mult + sum r + p^2/2), recomputed from scratch.
int degree2(const FockState& s);

// Eigenvalue of the exact sign operator: (-1)^(2*degree), equivalently
// (-1)^(#fermion modes + p).
int parity_sign(const FockState& s);

bool operator==(const FockState& a, const FockState& b);
inline bool operator!=(const FockState& a, const FockState& b) { return !(a == b); }

// Total order used everywhere (map keys, basis enumeration, reports):
// by degree, then momentum, then the expanded ascending boson mode list
// lexicographically, then the fermion mode list.
bool operator<(const FockState& a, const FockState& b);

// Deterministic textual form, e.g. "p=1; a:[1,1,2]; b:[1/2,3/2]".
std::string encode(const FockState& s);
// Inverse of encode; throws std::invalid_argument on malformed or
// non-canonical input.
FockState decode_state(const std::string& text);

// Window of states a computation is allowed to inhabit. Degrees are doubled
// like everywhere else.
struct Truncation {
    int deg2_max = 0;
    int p_min = 0;
    int p_max = 0;

    bool contains(const FockState& s) const {
        return s.deg2 <= deg2_max && s.p >= p_min && s.p <= p_max;
    }
};

// Counts creations that fell outside the active truncation. Verifiers consult
// the counter to delimit the window where identities hold exactly; dropping is
// deliberate (operators legitimately produce out-of-window terms).
struct TruncationLog {
    long long dropped = 0;
};

// --- canonical state edits -------------------------------------------------

FockState with_boson_added(const FockState& s, int n); // pre: n >= 1
int boson_multiplicity(const FockState& s, int n);
FockState with_boson_removed(const FockState& s, int n); // pre: multiplicity >= 1
FockState with_momentum_shifted(const FockState& s, int delta);

// Fermion edits carry the transposition sign; ok == false means the edit
// annihilates the state (mode already present / absent).
struct FermionEdit {
    bool ok = false;
    int sign = 1;
    FockState state;
};
FermionEdit with_fermion_added(const FockState& s, int two_r);   // pre: two_r odd > 0
FermionEdit with_fermion_removed(const FockState& s, int two_r); // pre: two_r odd > 0

// All canonical states within the truncation, in the total order above.
std::vector<FockState> enumerate_basis(const Truncation& t);

// --- sparse vectors ----------------------------------------------------------

template <class Coeff>
class FockVectorT {
public:
    FockVectorT() = default;

    static FockVectorT unit(const FockState& s, Coeff c) {
        FockVectorT v;
        if (!coeff_is_zero(c))
            v.terms_.emplace(s, std::move(c));
        return v;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<FockState, Coeff>& terms() const { return terms_; }

    Coeff coefficient_of(const FockState& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? Coeff{} : it->second;
    }

    void add_term(const FockState& s, const Coeff& c) {
        if (coeff_is_zero(c))
            return;
        auto [it, inserted] = terms_.emplace(s, c);
        if (!inserted) {
            it->second += c;
            if (coeff_is_zero(it->second))
                terms_.erase(it);
        }
    }

    FockVectorT operator+(const FockVectorT& o) const {
        FockVectorT out = *this;
        for (const auto& [s, c] : o.terms_)
            out.add_term(s, c);
        return out;
    }
    FockVectorT operator-(const FockVectorT& o) const {
        FockVectorT out = *this;
        for (const auto& [s, c] : o.terms_)
            out.add_term(s, -c);
        return out;
    }
    FockVectorT& operator+=(const FockVectorT& o) {
        for (const auto& [s, c] : o.terms_)
            add_term(s, c);
        return *this;
    }
    // Fused *this += c * o without materializing the scaled copy.
    void add_scaled(const FockVectorT& o, const Coeff& c) {
        if (coeff_is_zero(c))
            return;
        if (coeff_is_one(c)) {
            for (const auto& [s, x] : o.terms_)
                add_term(s, x);
            return;
        }
        for (const auto& [s, x] : o.terms_)
            add_term(s, x * c);
    }
    FockVectorT scaled(const Coeff& c) const {
        FockVectorT out;
        if (coeff_is_zero(c))
            return out;
        for (const auto& [s, x] : terms_)
            out.add_term(s, x * c);
        return out;
    }
    bool operator==(const FockVectorT& o) const { return terms_ == o.terms_; }
    bool operator!=(const FockVectorT& o) const { return !(*this == o); }

private:
    std::map<FockState, Coeff> terms_;
};

using FockVector = FockVectorT<QScalar>;
using FockVectorN = FockVectorT<Cplx>;

// --- oscillator actions ------------------------------------------------------

// a_m: m < 0 creates mode -m; m > 0 contracts against mode m with
// [a_m, a_{-m}] = [2m]^2 / m applied once per unit of multiplicity.
template <class Ctx>
FockVectorT<typename Ctx::Coeff> apply_boson(const Ctx& ctx, int m,
                                             const FockVectorT<typename Ctx::Coeff>& v,
                                             const Truncation& t,
                                             TruncationLog* log = nullptr) {
    FockVectorT<typename Ctx::Coeff> out;
    for (const auto& [s, c] : v.terms()) {
        if (m < 0) {
            FockState ns = with_boson_added(s, -m);
            if (!t.contains(ns)) {
                if (log)
                    ++log->dropped;
                continue;
            }
            out.add_term(ns, c);
        } else {
            const int k = boson_multiplicity(s, m);
            if (k == 0)
                continue;
            Rat mult(k, m);
            mult.canonicalize();
            const QScalar amp = QScalar(mult) * qint_s(2 * m) * qint_s(2 * m);
            out.add_term(with_boson_removed(s, m), ctx.from_qscalar(amp) * c);
        }
    }
    return out;
}

// b_r for doubled mode two_r: negative creates b_{-|r|}, positive contracts
// with {b_r, b_{-r}} = [4r]/(2[2r]) = (q^{2r} + q^{-2r})/2; both pick up the
// sign of the transpositions walked past.
template <class Ctx>
FockVectorT<typename Ctx::Coeff> apply_fermion(const Ctx& ctx, int two_r,
                                               const FockVectorT<typename Ctx::Coeff>& v,
                                               const Truncation& t,
                                               TruncationLog* log = nullptr) {
    FockVectorT<typename Ctx::Coeff> out;
    for (const auto& [s, c] : v.terms()) {
        if (two_r < 0) {
            const FermionEdit e = with_fermion_added(s, -two_r);
            if (!e.ok)
                continue; // b_{-r}^2 = 0
            if (!t.contains(e.state)) {
                if (log)
                    ++log->dropped;
                continue;
            }
            out.add_term(e.state, e.sign < 0 ? -c : c);
        } else {
            const FermionEdit e = with_fermion_removed(s, two_r);
            if (!e.ok)
                continue;
            const QScalar amp = (QScalar::q_power(two_r) + QScalar::q_power(-two_r)) *
                                QScalar(Rat(1, 2));
            auto cc = ctx.from_qscalar(amp) * c;
            out.add_term(e.state, e.sign < 0 ? -cc : cc);
        }
    }
    return out;
}

// --- zero modes ----------------------------------------------------------------

enum class MomentumOp {
    ExpQ,     // e^{sQ}: shift p by s
    Momentum, // P: multiply by the p eigenvalue
    Cartan,   // K = q^{2P}
    Parity,   // the exact sign (-1)^{2 degree}
};

// Multiply every term by q^{qexp_per_p * p}; covers K, its inverse, and the
// other diagonal zero-mode factors the vertex operators need.
template <class Ctx>
FockVectorT<typename Ctx::Coeff> scale_by_momentum(const Ctx& ctx, int qexp_per_p,
                                                   const FockVectorT<typename Ctx::Coeff>& v) {
    FockVectorT<typename Ctx::Coeff> out;
    for (const auto& [s, c] : v.terms())
        out.add_term(s, ctx.q_power(qexp_per_p * s.p) * c);
    return out;
}

template <class Ctx>
FockVectorT<typename Ctx::Coeff> apply_momentum(const Ctx& ctx, MomentumOp op,
                                                int expq_shift,
                                                const FockVectorT<typename Ctx::Coeff>& v,
                                                const Truncation& t,
                                                TruncationLog* log = nullptr) {
    FockVectorT<typename Ctx::Coeff> out;
    switch (op) {
    case MomentumOp::ExpQ:
        for (const auto& [s, c] : v.terms()) {
            const FockState ns = with_momentum_shifted(s, expq_shift);
            if (!t.contains(ns)) {
                if (log)
                    ++log->dropped;
                continue;
            }
            out.add_term(ns, c);
        }
        break;
    case MomentumOp::Momentum:
        for (const auto& [s, c] : v.terms())
            out.add_term(s, ctx.from_long(s.p) * c);
        break;
    case MomentumOp::Cartan:
        return scale_by_momentum(ctx, 2, v);
    case MomentumOp::Parity:
        for (const auto& [s, c] : v.terms())
            out.add_term(s, parity_sign(s) < 0 ? -c : c);
        break;
    }
    return out;
}

// Projector onto the +1 or -1 eigenspace of the parity sign; equals
// (1 ± parity)/2 and is verified against that form in the tests.
template <class Coeff>
FockVectorT<Coeff> project_parity(int sign, const FockVectorT<Coeff>& v) {
    FockVectorT<Coeff> out;
    for (const auto& [s, c] : v.terms())
        if (parity_sign(s) == sign)
            out.add_term(s, c);
    return out;
}

// Multiply by the d-eigenvalue (minus the degree) of each term.
template <class Ctx>
FockVectorT<typename Ctx::Coeff> apply_grading(const Ctx& ctx,
                                               const FockVectorT<typename Ctx::Coeff>& v) {
    FockVectorT<typename Ctx::Coeff> out;
    for (const auto& [s, c] : v.terms()) {
        Rat eig(-s.deg2, 2);
        eig.canonicalize();
        out.add_term(s, ctx.from_qscalar(QScalar(eig)) * c);
    }
    return out;
}

} // namespace qaffine
