#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qaffine/coeff_ctx.hpp"
#include "qaffine/fields.hpp"
#include "qaffine/fock.hpp"
#include "qaffine/q_numbers.hpp"

namespace qaffine {

// Operator-valued truncated Laurent series: doubled z-exponent -> vector.
// Exponents above exact_max2 are absent; under the truncation that produced
// the series their coefficients would be incomplete. Every stored coefficient
// is exact, and exponents at or below exact_max2 that are absent are exactly
// zero.
template <class Coeff>
struct LaurentSeriesT {
    std::map<int, FockVectorT<Coeff>> coeffs;
    int exact_max2 = 0;

    FockVectorT<Coeff> coefficient(int k2) const {
        auto it = coeffs.find(k2);
        return it == coeffs.end() ? FockVectorT<Coeff>{} : it->second;
    }
};
using LaurentSeries = LaurentSeriesT<QScalar>;
using LaurentSeriesN = LaurentSeriesT<Cplx>;

// Two-variable counterpart used for normal-ordered products; the key is the
// pair of doubled exponents of variables 0 and 1. Coefficients whose exponent
// SUM exceeds exact_total_max2 are absent (the sum fixes the target degree,
// so exactness is a condition on it alone).
template <class Coeff>
struct BiSeriesT {
    std::map<std::pair<int, int>, FockVectorT<Coeff>> coeffs;
    int exact_total_max2 = 0;

    FockVectorT<Coeff> coefficient(int k2_0, int k2_1) const {
        auto it = coeffs.find({k2_0, k2_1});
        return it == coeffs.end() ? FockVectorT<Coeff>{} : it->second;
    }
};
using BiSeries = BiSeriesT<QScalar>;
using BiSeriesN = BiSeriesT<Cplx>;

template <class Coeff>
int max_deg2(const FockVectorT<Coeff>& v) {
    int m = 0;
    for (const auto& [s, c] : v.terms())
        m = std::max(m, s.deg2);
    return m;
}

namespace detail {

inline std::vector<std::pair<int, int>>
merge_bosons(const std::vector<std::pair<int, int>>& a,
             const std::vector<std::pair<int, int>>& b) {
    std::vector<std::pair<int, int>> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
            out.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first)
            out.push_back(b[j++]);
        else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    return out;
}

inline std::string coeff_terms_signature(const ExpFieldSpec& s) {
    std::ostringstream os;
    for (const GeomTerm& t : s.creation)
        os << t.coef.get_str() << '^' << t.qexp << ',';
    os << '|';
    for (const GeomTerm& t : s.annihilation)
        os << t.coef.get_str() << '^' << t.qexp << ',';
    return os.str();
}

} // namespace detail

// Applies FieldOperator values over one coefficient context and truncation.
// The engine memoizes the finite zero-mode generators and the per-spec
// expansion tables, so it is cheap to reuse across many inputs but is not
// safe to share between threads.
template <class Ctx>
class FieldEngine {
public:
    using Coeff = typename Ctx::Coeff;
    using Vector = FockVectorT<Coeff>;
    using Series = LaurentSeriesT<Coeff>;

    FieldEngine(const Ctx& ctx, const Truncation& t) : ctx_(ctx), trunc_(t) {}

    const Ctx& context() const { return ctx_; }
    const Truncation& truncation() const { return trunc_; }

    // pre: v lies within the truncation. Momentum-window exits are counted in
    // the log; degree-cap truncation is encoded in exact_max2 instead.
    Series apply(const FieldOperator& f, const Vector& v, TruncationLog* log = nullptr) {
        Series s = apply_impl(f, v, trunc_.deg2_max, log);
        s.exact_max2 = trunc_.deg2_max - max_deg2(v) - f.weight2;
        prune(s);
        return s;
    }

    // Like apply, but keeps only coefficients of states with doubled degree
    // at most out_cap2 (the window for heavier targets is not widened). The
    // restriction is exact: every branch that could land at or below the cap
    // is still explored, including through the degree-preserving finite
    // generators inside commutator-defined fields. Only fields whose stages
    // cannot overshoot the final degree qualify, which rules out
    // multi-exponential products and the fermion series.
    Series apply_capped(const FieldOperator& f, const Vector& v, int out_cap2,
                        TruncationLog* log = nullptr) {
        reject_overshooting(f);
        Series s = apply_impl(f, v, std::min(trunc_.deg2_max, out_cap2), log);
        s.exact_max2 = trunc_.deg2_max - max_deg2(v) - f.weight2;
        prune(s);
        return s;
    }

    // Coefficient of z^{-m - weight} where mode2 = 2m; throws when the
    // requested exponent lies outside the exact window for this input.
    Vector apply_mode(const FieldOperator& f, int mode2, const Vector& v,
                      TruncationLog* log = nullptr) {
        const int k2 = -mode2 - f.weight2;
        const int window = trunc_.deg2_max - max_deg2(v) - f.weight2;
        if (k2 > window) {
            std::ostringstream os;
            os << "mode " << mode2 << "/2 of " << f.name
               << " lies outside the exact window " << window
               << "/2 at degree cap " << trunc_.deg2_max << "/2";
            for (const auto& [s, c] : v.terms())
                if (s.deg2 == max_deg2(v)) {
                    os << " for input " << encode(s);
                    break;
                }
            throw std::out_of_range(os.str());
        }
        return apply(f, v, log).coefficient(k2);
    }

    // e_1 / f_1 as finite operators (zero modes of the raising/lowering
    // currents); memoized per basis state. Each memo entry remembers how many
    // creations its computation dropped at the momentum wall, and replays that
    // count into the caller's log on every hit, so window tracking sees the
    // same drops whether the image came from the memo or was computed afresh.
    Vector chevalley(ChevGen g, const Vector& v, TruncationLog* log = nullptr) {
        auto& memo = g == ChevGen::e1 ? e1_memo_ : f1_memo_;
        Vector out;
        for (const auto& [s, c] : v.terms()) {
            auto it = memo.find(s);
            if (it == memo.end()) {
                const Vector unit = Vector::unit(s, ctx_.from_long(1));
                const FieldOperator& cur =
                    g == ChevGen::e1 ? raising_current() : lowering_current();
                TruncationLog local;
                Vector img = apply_mode(cur, 0, unit, &local);
                it = memo.emplace(s, std::make_pair(std::move(img), local.dropped))
                         .first;
            }
            if (log)
                log->dropped += it->second.second;
            out += it->second.first.scaled(c);
        }
        return out;
    }

    // Joint application of a normal-ordered exponential product in up to two
    // formal variables; every stored coefficient is complete.
    BiSeriesT<Coeff> apply_normal_ordered(const NormalOrderedProduct& prod_in,
                                          const Vector& v,
                                          TruncationLog* log = nullptr) {
        const NormalOrderedProduct prod = normal_ordered_merge(prod_in.factors);
        int total_w2 = 0, total_shift = 0;
        for (const auto& f : prod.factors) {
            if (f.var < 0 || f.var > 1)
                throw std::invalid_argument(
                    "normal-ordered application supports variables 0 and 1");
            total_w2 += f.spec.weight2;
            total_shift += f.spec.expq_shift;
        }
        BiSeriesT<Coeff> out;
        out.exact_total_max2 = trunc_.deg2_max - max_deg2(v) - total_w2;
        for (const auto& [s, c] : v.terms()) {
            Coeff cur = c;
            int z2[2] = {0, 0};
            for (const auto& f : prod.factors)
                for (const MomentumFactor& mf : f.spec.momentum) {
                    if (mf.sign < 0 && (s.p % 2 != 0))
                        cur = -cur;
                    if (mf.qexp_per_p != 0)
                        cur = cur * ctx_.q_power(mf.qexp_per_p * s.p);
                    z2[f.var] += 2 * mf.zexp_per_p * s.p;
                }
            const int p1 = s.p + total_shift;
            if (p1 < trunc_.p_min || p1 > trunc_.p_max) {
                if (log)
                    ++log->dropped;
                continue;
            }
            std::vector<std::pair<int, int>> kept;
            joint_annih(prod, s, 0, 0, s.bosons, kept, cur, z2, p1, out);
        }
        return out;
    }

private:
    struct CreationEntry {
        std::vector<std::pair<int, int>> bosons;
        int deg2 = 0;
        Coeff scalar{};
    };
    struct ExpCache {
        int budget2 = -1;
        std::vector<CreationEntry> entries;             // sorted by (deg2, content)
        std::map<int, QScalar> annih_g;                 // geom_sum * [2n] per mode
        std::map<std::pair<int, int>, Coeff> annih_step; // g_n / (n j) per (n, j)
    };

    static const FieldOperator& raising_current() {
        static const FieldOperator f = build_field("X+");
        return f;
    }
    static const FieldOperator& lowering_current() {
        static const FieldOperator f = build_field("X-");
        return f;
    }

    // A product stage or a fermion annihilator can visit degrees above the
    // final output degree, so those shapes cannot be applied under a lowered
    // output cap.
    static void reject_overshooting(const FieldOperator& f) {
        switch (f.kind) {
        case FieldOperator::Kind::Exponential:
            return;
        case FieldOperator::Kind::FermionField:
        case FieldOperator::Kind::Product:
            throw std::logic_error("apply_capped: " + f.name +
                                   " may exceed the output degree internally");
        case FieldOperator::Kind::Scaled:
        case FieldOperator::Kind::ModeCommutator:
        case FieldOperator::Kind::ScalarMultiple:
            reject_overshooting(*f.base);
            return;
        }
    }

    void prune(Series& s) const {
        for (auto it = s.coeffs.begin(); it != s.coeffs.end();) {
            if (it->first > s.exact_max2 || it->second.is_zero())
                it = s.coeffs.erase(it);
            else
                ++it;
        }
    }

    Series apply_impl(const FieldOperator& f, const Vector& v, int cap2,
                      TruncationLog* log) {
        switch (f.kind) {
        case FieldOperator::Kind::Exponential:
            return apply_exp(f.spec, v, cap2, log);
        case FieldOperator::Kind::FermionField:
            return apply_fermion_series(v, cap2);
        case FieldOperator::Kind::Scaled: {
            Series s = apply_impl(*f.base, v, cap2, log);
            Series out;
            out.exact_max2 = s.exact_max2;
            for (auto& [k2, vec] : s.coeffs) {
                const int e = f.arg_scale_qexp * k2;
                out.coeffs.emplace(k2, vec.scaled(ctx_.q_power(e / 2)));
            }
            return out;
        }
        case FieldOperator::Kind::Product:
            return apply_product(f, v, cap2, log);
        case FieldOperator::Kind::ModeCommutator: {
            const Vector mv = chevalley(f.comm_gen, v, log);
            Series s1 = apply_impl(*f.base, mv, cap2, log);
            Series s2 = apply_impl(*f.base, v, cap2, log);
            const Coeff x = ctx_.from_qscalar(f.comm_factor);
            for (const auto& [k2, vec] : s2.coeffs) {
                const Vector mved = chevalley(f.comm_gen, vec, log);
                auto& slot = s1.coeffs[k2];
                for (const auto& [st, c] : mved.terms())
                    slot.add_term(st, -(x * c));
            }
            return s1;
        }
        case FieldOperator::Kind::ScalarMultiple: {
            Series s = apply_impl(*f.base, v, cap2, log);
            const Coeff c = ctx_.from_qscalar(f.scale);
            for (auto& [k2, vec] : s.coeffs)
                vec = vec.scaled(c);
            return s;
        }
        }
        throw std::logic_error("unreachable field kind");
    }

    Series apply_product(const FieldOperator& f, const Vector& v, int cap2,
                         TruncationLog* log) {
        // Degree headroom for inner stages: a fermion factor to the left can
        // move weight back down by annihilating a fermion already present in
        // the input, so everything to its right runs with a raised cap.
        int reach2 = 0;
        for (const auto& [s, c] : v.terms())
            if (!s.fermions.empty())
                reach2 = std::max(reach2, s.fermions.back());
        const int n = static_cast<int>(f.factors.size());
        std::vector<int> caps(static_cast<std::size_t>(n), cap2);
        int fermions_left = 0;
        for (int i = 0; i < n; ++i) {
            caps[static_cast<std::size_t>(i)] = cap2 + fermions_left * reach2;
            if (f.factors[static_cast<std::size_t>(i)].kind ==
                FieldOperator::Kind::FermionField)
                ++fermions_left;
        }
        Series run = apply_impl(f.factors.back(), v,
                                caps[static_cast<std::size_t>(n - 1)], log);
        for (int i = n - 2; i >= 0; --i) {
            Series next;
            for (const auto& [k2, vec] : run.coeffs) {
                Series stage = apply_impl(f.factors[static_cast<std::size_t>(i)], vec,
                                          caps[static_cast<std::size_t>(i)], log);
                for (auto& [j2, u] : stage.coeffs) {
                    auto& slot = next.coeffs[k2 + j2];
                    for (const auto& [st, c] : u.terms())
                        slot.add_term(st, c);
                }
            }
            run = std::move(next);
        }
        return run;
    }

    Series apply_exp(const ExpFieldSpec& spec, const Vector& v, int cap2,
                     TruncationLog* log) {
        Series out;
        ExpCache& cache = exp_cache(spec, cap2);
        for (const auto& [s, c] : v.terms()) {
            Coeff cur = c;
            int z2 = 0;
            for (const MomentumFactor& mf : spec.momentum) {
                if (mf.sign < 0 && (s.p % 2 != 0))
                    cur = -cur;
                if (mf.qexp_per_p != 0)
                    cur = cur * ctx_.q_power(mf.qexp_per_p * s.p);
                z2 += 2 * mf.zexp_per_p * s.p;
            }
            const int p1 = s.p + spec.expq_shift;
            if (p1 < trunc_.p_min || p1 > trunc_.p_max) {
                if (log)
                    ++log->dropped;
                continue;
            }
            int floor2 = p1 * p1;
            for (int f2 : s.fermions)
                floor2 += f2;
            std::vector<std::pair<int, int>> kept;
            kept.reserve(s.bosons.size());
            annih_rec(spec, cache, s, 0, kept, cur, z2, p1, floor2, cap2, out);
        }
        return out;
    }

    // Expands the annihilation exponential over the bosons of src, then hands
    // each branch to the creation stage. floor2 is a lower bound on the
    // degree every completion of the current branch must reach (momentum,
    // fermions, and the modes already kept), so branches that can no longer
    // land under the cap are cut before they fan out.
    void annih_rec(const ExpFieldSpec& spec, ExpCache& cache, const FockState& src,
                   std::size_t idx, std::vector<std::pair<int, int>>& kept, Coeff cur,
                   int z2, int p1, int floor2, int cap2, Series& out) {
        if (floor2 > cap2)
            return;
        if (idx == src.bosons.size()) {
            creation_stage(cache, src, kept, cur, z2, p1, cap2, out);
            return;
        }
        const auto [n, m] = src.bosons[idx];
        kept.push_back({n, m});
        annih_rec(spec, cache, src, idx + 1, kept, cur, z2, p1, floor2 + 2 * n * m,
                  cap2, out);
        kept.pop_back();
        if (spec.annihilation.empty())
            return;
        const QScalar& g = annih_g(spec, cache, n);
        if (g.is_zero())
            return;
        Coeff run = cur;
        for (int j = 1; j <= m; ++j) {
            run = run * annih_step(spec, cache, n, j) * ctx_.from_long(m - j + 1);
            if (j < m) {
                kept.push_back({n, m - j});
                annih_rec(spec, cache, src, idx + 1, kept, run, z2 - 2 * n * j, p1,
                          floor2 + 2 * n * (m - j), cap2, out);
                kept.pop_back();
            } else {
                annih_rec(spec, cache, src, idx + 1, kept, run, z2 - 2 * n * j, p1,
                          floor2, cap2, out);
            }
        }
    }

    void creation_stage(const ExpCache& cache, const FockState& src,
                        const std::vector<std::pair<int, int>>& kept, const Coeff& cur,
                        int z2, int p1, int cap2, Series& out) {
        int osc2 = 0;
        for (const auto& [n, m] : kept)
            osc2 += 2 * n * m;
        for (int f2 : src.fermions)
            osc2 += f2;
        const int deg2_mid = p1 * p1 + osc2;
        const int budget2 = cap2 - deg2_mid;
        if (budget2 < 0)
            return;
        for (const CreationEntry& e : cache.entries) {
            if (e.deg2 > budget2)
                break;
            FockState ns;
            ns.p = p1;
            ns.bosons = detail::merge_bosons(kept, e.bosons);
            ns.fermions = src.fermions;
            ns.deg2 = deg2_mid + e.deg2;
            out.coeffs[z2 + e.deg2].add_term(ns, cur * e.scalar);
        }
    }

    Series apply_fermion_series(const Vector& v, int cap2) {
        Series out;
        for (const auto& [s, c] : v.terms()) {
            for (int two_r : s.fermions) {
                const FermionEdit e = with_fermion_removed(s, two_r);
                const Coeff amp = kappa(two_r) * c;
                out.coeffs[-two_r - 1].add_term(e.state, e.sign < 0 ? -amp : amp);
            }
            for (int two_r = 1; s.deg2 + two_r <= cap2; two_r += 2) {
                const FermionEdit e = with_fermion_added(s, two_r);
                if (!e.ok)
                    continue;
                out.coeffs[two_r - 1].add_term(e.state, e.sign < 0 ? -c : c);
            }
        }
        return out;
    }

    // Joint annihilation over the folded factors of a normal-ordered product;
    // factor_idx runs over prod.factors for the boson at idx.
    void joint_annih(const NormalOrderedProduct& prod, const FockState& src,
                     std::size_t idx, std::size_t factor_idx,
                     const std::vector<std::pair<int, int>>& avail,
                     std::vector<std::pair<int, int>>& kept, Coeff cur, int z2[2],
                     int p1, BiSeriesT<Coeff>& out) {
        if (idx == avail.size()) {
            std::vector<std::pair<int, int>> merged;
            joint_creation(prod, src, 0, kept, merged, cur, z2, p1, out);
            return;
        }
        if (factor_idx == prod.factors.size()) {
            if (avail[idx].second > 0)
                kept.push_back(avail[idx]);
            joint_annih(prod, src, idx + 1, 0, avail, kept, cur, z2, p1, out);
            if (avail[idx].second > 0)
                kept.pop_back();
            return;
        }
        const auto [n, m] = avail[idx];
        // j = 0 for this factor
        joint_annih(prod, src, idx, factor_idx + 1, avail, kept, cur, z2, p1, out);
        const ExpFieldSpec& spec = prod.factors[factor_idx].spec;
        if (spec.annihilation.empty() || m == 0)
            return;
        ExpCache& cache = exp_cache(spec, trunc_.deg2_max);
        if (annih_g(spec, cache, n).is_zero())
            return;
        const int var = prod.factors[factor_idx].var;
        Coeff run = cur;
        std::vector<std::pair<int, int>> next = avail;
        for (int j = 1; j <= m; ++j) {
            run = run * annih_step(spec, cache, n, j) * ctx_.from_long(m - j + 1);
            next[idx].second = m - j;
            z2[var] -= 2 * n;
            joint_annih(prod, src, idx, factor_idx + 1, next, kept, run, z2, p1, out);
        }
        z2[var] += 2 * n * m;
    }

    void joint_creation(const NormalOrderedProduct& prod, const FockState& src,
                        std::size_t factor_idx,
                        const std::vector<std::pair<int, int>>& kept,
                        std::vector<std::pair<int, int>>& created, Coeff cur, int z2[2],
                        int p1, BiSeriesT<Coeff>& out) {
        int osc2 = 0;
        for (const auto& [n, m] : kept)
            osc2 += 2 * n * m;
        for (const auto& [n, m] : created)
            osc2 += 2 * n * m;
        for (int f2 : src.fermions)
            osc2 += f2;
        const int budget2 = trunc_.deg2_max - p1 * p1 - osc2;
        if (budget2 < 0)
            return;
        if (factor_idx == prod.factors.size()) {
            FockState ns;
            ns.p = p1;
            ns.bosons = detail::merge_bosons(kept, created);
            std::sort(ns.bosons.begin(), ns.bosons.end());
            ns.fermions = src.fermions;
            ns.deg2 = p1 * p1 + osc2;
            out.coeffs[{z2[0], z2[1]}].add_term(ns, cur);
            return;
        }
        const ExpFieldSpec& spec = prod.factors[factor_idx].spec;
        const int var = prod.factors[factor_idx].var;
        ExpCache& cache = exp_cache(spec, trunc_.deg2_max);
        for (const CreationEntry& e : cache.entries) {
            if (e.deg2 > budget2)
                break;
            std::vector<std::pair<int, int>> ext = detail::merge_bosons(created, e.bosons);
            z2[var] += e.deg2;
            std::swap(created, ext);
            joint_creation(prod, src, factor_idx + 1, kept, created, cur * e.scalar,
                           z2, p1, out);
            std::swap(created, ext);
            z2[var] -= e.deg2;
        }
    }

    ExpCache& exp_cache(const ExpFieldSpec& spec, int budget2) {
        ExpCache& c = exp_caches_[detail::coeff_terms_signature(spec)];
        if (c.budget2 >= budget2)
            return c;
        c.budget2 = budget2;
        c.entries.clear();
        std::vector<QScalar> cvals; // creation coefficient per mode, index n-1
        for (int n = 1; 2 * n <= budget2; ++n)
            cvals.push_back(geom_sum(spec.creation, n) / qint_s(2 * n));
        std::vector<std::pair<int, int>> curbos;
        build_creation(cvals, 1, budget2, 0, curbos, QScalar(1), c);
        std::sort(c.entries.begin(), c.entries.end(),
                  [](const CreationEntry& a, const CreationEntry& b) {
                      return a.deg2 != b.deg2 ? a.deg2 < b.deg2 : a.bosons < b.bosons;
                  });
        return c;
    }

    void build_creation(const std::vector<QScalar>& cvals, int n0, int budget2,
                        int used2, std::vector<std::pair<int, int>>& cur,
                        const QScalar& sc, ExpCache& cache) {
        cache.entries.push_back({cur, used2, ctx_.from_qscalar(sc)});
        for (int n = n0; 2 * n <= budget2 - used2; ++n) {
            if (cvals[static_cast<std::size_t>(n - 1)].is_zero())
                continue;
            QScalar run = sc;
            for (int j = 1; 2 * n * j <= budget2 - used2; ++j) {
                run = run * cvals[static_cast<std::size_t>(n - 1)] / QScalar(Rat(j));
                cur.push_back({n, j});
                build_creation(cvals, n + 1, budget2, used2 + 2 * n * j, cur, run,
                               cache);
                cur.pop_back();
            }
        }
    }

    const QScalar& annih_g(const ExpFieldSpec& spec, ExpCache& cache, int n) {
        auto it = cache.annih_g.find(n);
        if (it == cache.annih_g.end())
            it = cache.annih_g.emplace(n, geom_sum(spec.annihilation, n) * qint_s(2 * n))
                     .first;
        return it->second;
    }

    const Coeff& annih_step(const ExpFieldSpec& spec, ExpCache& cache, int n, int j) {
        auto it = cache.annih_step.find({n, j});
        if (it == cache.annih_step.end()) {
            Rat inv(1, static_cast<long>(n) * j);
            inv.canonicalize();
            const QScalar step = annih_g(spec, cache, n) * QScalar(inv);
            it = cache.annih_step.emplace(std::pair<int, int>{n, j},
                                          ctx_.from_qscalar(step))
                     .first;
        }
        return it->second;
    }

    Coeff kappa(int two_r) {
        auto it = kappa_.find(two_r);
        if (it == kappa_.end()) {
            const QScalar k = (QScalar::q_power(two_r) + QScalar::q_power(-two_r)) *
                              QScalar(Rat(1, 2));
            it = kappa_.emplace(two_r, ctx_.from_qscalar(k)).first;
        }
        return it->second;
    }

    Ctx ctx_;
    Truncation trunc_;
    std::map<std::string, ExpCache> exp_caches_;
    std::map<FockState, std::pair<Vector, long long>> e1_memo_, f1_memo_;
    std::map<int, Coeff> kappa_;
};

// One-shot conveniences; suites keep an engine alive to reuse its memos.
template <class Ctx>
LaurentSeriesT<typename Ctx::Coeff>
apply_field(const Ctx& ctx, const FieldOperator& f,
            const FockVectorT<typename Ctx::Coeff>& v, const Truncation& t,
            TruncationLog* log = nullptr) {
    FieldEngine<Ctx> engine(ctx, t);
    return engine.apply(f, v, log);
}

template <class Ctx>
FockVectorT<typename Ctx::Coeff>
apply_mode(const Ctx& ctx, const FieldOperator& f, int mode2,
           const FockVectorT<typename Ctx::Coeff>& v, const Truncation& t,
           TruncationLog* log = nullptr) {
    FieldEngine<Ctx> engine(ctx, t);
    return engine.apply_mode(f, mode2, v, log);
}

} // namespace qaffine
