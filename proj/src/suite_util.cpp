#include "qaffine/suite_util.hpp"

#include <exception>
#include <sstream>
#include <stdexcept>

namespace qaffine {

VecOp memoized_unit_op(std::function<MaybeVector(const FockState&)> unit_fn) {
    auto memo = std::make_shared<std::map<FockState, MaybeVector>>();
    return [memo, unit_fn = std::move(unit_fn)](const FockVector& v) -> MaybeVector {
        FockVector out;
        for (const auto& [s, c] : v.terms()) {
            auto it = memo->find(s);
            if (it == memo->end())
                it = memo->emplace(s, unit_fn(s)).first;
            if (!it->second)
                return std::nullopt;
            out.add_scaled(*it->second, c);
        }
        return out;
    };
}

VecOp mode_op(FieldEngine<ExactCtx>& eng, std::shared_ptr<const FieldOperator> f,
              int mode2) {
    return memoized_unit_op([&eng, f = std::move(f),
                             mode2](const FockState& s) -> MaybeVector {
        TruncationLog log;
        try {
            FockVector img =
                eng.apply_mode(*f, mode2, FockVector::unit(s, QScalar(1)), &log);
            if (log.dropped != 0)
                return std::nullopt;
            return img;
        } catch (const std::out_of_range&) {
            return std::nullopt;
        }
    });
}

const SeriesOracle::Entry& SeriesOracle::entry(const FockState& s) {
    auto it = memo_.find(s);
    if (it == memo_.end()) {
        if (frozen_)
            throw std::logic_error("series oracle for " + f_.name +
                                   " queried outside its prebuilt window");
        Entry e;
        TruncationLog log;
        e.series = eng_.apply(f_, FockVector::unit(s, QScalar(1)), &log);
        e.dropped = log.dropped;
        it = memo_.emplace(s, std::move(e)).first;
    }
    return it->second;
}

void SeriesOracle::prebuild(const std::vector<FockState>& states) {
    for (const FockState& s : states)
        entry(s);
    frozen_ = true;
}

MaybeVector SeriesOracle::mode(int mode2, const FockVector& v) {
    const int k2 = -mode2 - f_.weight2;
    FockVector out;
    for (const auto& [s, c] : v.terms()) {
        const Entry& e = entry(s);
        if (e.dropped != 0 || k2 > e.series.exact_max2)
            return std::nullopt;
        auto it = e.series.coeffs.find(k2);
        if (it != e.series.coeffs.end())
            out.add_scaled(it->second, c);
    }
    return out;
}

VecOp oracle_mode_op(std::shared_ptr<SeriesOracle> oracle, int mode2) {
    return [oracle = std::move(oracle), mode2](const FockVector& v) -> MaybeVector {
        return oracle->mode(mode2, v);
    };
}

ChevOps::ChevOps(FieldEngine<ExactCtx>& eng)
    : xp(std::make_shared<SeriesOracle>(eng, build_field("X+"))),
      xm(std::make_shared<SeriesOracle>(eng, build_field("X-"))) {
    e[1] = oracle_mode_op(xp, 0);
    f[1] = oracle_mode_op(xm, 0);
    tt[1] = cartan_op(2);
    tinv[1] = cartan_op(-2);
    e[0] = compose_ops(oracle_mode_op(xm, 2), cartan_op(-2));
    f[0] = compose_ops(cartan_op(2), oracle_mode_op(xp, -2));
    tt[0] = scale_op(QScalar::q_power(2), cartan_op(-2));
    tinv[0] = scale_op(QScalar::q_power(-2), cartan_op(2));
}

VecOp chev_op(FieldEngine<ExactCtx>& eng, ChevGen g) {
    return memoized_unit_op([&eng, g](const FockState& s) -> MaybeVector {
        TruncationLog log;
        try {
            FockVector img =
                eng.chevalley(g, FockVector::unit(s, QScalar(1)), &log);
            if (log.dropped != 0)
                return std::nullopt;
            return img;
        } catch (const std::out_of_range&) {
            return std::nullopt;
        }
    });
}

VecOp boson_op(const Truncation& t, int m) {
    return [t, m](const FockVector& v) -> MaybeVector {
        TruncationLog log;
        FockVector out = apply_boson(ExactCtx{}, m, v, t, &log);
        if (log.dropped != 0)
            return std::nullopt;
        return out;
    };
}

VecOp fermion_op(const Truncation& t, int two_r) {
    return [t, two_r](const FockVector& v) -> MaybeVector {
        TruncationLog log;
        FockVector out = apply_fermion(ExactCtx{}, two_r, v, t, &log);
        if (log.dropped != 0)
            return std::nullopt;
        return out;
    };
}

VecOp cartan_op(int qexp_per_p) {
    return [qexp_per_p](const FockVector& v) -> MaybeVector {
        return scale_by_momentum(ExactCtx{}, qexp_per_p, v);
    };
}

VecOp momentum_shift_op(const Truncation& t, int delta) {
    return [t, delta](const FockVector& v) -> MaybeVector {
        TruncationLog log;
        FockVector out =
            apply_momentum(ExactCtx{}, MomentumOp::ExpQ, delta, v, t, &log);
        if (log.dropped != 0)
            return std::nullopt;
        return out;
    };
}

VecOp grading_op() {
    return [](const FockVector& v) -> MaybeVector {
        return apply_grading(ExactCtx{}, v);
    };
}

VecOp parity_projector_op(int sign) {
    return [sign](const FockVector& v) -> MaybeVector {
        return project_parity(sign, v);
    };
}

VecOp identity_scaled_op(const QScalar& c) {
    return [c](const FockVector& v) -> MaybeVector { return v.scaled(c); };
}

VecOp zero_op() {
    return [](const FockVector&) -> MaybeVector { return FockVector{}; };
}

VecOp compose_ops(VecOp outer, VecOp inner) {
    return [outer = std::move(outer),
            inner = std::move(inner)](const FockVector& v) -> MaybeVector {
        MaybeVector mid = inner(v);
        if (!mid)
            return std::nullopt;
        return outer(*mid);
    };
}

VecOp scale_op(const QScalar& c, VecOp op) {
    return [c, op = std::move(op)](const FockVector& v) -> MaybeVector {
        MaybeVector out = op(v);
        if (!out)
            return std::nullopt;
        return out->scaled(c);
    };
}

VecOp sum_ops(VecOp a, VecOp b) {
    return [a = std::move(a), b = std::move(b)](const FockVector& v) -> MaybeVector {
        MaybeVector x = a(v);
        if (!x)
            return std::nullopt;
        MaybeVector y = b(v);
        if (!y)
            return std::nullopt;
        *x += *y;
        return x;
    };
}

VecOp bracket_op(VecOp a, VecOp b, const QScalar& x, bool anticommute) {
    return [a = std::move(a), b = std::move(b), x,
            anticommute](const FockVector& v) -> MaybeVector {
        MaybeVector bv = b(v);
        if (!bv)
            return std::nullopt;
        MaybeVector abv = a(*bv);
        if (!abv)
            return std::nullopt;
        MaybeVector av = a(v);
        if (!av)
            return std::nullopt;
        MaybeVector bav = b(*av);
        if (!bav)
            return std::nullopt;
        abv->add_scaled(*bav, anticommute ? x : -x);
        return abv;
    };
}

std::string first_difference(const FockVector& lhs, const FockVector& rhs) {
    const FockVector diff = lhs - rhs;
    if (diff.is_zero())
        return {};
    const auto& [s, c] = *diff.terms().begin();
    return "coefficient of " + encode(s) + " differs by " + c.to_string();
}

SectorComparison compare_on_basis(const std::vector<FockState>& basis,
                                  const VecOp& lhs, const VecOp& rhs) {
    SectorComparison out;
    for (const FockState& s : basis) {
        const FockVector v = FockVector::unit(s, QScalar(1));
        MaybeVector l = lhs(v);
        MaybeVector r = l ? rhs(v) : std::nullopt;
        if (!l || !r) {
            ++out.skipped;
            continue;
        }
        ++out.evaluated;
        if (!out.failed && *l != *r) {
            out.failed = true;
            out.witness = "on " + encode(s) + ": " + first_difference(*l, *r);
        }
    }
    return out;
}

CheckResult make_sector_check(const std::string& description,
                              const SectorComparison& c) {
    CheckResult r;
    r.description = description;
    if (c.failed) {
        r.status = CheckStatus::FAIL;
        r.residual = "nonzero";
        r.note = c.witness + "; " + count_note(c.evaluated, c.skipped);
    } else if (c.evaluated == 0) {
        r.status = CheckStatus::SKIPPED;
        r.note = "no state of the window admits the full operator chain; " +
                 count_note(c.evaluated, c.skipped);
    } else {
        r.status = CheckStatus::PASS;
        r.note = count_note(c.evaluated, c.skipped);
    }
    return r;
}

std::string count_note(long evaluated, long skipped) {
    std::ostringstream os;
    os << evaluated << " states evaluated";
    if (skipped > 0)
        os << ", " << skipped << " skipped at the window edge";
    return os.str();
}

std::string half_string(int doubled) {
    std::ostringstream os;
    if (doubled % 2 == 0)
        os << doubled / 2;
    else
        os << doubled << "/2";
    return os.str();
}

BiSeries stage_product(FieldEngine<ExactCtx>& eng, const FieldOperator& outer,
                       const FieldOperator& inner, const FockVector& v,
                       TruncationLog* log) {
    BiSeries out;
    out.exact_total_max2 =
        eng.truncation().deg2_max - max_deg2(v) - outer.weight2 - inner.weight2;
    const LaurentSeries in = eng.apply(inner, v, log);
    for (const auto& [k2i, vec] : in.coeffs) {
        const LaurentSeries so = eng.apply(outer, vec, log);
        for (const auto& [k2o, u] : so.coeffs) {
            if (k2o + k2i > out.exact_total_max2 || u.is_zero())
                continue;
            auto& slot = out.coeffs[{k2o, k2i}];
            for (const auto& [st, c] : u.terms())
                slot.add_term(st, c);
        }
    }
    for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
        it = it->second.is_zero() ? out.coeffs.erase(it) : std::next(it);
    return out;
}

void parallel_for_index(long n, bool parallel, const std::function<void(long)>& fn) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#else
    (void)parallel;
#endif
    for (long i = 0; i < n; ++i)
        fn(i);
}

void run_check_tasks(VerificationReport& rep, const std::vector<CheckTask>& tasks,
                     bool parallel) {
    std::vector<std::vector<CheckResult>> slots(tasks.size());
    parallel_for_index(static_cast<long>(tasks.size()), parallel, [&](long i) {
        const auto u = static_cast<std::size_t>(i);
        try {
            slots[u] = tasks[u]();
        } catch (const std::exception& e) {
            CheckResult r;
            r.description = "check task completed without an internal error";
            r.status = CheckStatus::FAIL;
            r.residual = "n/a";
            r.note = e.what();
            slots[u] = {std::move(r)};
        }
    });
    for (auto& block : slots)
        for (auto& check : block)
            rep.checks.push_back(std::move(check));
}

std::string truncation_string(const Truncation& t) {
    std::ostringstream os;
    os << "degree <= " << half_string(t.deg2_max) << ", momentum in ["
       << t.p_min << ", " << t.p_max << "]";
    return os.str();
}

} // namespace qaffine
