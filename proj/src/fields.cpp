#include "qaffine/fields.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qaffine/apply_field.hpp"
#include "qaffine/coeff_ctx.hpp"
#include "qaffine/q_numbers.hpp"

namespace qaffine {

QScalar geom_sum(const std::vector<GeomTerm>& terms, int n) {
    QScalar out;
    for (const GeomTerm& t : terms)
        out += t.coef * QScalar::q_power(t.qexp * n);
    return out;
}

FieldOperator exp_field(ExpFieldSpec spec) {
    FieldOperator f;
    f.kind = FieldOperator::Kind::Exponential;
    f.name = spec.name;
    f.weight2 = spec.weight2;
    f.spec = std::move(spec);
    return f;
}

FieldOperator fermion_field() {
    FieldOperator f;
    f.kind = FieldOperator::Kind::FermionField;
    f.name = "B";
    f.weight2 = 1;
    return f;
}

FieldOperator scaled(FieldOperator base, int arg_scale_qexp) {
    if (arg_scale_qexp % 2 != 0)
        throw std::invalid_argument("argument rescaling exponent must be even");
    FieldOperator f;
    f.kind = FieldOperator::Kind::Scaled;
    f.name = base.name + "@q^" + std::to_string(arg_scale_qexp);
    f.weight2 = base.weight2;
    f.arg_scale_qexp = arg_scale_qexp;
    f.base = std::make_shared<const FieldOperator>(std::move(base));
    return f;
}

FieldOperator product(std::string name, std::vector<FieldOperator> factors) {
    if (factors.empty())
        throw std::invalid_argument("product needs at least one factor");
    int fermion_count = 0;
    bool created_bosons = false;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        switch (it->kind) {
        case FieldOperator::Kind::Exponential:
            if (!it->spec.annihilation.empty() && created_bosons)
                throw std::invalid_argument(
                    "product factor would reabsorb bosons created to its right");
            if (!it->spec.creation.empty())
                created_bosons = true;
            break;
        case FieldOperator::Kind::FermionField:
            if (++fermion_count > 1)
                throw std::invalid_argument(
                    "product supports at most one fermion factor");
            break;
        default:
            throw std::invalid_argument(
                "product factors must be exponential or fermion fields");
        }
    }
    FieldOperator f;
    f.kind = FieldOperator::Kind::Product;
    f.name = std::move(name);
    for (const FieldOperator& g : factors)
        f.weight2 += g.weight2;
    f.factors = std::move(factors);
    return f;
}

FieldOperator mode_commutator(std::string name, FieldOperator base, ChevGen gen,
                              QScalar x) {
    FieldOperator f;
    f.kind = FieldOperator::Kind::ModeCommutator;
    f.name = std::move(name);
    f.weight2 = base.weight2;
    f.base = std::make_shared<const FieldOperator>(std::move(base));
    f.comm_gen = gen;
    f.comm_factor = std::move(x);
    return f;
}

FieldOperator scalar_multiple(FieldOperator base, QScalar c) {
    FieldOperator f;
    f.kind = FieldOperator::Kind::ScalarMultiple;
    f.name = base.name;
    f.weight2 = base.weight2;
    f.base = std::make_shared<const FieldOperator>(std::move(base));
    f.scale = std::move(c);
    return f;
}

namespace {

ExpFieldSpec half_current_spec(int sign) {
    ExpFieldSpec s;
    s.name = sign > 0 ? "E+" : "E-";
    s.creation = {{Rat(sign), -sign}};
    s.annihilation = {{Rat(-sign), -sign}};
    s.expq_shift = sign;
    s.momentum = {{1, 0, sign}};
    s.weight2 = 1;
    return s;
}

ExpFieldSpec diagonal_current_spec(int sign) {
    ExpFieldSpec s;
    s.name = sign > 0 ? "psi+" : "psi-";
    if (sign > 0)
        s.annihilation = {{Rat(1), 2}, {Rat(-1), -2}};
    else
        s.creation = {{Rat(-1), 2}, {Rat(1), -2}};
    s.momentum = {{1, 2 * sign, 0}};
    s.weight2 = 0;
    return s;
}

ExpFieldSpec type1_top_spec() {
    ExpFieldSpec s;
    s.name = "phi_1";
    s.creation = {{Rat(1), 5}};
    s.annihilation = {{Rat(-1), -3}};
    s.expq_shift = 1;
    s.momentum = {{-1, 4, 1}};
    s.weight2 = 1;
    return s;
}

ExpFieldSpec type2_bottom_spec() {
    ExpFieldSpec s;
    s.name = "psi_-1";
    s.creation = {{Rat(-1), 1}};
    s.annihilation = {{Rat(1), -3}};
    s.expq_shift = -1;
    s.momentum = {{-1, -2, -1}};
    s.weight2 = 1;
    return s;
}

FieldOperator current(int sign) {
    FieldOperator f = scalar_multiple(
        product(sign > 0 ? "X+" : "X-",
                {fermion_field(), exp_field(half_current_spec(sign))}),
        QScalar::sqrt2());
    f.name = sign > 0 ? "X+" : "X-";
    return f;
}

FieldOperator renamed(FieldOperator f, const std::string& name) {
    f.name = name;
    return f;
}

void canonicalize_terms(std::vector<GeomTerm>& ts) {
    std::map<int, Rat> acc;
    for (const GeomTerm& t : ts) {
        auto [it, fresh] = acc.try_emplace(t.qexp, t.coef);
        if (!fresh)
            it->second += t.coef;
    }
    ts.clear();
    for (const auto& [e, c] : acc)
        if (c != 0)
            ts.push_back({c, e});
}

} // namespace

FieldOperator build_field(const std::string& name) {
    if (name == "E+")
        return exp_field(half_current_spec(+1));
    if (name == "E-")
        return exp_field(half_current_spec(-1));
    if (name == "B")
        return fermion_field();
    if (name == "X+")
        return current(+1);
    if (name == "X-")
        return current(-1);
    if (name == "psi+")
        return exp_field(diagonal_current_spec(+1));
    if (name == "psi-")
        return exp_field(diagonal_current_spec(-1));
    if (name == "phi_1")
        return exp_field(type1_top_spec());
    if (name == "phi_0")
        return mode_commutator("phi_0", build_field("phi_1"), ChevGen::f1,
                               QScalar::q_power(2));
    if (name == "phi_-1")
        return renamed(scalar_multiple(mode_commutator("phi_-1", build_field("phi_0"),
                                                       ChevGen::f1, QScalar(1)),
                                       QScalar(1) / qint_s(2)),
                       "phi_-1");
    if (name == "psi_-1")
        return exp_field(type2_bottom_spec());
    if (name == "psi_0")
        return mode_commutator("psi_0", build_field("psi_-1"), ChevGen::e1,
                               QScalar::q_power(2));
    if (name == "psi_1")
        return renamed(scalar_multiple(mode_commutator("psi_1", build_field("psi_0"),
                                                       ChevGen::e1, QScalar(1)),
                                       QScalar(1) / qint_s(2)),
                       "psi_1");
    if (name == "phi*_1")
        return renamed(scaled(build_field("phi_-1"), -2), "phi*_1");
    if (name == "phi*_0")
        return renamed(scaled(build_field("phi_0"), -2), "phi*_0");
    if (name == "phi*_-1")
        return renamed(scaled(build_field("phi_1"), -2), "phi*_-1");
    if (name == "psi*_1")
        return renamed(scaled(build_field("psi_-1"), -2), "psi*_1");
    if (name == "psi*_0")
        return renamed(scaled(build_field("psi_0"), -2), "psi*_0");
    if (name == "psi*_-1")
        return renamed(scaled(build_field("psi_1"), -2), "psi*_-1");
    throw std::invalid_argument("unknown field name: " + name);
}

NormalOrderedProduct
normal_ordered_merge(const std::vector<NormalOrderedProduct::Factor>& factors) {
    if (factors.empty())
        throw std::invalid_argument("normal-ordered merge needs factors");
    std::map<int, ExpFieldSpec> byvar;
    for (const NormalOrderedProduct::Factor& f : factors) {
        if (f.arg_scale_qexp % 2 != 0)
            throw std::invalid_argument("argument rescaling exponent must be even");
        const int t = f.arg_scale_qexp;
        ExpFieldSpec& m = byvar[f.var];
        if (!m.name.empty())
            m.name += "*";
        m.name += f.spec.name;
        if (t != 0)
            m.name += "@q^" + std::to_string(t);
        for (GeomTerm g : f.spec.creation) {
            g.qexp += t;
            m.creation.push_back(g);
        }
        for (GeomTerm g : f.spec.annihilation) {
            g.qexp -= t;
            m.annihilation.push_back(g);
        }
        m.expq_shift += f.spec.expq_shift;
        for (MomentumFactor mf : f.spec.momentum) {
            mf.qexp_per_p += t * mf.zexp_per_p;
            m.momentum.push_back(mf);
        }
        m.weight2 += f.spec.weight2;
    }
    NormalOrderedProduct out;
    for (auto& [var, spec] : byvar) {
        canonicalize_terms(spec.creation);
        canonicalize_terms(spec.annihilation);
        out.factors.push_back({std::move(spec), var, 0});
    }
    return out;
}

bool is_identity(const NormalOrderedProduct& merged) {
    const NormalOrderedProduct p = normal_ordered_merge(merged.factors);
    int shift = 0, qexp = 0, negatives = 0;
    for (const NormalOrderedProduct::Factor& f : p.factors) {
        if (!f.spec.creation.empty() || !f.spec.annihilation.empty())
            return false;
        int zexp = 0;
        for (const MomentumFactor& mf : f.spec.momentum) {
            zexp += mf.zexp_per_p;
            qexp += mf.qexp_per_p;
            if (mf.sign < 0)
                ++negatives;
        }
        if (zexp != 0)
            return false;
        shift += f.spec.expq_shift;
    }
    return shift == 0 && qexp == 0 && negatives % 2 == 0;
}

VerificationReport check_scaling_covariance(const FieldOperator& f,
                                            const Truncation& t) {
    VerificationReport rep;
    rep.suite = "scaling-covariance";
    rep.param("field", f.name);
    rep.param("deg2_max", std::to_string(t.deg2_max));
    rep.param("p_window",
              "[" + std::to_string(t.p_min) + "," + std::to_string(t.p_max) + "]");

    ExactCtx ctx;
    FieldEngine<ExactCtx> eng(ctx, t);
    const FieldOperator rescaled = scaled(f, 2);
    long long terms = 0, law_bad = 0, conj_bad = 0;
    std::string law_witness, conj_witness;
    for (const FockState& s : enumerate_basis(t)) {
        const FockVector unit = FockVector::unit(s, QScalar(1));
        const LaurentSeries direct = eng.apply(f, unit);
        for (const auto& [k2, vec] : direct.coeffs)
            for (const auto& [u, c] : vec.terms()) {
                ++terms;
                if (u.deg2 - s.deg2 - f.weight2 != k2) {
                    ++law_bad;
                    if (law_witness.empty()) {
                        std::ostringstream os;
                        os << f.name << " maps " << encode(s) << " to " << encode(u)
                           << " at exponent " << k2 << "/2";
                        law_witness = os.str();
                    }
                }
            }
        // Conjugating q^{2d} into the field must equal substituting q^2 z and
        // multiplying by q^{2w}; the left side reweights each matrix element
        // by q^{deg(target) - deg(source)}.
        const LaurentSeries subst = eng.apply(rescaled, unit);
        std::map<int, FockVector> diff;
        for (const auto& [k2, vec] : direct.coeffs)
            for (const auto& [u, c] : vec.terms())
                diff[k2].add_term(u, c * QScalar::q_power(u.deg2 - s.deg2));
        for (const auto& [k2, vec] : subst.coeffs)
            for (const auto& [u, c] : vec.terms())
                diff[k2].add_term(u, -(c * QScalar::q_power(f.weight2)));
        for (const auto& [k2, vec] : diff)
            if (!vec.is_zero()) {
                ++conj_bad;
                if (conj_witness.empty()) {
                    std::ostringstream os;
                    os << f.name << " on " << encode(s) << " at exponent " << k2
                       << "/2";
                    conj_witness = os.str();
                }
            }
    }
    rep.add_exact("series exponent equals target degree minus source degree minus " +
                      std::to_string(f.weight2) + "/2 (" + std::to_string(terms) +
                      " matrix elements)",
                  law_bad == 0, std::to_string(law_bad) + " violations", law_witness);
    rep.add_exact("grading conjugation at q^2 matches argument rescaling",
                  conj_bad == 0, std::to_string(conj_bad) + " exponents differ",
                  conj_witness);
    return rep;
}

} // namespace qaffine
