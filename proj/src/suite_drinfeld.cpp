#include <map>
#include <memory>
#include <sstream>
#include <utility>

#include "qaffine/q_numbers.hpp"
#include "qaffine/suite_util.hpp"
#include "qaffine/suites.hpp"

namespace qaffine {

namespace {

std::string current_name(int sign) { return sign > 0 ? "X+" : "X-"; }

std::string mode_label(const std::string& base, int n) {
    std::ostringstream os;
    os << base << "_" << n;
    return os.str();
}

// psi^+_k vanishes for k < 0 and psi^-_k for k > 0: the diagonal currents
// expand toward one side only.
VecOp diagonal_mode(const std::shared_ptr<SeriesOracle>& oracle, int sign, int k) {
    if ((sign > 0 && k < 0) || (sign < 0 && k > 0))
        return zero_op();
    return oracle_mode_op(oracle, 2 * k);
}

} // namespace

VerificationReport verify_drinfeld(const Truncation& t, int mode_range,
                                   bool parallel) {
    const SuiteTimer timer;
    VerificationReport rep;
    rep.suite = "drinfeld";
    rep.param("window", truncation_string(t));
    rep.param("mode_range", std::to_string(mode_range));

    const std::vector<FockState> basis = enumerate_basis(t);
    rep.param("basis_states", std::to_string(basis.size()));

    const int R = mode_range;
    std::vector<int> a_modes, x_modes;
    for (int m = -R; m <= R; ++m) {
        if (m != 0)
            a_modes.push_back(m);
        x_modes.push_back(m);
    }

    const QScalar qden_inv = (QScalar::q_power(1) - QScalar::q_power(-1)).reciprocal();

    // Every operator chain below stays inside the window, so expanding each
    // current once per basis state up front covers all later queries; the
    // frozen oracles are then shared read-only by the parallel tasks.
    ExactCtx ctx;
    FieldEngine<ExactCtx> eng(ctx, t);
    auto Xp = std::make_shared<SeriesOracle>(eng, build_field("X+"));
    auto Xm = std::make_shared<SeriesOracle>(eng, build_field("X-"));
    auto psip = std::make_shared<SeriesOracle>(eng, build_field("psi+"));
    auto psim = std::make_shared<SeriesOracle>(eng, build_field("psi-"));
    for (auto& oracle : {Xp, Xm, psip, psim})
        oracle->prebuild(basis);

    std::vector<CheckTask> tasks;

    // Heisenberg modes against the zero modes and the grading.
    tasks.push_back([&t, &basis, &a_modes]() -> std::vector<CheckResult> {
        std::vector<CheckResult> out;
        for (int n : a_modes) {
            const VecOp an = boson_op(t, n);
            out.push_back(make_sector_check(
                "[K, " + mode_label("a", n) + "] = 0",
                compare_on_basis(basis, bracket_op(cartan_op(2), an), zero_op())));
            out.push_back(make_sector_check(
                "[d, " + mode_label("a", n) + "] = " + std::to_string(n) + " " +
                    mode_label("a", n),
                compare_on_basis(basis, bracket_op(grading_op(), an),
                                 scale_op(QScalar(Rat(n)), an))));
        }
        return out;
    });

    // Diagonal current zero modes are the Cartan factor and its inverse.
    tasks.push_back([&basis, psip, psim]() -> std::vector<CheckResult> {
        std::vector<CheckResult> out;
        out.push_back(make_sector_check(
            "psi+_0 = K",
            compare_on_basis(basis, oracle_mode_op(psip, 0), cartan_op(2))));
        out.push_back(make_sector_check(
            "psi-_0 = K^-1",
            compare_on_basis(basis, oracle_mode_op(psim, 0), cartan_op(-2))));
        return out;
    });

    // Per sign: Cartan conjugation, grading, and the Heisenberg bracket.
    for (int sign : {+1, -1})
        tasks.push_back([sign, &t, &basis, &a_modes, &x_modes, Xp,
                         Xm]() -> std::vector<CheckResult> {
            const auto& X = sign > 0 ? Xp : Xm;
            const std::string nm = current_name(sign);
            auto Xn = [&](int n) { return oracle_mode_op(X, 2 * n); };

            std::vector<CheckResult> out;
            for (int n : x_modes) {
                const std::string xn = mode_label(nm, n);
                {
                    std::ostringstream desc;
                    desc << "K " << xn << " K^-1 = q^" << 2 * sign << " " << xn;
                    const VecOp lhs =
                        compose_ops(cartan_op(2), compose_ops(Xn(n), cartan_op(-2)));
                    out.push_back(make_sector_check(
                        desc.str(),
                        compare_on_basis(
                            basis, lhs,
                            scale_op(QScalar::q_power(2 * sign), Xn(n)))));
                }
                {
                    std::ostringstream desc;
                    desc << "[d, " << xn << "] = " << n << " " << xn;
                    out.push_back(make_sector_check(
                        desc.str(),
                        compare_on_basis(basis, bracket_op(grading_op(), Xn(n)),
                                         scale_op(QScalar(Rat(n)), Xn(n)))));
                }
            }

            for (int m : a_modes) {
                Rat inv(1, m);
                inv.canonicalize();
                const QScalar c = QScalar(Rat(sign)) * qint_s(2 * m) * QScalar(inv) *
                                  QScalar::q_power(-sign * std::abs(m));
                for (int n : x_modes) {
                    std::ostringstream desc;
                    desc << "[" << mode_label("a", m) << ", " << mode_label(nm, n)
                         << "] = " << (sign > 0 ? "" : "-") << "([" << 2 * m << "]/"
                         << m << ") q^" << -sign * std::abs(m) << " "
                         << mode_label(nm, n + m);
                    const VecOp lhs = bracket_op(boson_op(t, m), Xn(n));
                    out.push_back(make_sector_check(
                        desc.str(),
                        compare_on_basis(basis, lhs, scale_op(c, Xn(n + m)))));
                }
            }
            return out;
        });

    // Per sign: the quadratic exchange relation. The four mode products of
    // one pair recur across neighbouring pairs, so they are memoized per
    // state and shared across the whole family.
    for (int sign : {+1, -1})
        tasks.push_back([sign, &basis, &x_modes, Xp,
                         Xm]() -> std::vector<CheckResult> {
            const auto& X = sign > 0 ? Xp : Xm;
            const std::string nm = current_name(sign);
            std::map<std::pair<int, int>, VecOp> prod;
            auto prod_op = [&](int a, int b) -> const VecOp& {
                auto it = prod.find({a, b});
                if (it == prod.end()) {
                    VecOp op = memoized_unit_op(
                        [op = compose_ops(oracle_mode_op(X, 2 * a),
                                          oracle_mode_op(X, 2 * b))](
                            const FockState& s) -> MaybeVector {
                            return op(FockVector::unit(s, QScalar(1)));
                        });
                    it = prod.emplace(std::make_pair(a, b), std::move(op)).first;
                }
                return it->second;
            };

            const QScalar q2 = QScalar::q_power(2 * sign);
            std::vector<CheckResult> out;
            for (int m : x_modes)
                for (int n : x_modes) {
                    std::ostringstream desc;
                    desc << nm << "_" << m + 1 << " " << nm << "_" << n << " - q^"
                         << 2 * sign << " " << nm << "_" << m << " " << nm << "_"
                         << n + 1 << " = q^" << 2 * sign << " " << nm << "_" << n
                         << " " << nm << "_" << m + 1 << " - " << nm << "_" << n + 1
                         << " " << nm << "_" << m;
                    const VecOp lhs =
                        sum_ops(prod_op(m + 1, n),
                                scale_op(-q2, prod_op(m, n + 1)));
                    const VecOp rhs = sum_ops(
                        scale_op(q2, prod_op(n, m + 1)),
                        scale_op(QScalar(Rat(-1)), prod_op(n + 1, m)));
                    out.push_back(make_sector_check(
                        desc.str(), compare_on_basis(basis, lhs, rhs)));
                }
            return out;
        });

    // [X+_m, X-_n] = (q^{m-n} psi+_{m+n} - q^{n-m} psi-_{m+n}) / (q - q^-1),
    // all mode pairs against the diagonal current expansions.
    tasks.push_back([&basis, &x_modes, qden_inv, Xp, Xm, psip,
                     psim]() -> std::vector<CheckResult> {
        std::vector<CheckResult> out;
        for (int m : x_modes)
            for (int n : x_modes) {
                std::ostringstream desc;
                desc << "[" << mode_label("X+", m) << ", " << mode_label("X-", n)
                     << "] = (q^" << m - n << " psi+_" << m + n << " - q^" << n - m
                     << " psi-_" << m + n << ")/(q - q^-1)";
                const VecOp lhs = bracket_op(oracle_mode_op(Xp, 2 * m),
                                             oracle_mode_op(Xm, 2 * n));
                const VecOp rhs = scale_op(
                    qden_inv,
                    sum_ops(scale_op(QScalar::q_power(m - n),
                                     diagonal_mode(psip, +1, m + n)),
                            scale_op(-QScalar::q_power(n - m),
                                     diagonal_mode(psim, -1, m + n))));
                out.push_back(
                    make_sector_check(desc.str(), compare_on_basis(basis, lhs, rhs)));
            }
        return out;
    });

    run_check_tasks(rep, tasks, parallel);
    rep.wall_seconds = timer.seconds();
    return rep;
}

} // namespace qaffine
