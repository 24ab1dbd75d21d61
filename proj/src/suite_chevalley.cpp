#include <memory>
#include <sstream>
#include <utility>

#include "qaffine/q_numbers.hpp"
#include "qaffine/suite_util.hpp"
#include "qaffine/suites.hpp"

namespace qaffine {

namespace {

const int kCartanMatrix[2][2] = {{2, -2}, {-2, 2}};

VecOp memo_op(const VecOp& op) {
    return memoized_unit_op([op](const FockState& s) -> MaybeVector {
        return op(FockVector::unit(s, QScalar(1)));
    });
}

// One Serre sum: sum_r (-1)^r binom_q(3, r) g_i^{3-r} g_j g_i^r applied to
// the window basis. The powers of g_i are memoized per state and shared by
// all four terms.
CheckResult serre_check(const std::vector<FockState>& basis, const VecOp& gi,
                        const VecOp& gj, char letter, int i) {
    const int j = 1 - i;
    std::ostringstream desc;
    for (int r = 0; r <= 3; ++r) {
        if (r > 0)
            desc << (r % 2 == 1 ? " - " : " + ");
        if (r == 1 || r == 2)
            desc << "[3] ";
        for (int k = 0; k < 3 - r; ++k)
            desc << letter << "_" << i << " ";
        desc << letter << "_" << j;
        for (int k = 0; k < r; ++k)
            desc << " " << letter << "_" << i;
    }
    desc << " = 0";

    VecOp pw[4];
    pw[0] = identity_scaled_op(QScalar(1));
    pw[1] = memo_op(gi);
    pw[2] = memo_op(compose_ops(pw[1], pw[1]));
    pw[3] = memo_op(compose_ops(pw[1], pw[2]));
    const VecOp gj_memo = memo_op(gj);

    VecOp lhs = zero_op();
    for (int r = 0; r <= 3; ++r) {
        VecOp term = compose_ops(pw[3 - r], compose_ops(gj_memo, pw[r]));
        QScalar c = QScalar(qbinom(3, r));
        if (r % 2 == 1)
            c = -c;
        lhs = sum_ops(std::move(lhs), scale_op(c, std::move(term)));
    }
    return make_sector_check(desc.str(), compare_on_basis(basis, lhs, zero_op()));
}

} // namespace

VerificationReport verify_chevalley(const Truncation& t, bool parallel) {
    const SuiteTimer timer;
    VerificationReport rep;
    rep.suite = "chevalley";
    rep.param("window", truncation_string(t));

    const std::vector<FockState> basis = enumerate_basis(t);
    rep.param("basis_states", std::to_string(basis.size()));

    const QScalar qden_inv = (QScalar::q_power(1) - QScalar::q_power(-1)).reciprocal();

    // One engine and one pair of current expansions serve every task; the
    // frozen oracles are shared read-only.
    ExactCtx ctx;
    FieldEngine<ExactCtx> eng(ctx, t);
    const ChevOps g(eng);
    g.xp->prebuild(basis);
    g.xm->prebuild(basis);

    std::vector<CheckTask> tasks;

    // Zero-mode relations: Cartan conjugation, the pairing of raising and
    // lowering generators, the central Cartan product, and the gradings.
    tasks.push_back([&basis, &g, qden_inv]() -> std::vector<CheckResult> {
        std::vector<CheckResult> out;
        for (int i : {0, 1})
            for (int j : {0, 1}) {
                const int a = kCartanMatrix[i][j];
                {
                    std::ostringstream desc;
                    desc << "t_" << i << " e_" << j << " t_" << i << "^-1 = q^" << a
                         << " e_" << j;
                    const VecOp lhs =
                        compose_ops(g.tt[i], compose_ops(g.e[j], g.tinv[i]));
                    out.push_back(make_sector_check(
                        desc.str(),
                        compare_on_basis(basis, lhs,
                                         scale_op(QScalar::q_power(a), g.e[j]))));
                }
                {
                    std::ostringstream desc;
                    desc << "t_" << i << " f_" << j << " t_" << i << "^-1 = q^" << -a
                         << " f_" << j;
                    const VecOp lhs =
                        compose_ops(g.tt[i], compose_ops(g.f[j], g.tinv[i]));
                    out.push_back(make_sector_check(
                        desc.str(),
                        compare_on_basis(basis, lhs,
                                         scale_op(QScalar::q_power(-a), g.f[j]))));
                }
            }
        for (int i : {0, 1})
            for (int j : {0, 1}) {
                std::ostringstream desc;
                desc << "[e_" << i << ", f_" << j << "] = ";
                VecOp rhs;
                if (i == j) {
                    desc << "(t_" << i << " - t_" << i << "^-1)/(q - q^-1)";
                    rhs = scale_op(qden_inv,
                                   sum_ops(g.tt[i], scale_op(QScalar(Rat(-1)),
                                                             g.tinv[i])));
                } else {
                    desc << "0";
                    rhs = zero_op();
                }
                out.push_back(make_sector_check(
                    desc.str(),
                    compare_on_basis(basis, bracket_op(g.e[i], g.f[j]), rhs)));
            }
        out.push_back(make_sector_check(
            "t_0 t_1 = q^2 id",
            compare_on_basis(basis, compose_ops(g.tt[0], g.tt[1]),
                             identity_scaled_op(QScalar::q_power(2)))));
        for (int i : {0, 1}) {
            {
                std::ostringstream desc;
                desc << "[d, e_" << i << "] = " << (i == 0 ? "e_0" : "0");
                const VecOp rhs = i == 0 ? g.e[0] : zero_op();
                out.push_back(make_sector_check(
                    desc.str(),
                    compare_on_basis(basis, bracket_op(grading_op(), g.e[i]), rhs)));
            }
            {
                std::ostringstream desc;
                desc << "[d, f_" << i << "] = " << (i == 0 ? "-f_0" : "0");
                const VecOp rhs =
                    i == 0 ? scale_op(QScalar(Rat(-1)), g.f[0]) : zero_op();
                out.push_back(make_sector_check(
                    desc.str(),
                    compare_on_basis(basis, bracket_op(grading_op(), g.f[i]), rhs)));
            }
            out.push_back(make_sector_check(
                "[d, t_" + std::to_string(i) + "] = 0",
                compare_on_basis(basis, bracket_op(grading_op(), g.tt[i]),
                                 zero_op())));
        }
        return out;
    });

    // Cubic Serre relations, one (letter, i) pair per task.
    for (const bool raising : {true, false})
        for (const int i : {0, 1})
            tasks.push_back([raising, i, &basis, &g]() -> std::vector<CheckResult> {
                const VecOp& gi = raising ? g.e[i] : g.f[i];
                const VecOp& gj = raising ? g.e[1 - i] : g.f[1 - i];
                return {serre_check(basis, gi, gj, raising ? 'e' : 'f', i)};
            });

    run_check_tasks(rep, tasks, parallel);
    rep.wall_seconds = timer.seconds();
    return rep;
}

} // namespace qaffine
