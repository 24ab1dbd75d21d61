#include <sstream>

#include "qaffine/q_numbers.hpp"
#include "qaffine/suite_util.hpp"
#include "qaffine/suites.hpp"

namespace qaffine {

namespace {

// [2m]^2 / m, the central value of [a_m, a_{-m}].
QScalar boson_pairing(int m) {
    Rat inv(1, m);
    inv.canonicalize();
    return qint_s(2 * m) * qint_s(2 * m) * QScalar(inv);
}

// (q^{2r} + q^{-2r})/2, the central value of {b_r, b_{-r}}.
QScalar fermion_pairing(int two_r) {
    return (QScalar::q_power(two_r) + QScalar::q_power(-two_r)) * QScalar(Rat(1, 2));
}

} // namespace

VerificationReport verify_oscillators(const Truncation& t, bool parallel) {
    const SuiteTimer timer;
    VerificationReport rep;
    rep.suite = "oscillators";
    rep.param("window", truncation_string(t));
    rep.param("boson_modes", "|m|, |n| <= 2");
    rep.param("fermion_modes", "|r|, |s| <= 5/2");

    const std::vector<FockState> basis = enumerate_basis(t);
    rep.param("basis_states", std::to_string(basis.size()));

    const std::vector<int> boson_modes = {-2, -1, 1, 2};
    const std::vector<int> fermion_modes = {-5, -3, -1, 1, 3, 5};

    std::vector<CheckTask> tasks;

    for (int m : boson_modes)
        for (int n : boson_modes)
            tasks.push_back([m, n, &t, &basis]() -> std::vector<CheckResult> {
                std::ostringstream desc;
                desc << "[a_" << m << ", a_" << n << "] = ";
                VecOp rhs;
                if (m + n == 0) {
                    desc << "([" << 2 * m << "]^2/" << m << ") id";
                    rhs = identity_scaled_op(boson_pairing(m));
                } else {
                    desc << "0";
                    rhs = zero_op();
                }
                const VecOp lhs = bracket_op(boson_op(t, m), boson_op(t, n));
                return {make_sector_check(desc.str(),
                                          compare_on_basis(basis, lhs, rhs))};
            });

    for (int two_r : fermion_modes)
        for (int two_s : fermion_modes)
            tasks.push_back([two_r, two_s, &t, &basis]() -> std::vector<CheckResult> {
                std::ostringstream desc;
                desc << "{b_" << half_string(two_r) << ", b_" << half_string(two_s)
                     << "} = ";
                VecOp rhs;
                if (two_r + two_s == 0) {
                    desc << "((q^" << two_r << " + q^" << -two_r << ")/2) id";
                    rhs = identity_scaled_op(fermion_pairing(two_r));
                } else {
                    desc << "0";
                    rhs = zero_op();
                }
                const VecOp lhs = bracket_op(fermion_op(t, two_r),
                                             fermion_op(t, two_s), QScalar(1),
                                             /*anticommute=*/true);
                return {make_sector_check(desc.str(),
                                          compare_on_basis(basis, lhs, rhs))};
            });

    // Mixed sector: bosons commute with fermions.
    for (int m : {-1, 1})
        for (int two_r : {-1, 1})
            tasks.push_back([m, two_r, &t, &basis]() -> std::vector<CheckResult> {
                std::ostringstream desc;
                desc << "[a_" << m << ", b_" << half_string(two_r) << "] = 0";
                const VecOp lhs = bracket_op(boson_op(t, m), fermion_op(t, two_r));
                return {make_sector_check(desc.str(),
                                          compare_on_basis(basis, lhs, zero_op()))};
            });

    // Zero modes: K e^Q = q^2 e^Q K, i.e. conjugating the momentum shift by
    // the Cartan factor costs one application of q^{2}.
    tasks.push_back([&t, &basis]() -> std::vector<CheckResult> {
        const VecOp lhs = compose_ops(cartan_op(2), momentum_shift_op(t, 1));
        const VecOp rhs = scale_op(QScalar::q_power(2),
                                   compose_ops(momentum_shift_op(t, 1), cartan_op(2)));
        return {make_sector_check("K e^Q = q^2 e^Q K",
                                  compare_on_basis(basis, lhs, rhs))};
    });

    run_check_tasks(rep, tasks, parallel);
    rep.wall_seconds = timer.seconds();
    return rep;
}

} // namespace qaffine
