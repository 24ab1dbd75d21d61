#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qaffine/apply_field.hpp"
#include "qaffine/coeff_ctx.hpp"
#include "qaffine/fields.hpp"
#include "qaffine/fock.hpp"
#include "qaffine/report.hpp"

namespace qaffine {

// --- shared machinery for the verification suites ---------------------------
//
// A check evaluates two operator expressions on every basis state of a window
// and compares the images exactly. Operators are wrapped as VecOp closures
// that return std::nullopt whenever the image is not trustworthy inside the
// window (a creation crossed the momentum wall, or a requested series
// coefficient fell outside the exact window); such states are skipped and
// counted, never asserted.

using MaybeVector = std::optional<FockVector>;
using VecOp = std::function<MaybeVector(const FockVector&)>;

// Extends a per-basis-state action linearly, memoizing one image per state
// inside the closure. A dirty unit image poisons every vector containing it.
VecOp memoized_unit_op(std::function<MaybeVector(const FockState&)> unit_fn);

// Coefficient of z^{-m - weight} (mode2 = 2m) of a field as an operator.
// The engine reference must outlive the closure; engines are not shareable
// across threads, so each parallel task builds its ops on its own engine.
VecOp mode_op(FieldEngine<ExactCtx>& eng, std::shared_ptr<const FieldOperator> f,
              int mode2);

// Memoizes the whole series of one field per basis state, so every mode of
// the field reads the same expansion: checks that touch many modes of the
// same current share one application per state. Not thread-safe; one oracle
// lives inside one task.
class SeriesOracle {
public:
    SeriesOracle(FieldEngine<ExactCtx>& eng, FieldOperator f)
        : eng_(eng), f_(std::move(f)) {}

    const FieldOperator& field() const { return f_; }

    // Mode action (z^{-m - weight} coefficient, mode2 = 2m) extended
    // linearly; nullopt when any unit's expansion dropped a creation or the
    // requested exponent lies outside that unit's exact window.
    MaybeVector mode(int mode2, const FockVector& v);

    // Expand the field on every listed state now and freeze the cache.
    // After this, mode() never mutates the oracle, so a frozen oracle may be
    // shared by concurrent tasks; querying a state that was not prebuilt is
    // an error.
    void prebuild(const std::vector<FockState>& states);

private:
    struct Entry {
        LaurentSeries series;
        long long dropped = 0;
    };
    const Entry& entry(const FockState& s);

    FieldEngine<ExactCtx>& eng_;
    FieldOperator f_;
    bool frozen_ = false;
    std::map<FockState, Entry> memo_;
};

VecOp oracle_mode_op(std::shared_ptr<SeriesOracle> oracle, int mode2);

// The finite Chevalley generators on shared current oracles:
//   e_1 = X+_0, f_1 = X-_0, t_1 = K = q^{2P},
//   e_0 = X-_1 t_1^{-1}, f_0 = t_1 X+_{-1}, t_0 = q^2 K^{-1}.
// Every generator built from one ChevOps shares the two oracles, so chains
// and brackets apply each current once per reached state.
struct ChevOps {
    std::shared_ptr<SeriesOracle> xp, xm;
    VecOp e[2], f[2], tt[2], tinv[2];

    explicit ChevOps(FieldEngine<ExactCtx>& eng);
};

// e_1 / f_1 through the engine's memoized zero-mode action.
VecOp chev_op(FieldEngine<ExactCtx>& eng, ChevGen g);

VecOp boson_op(const Truncation& t, int m);        // a_m
VecOp fermion_op(const Truncation& t, int two_r);  // b_r, doubled mode
VecOp cartan_op(int qexp_per_p);                   // q^{qexp_per_p * P}
VecOp momentum_shift_op(const Truncation& t, int delta); // e^{delta Q}
VecOp grading_op();                                // d
VecOp parity_projector_op(int sign);               // (1 ± parity)/2
VecOp identity_scaled_op(const QScalar& c);
VecOp zero_op();

VecOp compose_ops(VecOp outer, VecOp inner);
VecOp scale_op(const QScalar& c, VecOp op);
VecOp sum_ops(VecOp a, VecOp b);
// a b - x b a (x = 1: commutator); set anticommute for a b + b a.
VecOp bracket_op(VecOp a, VecOp b, const QScalar& x = QScalar(1),
                 bool anticommute = false);

// Result of comparing two operators over a basis panel.
struct SectorComparison {
    long evaluated = 0;
    long skipped = 0;
    bool failed = false;
    std::string witness; // first difference, in basis order
};

SectorComparison compare_on_basis(const std::vector<FockState>& basis,
                                  const VecOp& lhs, const VecOp& rhs);

// Folds a comparison into a report: PASS when every evaluated state agreed,
// FAIL with the witness, SKIPPED when nothing could be evaluated.
CheckResult make_sector_check(const std::string& description,
                              const SectorComparison& c);

std::string count_note(long evaluated, long skipped);

// Renders a doubled integer as the half-integer it stands for ("3/2", "-2").
std::string half_string(int doubled);

// First difference between two vectors, or empty when equal.
std::string first_difference(const FockVector& lhs, const FockVector& rhs);

// --- staged two-variable products -------------------------------------------

// Cells (k2_outer, k2_inner) of outer(z_out) inner(z_in) acting through the
// engine's window; exact for cell sums up to exact_total_max2. Momentum-wall
// drops are reported through log.
BiSeries stage_product(FieldEngine<ExactCtx>& eng, const FieldOperator& outer,
                       const FieldOperator& inner, const FockVector& v,
                       TruncationLog* log = nullptr);

// --- parallel orchestration ---------------------------------------------------

// Runs fn(0..n-1), across OpenMP threads when parallel is set. fn must not
// throw (tasks catch internally and report).
void parallel_for_index(long n, bool parallel, const std::function<void(long)>& fn);

// A task computes an ordered block of check results; blocks are appended to
// the report in task order regardless of execution order, and a task that
// throws contributes one FAIL carrying the exception text.
using CheckTask = std::function<std::vector<CheckResult>()>;
void run_check_tasks(VerificationReport& rep, const std::vector<CheckTask>& tasks,
                     bool parallel);

// Wall-clock scope timer for VerificationReport::wall_seconds.
class SuiteTimer {
public:
    SuiteTimer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string truncation_string(const Truncation& t);

} // namespace qaffine
