#include "doctest.h"

#include <set>
#include <stdexcept>
#include <vector>

#include "qaffine/fock.hpp"
#include "qaffine/numeric.hpp"
#include "qaffine/q_numbers.hpp"

using namespace qaffine;

namespace {

const ExactCtx X;

FockVector unit(const FockState& s) { return FockVector::unit(s, QScalar(1)); }

FockState state_of(int p, std::vector<int> boson_modes, std::vector<int> fermion_two_r) {
    FockState s;
    s.p = p;
    for (int n : boson_modes) {
        if (!s.bosons.empty() && s.bosons.back().first == n)
            ++s.bosons.back().second;
        else
            s.bosons.emplace_back(n, 1);
    }
    s.fermions = std::move(fermion_two_r);
    s.deg2 = degree2(s);
    return s;
}

// Oracle for single-mode boson strings: states (a_{-m})^k |0> are monomials
// x^k, a_{-m} is multiplication by x, and a_m is C d/dx with C = [2m]^2/m,
// which realizes the commutator by pure polynomial calculus.
struct PolyOracle {
    QScalar contraction;
    std::vector<QScalar> coeffs{QScalar(1)}; // index = number of creation modes

    void create() { coeffs.insert(coeffs.begin(), QScalar()); }
    void annihilate() {
        std::vector<QScalar> out;
        for (std::size_t k = 1; k < coeffs.size(); ++k)
            out.push_back(QScalar(static_cast<long>(k)) * contraction * coeffs[k]);
        if (out.empty())
            out.push_back(QScalar());
        coeffs = std::move(out);
    }
};

// Independent partition counter: number of multisets of positive integers
// summing to exactly n.
long partition_count(int n) {
    std::vector<long> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int total = part; total <= n; ++total)
            ways[static_cast<std::size_t>(total)] +=
                ways[static_cast<std::size_t>(total - part)];
    return ways[static_cast<std::size_t>(n)];
}

// Independent state counter over doubled degrees: bosons contribute even
// amounts (partitions), fermions odd distinct parts, momentum p costs p^2.
long window_count(int deg2_max, int p_min, int p_max) {
    const std::size_t cap = static_cast<std::size_t>(deg2_max) + 1;
    std::vector<long> boson(cap, 0), fermion(cap, 0);
    boson[0] = 1;
    for (int n = 1; 2 * n <= deg2_max; ++n)
        for (int d = 2 * n; d <= deg2_max; ++d)
            boson[static_cast<std::size_t>(d)] += boson[static_cast<std::size_t>(d - 2 * n)];
    fermion[0] = 1;
    for (int r2 = 1; r2 <= deg2_max; r2 += 2)
        for (int d = deg2_max; d >= r2; --d)
            fermion[static_cast<std::size_t>(d)] +=
                fermion[static_cast<std::size_t>(d - r2)];
    long total = 0;
    for (int p = p_min; p <= p_max; ++p) {
        if (p * p > deg2_max)
            continue;
        for (int db = 0; db + p * p <= deg2_max; ++db)
            for (int df = 0; db + df + p * p <= deg2_max; ++df)
                total += boson[static_cast<std::size_t>(db)] *
                         fermion[static_cast<std::size_t>(df)];
    }
    return total;
}

} // namespace

TEST_CASE("Fock states: degree, parity, and canonical edits") {
    const FockState vac = FockState::vacuum();
    CHECK(vac.deg2 == 0);
    CHECK(degree2(vac) == 0);
    CHECK(parity_sign(vac) == 1);

    // a_{-1} b_{-1/2} e^{Q}|0> has degree 1 + 1/2 + 1/2 = 2.
    const FockState s1 = state_of(1, {1}, {1});
    CHECK(s1.deg2 == 4);
    // e^{2Q}|0> has degree p^2/2 = 2.
    CHECK(state_of(2, {}, {}).deg2 == 4);

    // parity agrees with (-1)^{#fermions + p} on a window of states.
    for (const FockState& s : enumerate_basis({12, -2, 2})) {
        const int expect = (static_cast<int>(s.fermions.size()) + s.p) % 2 == 0 ? 1 : -1;
        CHECK(parity_sign(s) == expect);
    }

    // Degree additivity of the canonical edits.
    for (const FockState& s : enumerate_basis({8, -1, 1})) {
        CHECK(with_boson_added(s, 3).deg2 == s.deg2 + 6);
        const FermionEdit fe = with_fermion_added(s, 7);
        if (fe.ok)
            CHECK(fe.state.deg2 == s.deg2 + 7);
        // e^{Q} changes the degree by p + 1/2 (doubled: 2p + 1).
        CHECK(with_momentum_shifted(s, 1).deg2 == s.deg2 + 2 * s.p + 1);
        CHECK(degree2(s) == s.deg2);
    }
}

TEST_CASE("Fock states: boson ladder matches the polynomial-calculus oracle") {
    const Truncation t{20, 0, 0};
    const QScalar c11 = qint_s(2) * qint_s(2); // [2]^2 / 1

    // a_1 a_{-1}|0> = [2]^2 |0>.
    FockVector v = apply_boson(X, -1, unit(FockState::vacuum()), t);
    v = apply_boson(X, 1, v, t);
    CHECK(v.coefficient_of(FockState::vacuum()) == c11);
    CHECK(v.term_count() == 1);

    // a_2 |0> = 0.
    CHECK(apply_boson(X, 2, unit(FockState::vacuum()), t).is_zero());

    // a_1 (a_{-1})^2 |0> = 2 [2]^2 a_{-1}|0>.
    FockVector w = unit(FockState::vacuum());
    w = apply_boson(X, -1, w, t);
    w = apply_boson(X, -1, w, t);
    w = apply_boson(X, 1, w, t);
    CHECK(w.coefficient_of(state_of(0, {1}, {})) == QScalar(2) * c11);
    CHECK(w.term_count() == 1);

    // Longer strings in a single mode against the oracle.
    for (int m : {1, 2, 3}) {
        Rat inv_m(1, m);
        PolyOracle oracle{QScalar(inv_m) * qint_s(2 * m) * qint_s(2 * m), {QScalar(1)}};
        FockVector x = unit(FockState::vacuum());
        const std::vector<int> script = {-m, -m, -m, m, -m, m, m, -m, m};
        for (int op : script) {
            x = apply_boson(X, op, x, t);
            if (op < 0)
                oracle.create();
            else
                oracle.annihilate();
        }
        for (std::size_t k = 0; k < oracle.coeffs.size(); ++k) {
            std::vector<int> modes(k, m);
            CHECK(x.coefficient_of(state_of(0, modes, {})) == oracle.coeffs[k]);
        }
    }
}

TEST_CASE("Fock states: boson commutator holds on a basis window") {
    const Truncation t{16, 0, 0};
    for (int m : {-2, -1, 1, 2})
        for (int n : {-2, -1, 1, 2}) {
            const QScalar expect =
                m + n == 0 && m > 0
                    ? QScalar(Rat(1, m)) * qint_s(2 * m) * qint_s(2 * m)
                    : (m + n == 0 ? -(QScalar(Rat(1, -m)) * qint_s(-2 * m) * qint_s(-2 * m))
                                  : QScalar());
            for (const FockState& s : enumerate_basis({8, 0, 0})) {
                TruncationLog log;
                const FockVector v = unit(s);
                const FockVector ab =
                    apply_boson(X, m, apply_boson(X, n, v, t, &log), t, &log);
                const FockVector ba =
                    apply_boson(X, n, apply_boson(X, m, v, t, &log), t, &log);
                CHECK(log.dropped == 0); // window is safe for |m|,|n| <= 2
                CHECK(ab - ba == v.scaled(expect));
            }
        }
}

TEST_CASE("Fock states: fermion ladder, signs, and anticommutator") {
    const Truncation t{20, 0, 0};
    // Coefficients compared against the ratio form [4r]/(2 [2r]).
    const auto kappa = [](int two_r) {
        return QScalar(q_integer_double(2 * two_r)) /
               (QScalar(2) * QScalar(q_integer_double(two_r)));
    };

    // b_{1/2} b_{-1/2} |0> = ([2]/2)|0>.
    FockVector v = apply_fermion(X, -1, unit(FockState::vacuum()), t);
    v = apply_fermion(X, 1, v, t);
    CHECK(v.coefficient_of(FockState::vacuum()) == kappa(1));
    CHECK(kappa(1) == qint_s(2) * QScalar(Rat(1, 2)));

    // b_{-1/2} b_{-1/2} |0> = 0.
    FockVector w = apply_fermion(X, -1, unit(FockState::vacuum()), t);
    CHECK(apply_fermion(X, -1, w, t).is_zero());

    // b_{1/2} b_{-3/2} b_{-1/2} |0> = -([2]/2) b_{-3/2}|0>.
    FockVector u = unit(FockState::vacuum());
    u = apply_fermion(X, -1, u, t);
    u = apply_fermion(X, -3, u, t);
    u = apply_fermion(X, 1, u, t);
    CHECK(u.coefficient_of(state_of(0, {}, {3})) == -kappa(1));
    CHECK(u.term_count() == 1);

    // {b_r, b_s} = delta_{r+s,0} [4r]/(2[2r]) on a window of basis states.
    for (int r2 : {-5, -3, -1, 1, 3, 5})
        for (int s2 : {-5, -3, -1, 1, 3, 5}) {
            const QScalar expect = r2 + s2 == 0 ? kappa(std::abs(r2)) : QScalar();
            for (const FockState& s : enumerate_basis({6, 0, 0})) {
                TruncationLog log;
                const FockVector x = unit(s);
                const FockVector anti =
                    apply_fermion(X, r2, apply_fermion(X, s2, x, t, &log), t, &log) +
                    apply_fermion(X, s2, apply_fermion(X, r2, x, t, &log), t, &log);
                CHECK(log.dropped == 0);
                CHECK(anti == x.scaled(expect));
            }
        }
}

TEST_CASE("Fock states: zero modes and projectors") {
    const Truncation t{9, -2, 2};
    const FockState one_q = state_of(1, {}, {});

    // K on |0> is |0>; on e^{Q}|0> it is q^2.
    CHECK(apply_momentum(X, MomentumOp::Cartan, 0, unit(FockState::vacuum()), t) ==
          unit(FockState::vacuum()));
    CHECK(apply_momentum(X, MomentumOp::Cartan, 0, unit(one_q), t) ==
          unit(one_q).scaled(QScalar::q_power(2)));
    // P annihilates p=0 terms and reads off p elsewhere.
    CHECK(apply_momentum(X, MomentumOp::Momentum, 0, unit(FockState::vacuum()), t)
              .is_zero());
    CHECK(apply_momentum(X, MomentumOp::Momentum, 0, unit(one_q), t) == unit(one_q));
    // parity of b_{-1/2} e^{Q}|0> is +1.
    const FockState bq = state_of(1, {}, {1});
    CHECK(parity_sign(bq) == 1);
    CHECK(apply_momentum(X, MomentumOp::Parity, 0, unit(bq), t) == unit(bq));

    // P_+ keeps |0>, P_- kills it.
    CHECK(project_parity(1, unit(FockState::vacuum())) == unit(FockState::vacuum()));
    CHECK(project_parity(-1, unit(FockState::vacuum())).is_zero());

    // Projector algebra on a generic vector, and agreement with (1±parity)/2.
    FockVector big;
    for (const FockState& s : enumerate_basis(t))
        big.add_term(s, QScalar::q_power(s.deg2 - s.p) + QScalar(1));
    const FockVector plus = project_parity(1, big), minus = project_parity(-1, big);
    CHECK(plus + minus == big);
    CHECK(project_parity(1, plus) == plus);
    CHECK(project_parity(-1, plus).is_zero());
    const FockVector par = apply_momentum(X, MomentumOp::Parity, 0, big, t);
    CHECK((big + par).scaled(QScalar(Rat(1, 2))) == plus);
    CHECK((big - par).scaled(QScalar(Rat(1, 2))) == minus);

    // e^{Q} walks the momentum window and drops at its edge.
    TruncationLog log;
    FockVector stepped = apply_momentum(X, MomentumOp::ExpQ, 1, unit(one_q), t, &log);
    CHECK(stepped == unit(state_of(2, {}, {})));
    CHECK(log.dropped == 0);
    apply_momentum(X, MomentumOp::ExpQ, 1, stepped, t, &log);
    CHECK(log.dropped == 1);

    // Grading operator: d-eigenvalue is minus the degree.
    const FockState deep = state_of(0, {1}, {1});
    CHECK(apply_grading(X, unit(deep)) ==
          unit(deep).scaled(QScalar(Rat(-3, 2))));
}

TEST_CASE("Fock states: truncation drops are recorded") {
    const Truncation tight{0, 0, 0};
    TruncationLog log;
    CHECK(apply_boson(X, -1, unit(FockState::vacuum()), tight, &log).is_zero());
    CHECK(log.dropped == 1);
    CHECK(apply_fermion(X, -1, unit(FockState::vacuum()), tight, &log).is_zero());
    CHECK(log.dropped == 2);
    // Annihilation never needs the log.
    CHECK(apply_boson(X, 1, unit(FockState::vacuum()), tight, &log).is_zero());
    CHECK(log.dropped == 2);
}

TEST_CASE("Fock basis: enumeration matches counting oracles") {
    // Degree <= 2, p = 0, bosons only: the partitions of 0, 1, 2.
    {
        std::vector<FockState> bosonic;
        for (const FockState& s : enumerate_basis({4, 0, 0}))
            if (s.fermions.empty())
                bosonic.push_back(s);
        REQUIRE(bosonic.size() == 4);
        CHECK(bosonic[0] == FockState::vacuum());
        CHECK(bosonic[1] == state_of(0, {1}, {}));
        CHECK(bosonic[2] == state_of(0, {1, 1}, {}));
        CHECK(bosonic[3] == state_of(0, {2}, {}));
    }
    // Degree <= 1, p = 0, fermions only: no half-odd pair fits.
    {
        long count = 0;
        for (const FockState& s : enumerate_basis({2, 0, 0}))
            if (s.bosons.empty())
                ++count;
        CHECK(count == 2);
    }
    // Degree <= 1/2: exactly the vacuum and b_{-1/2}|0>.
    {
        const std::vector<FockState> basis = enumerate_basis({1, 0, 0});
        REQUIRE(basis.size() == 2);
        CHECK(basis[0] == FockState::vacuum());
        CHECK(basis[1] == state_of(0, {}, {1}));
    }

    // Partition-count oracle for the bosonic sector.
    for (int dmax = 0; dmax <= 8; ++dmax) {
        long expected = 0;
        for (int n = 0; n <= dmax; ++n)
            expected += partition_count(n);
        long actual = 0;
        for (const FockState& s : enumerate_basis({2 * dmax, 0, 0}))
            if (s.fermions.empty())
                ++actual;
        CHECK(actual == expected);
    }

    // Full window count against the independent double-DP oracle.
    CHECK(static_cast<long>(enumerate_basis({13, -3, 3}).size()) ==
          window_count(13, -3, 3));
    CHECK(static_cast<long>(enumerate_basis({12, -1, 2}).size()) ==
          window_count(12, -1, 2));

    // Deterministic, duplicate-free, within bounds, and correctly ordered.
    const Truncation t{9, -2, 2};
    const std::vector<FockState> basis = enumerate_basis(t);
    CHECK(basis == enumerate_basis(t));
    std::set<std::string> seen;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(t.contains(basis[i]));
        CHECK(seen.insert(encode(basis[i])).second);
        if (i + 1 < basis.size())
            CHECK(basis[i] < basis[i + 1]);
    }

    CHECK_THROWS_AS(enumerate_basis({-1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_basis({4, 1, 0}), std::invalid_argument);
}

TEST_CASE("Fock states: text encoding round-trips") {
    CHECK(encode(FockState::vacuum()) == "p=0; a:[]; b:[]");
    CHECK(encode(state_of(1, {1, 1, 2}, {1, 3})) == "p=1; a:[1,1,2]; b:[1/2,3/2]");
    CHECK(encode(state_of(-2, {}, {5})) == "p=-2; a:[]; b:[5/2]");

    for (const FockState& s : enumerate_basis({11, -2, 2})) {
        const FockState back = decode_state(encode(s));
        CHECK(back == s);
        CHECK(back.deg2 == s.deg2);
    }

    CHECK_THROWS_AS(decode_state("p=1; a:[2,1]; b:[]"), std::invalid_argument);
    CHECK_THROWS_AS(decode_state("p=0; a:[]; b:[2/2]"), std::invalid_argument);
    CHECK_THROWS_AS(decode_state("p=0; a:[]; b:[1/2,1/2]"), std::invalid_argument);
    CHECK_THROWS_AS(decode_state("p=0; a:[0]; b:[]"), std::invalid_argument);
    CHECK_THROWS_AS(decode_state("p=0; a:[]; b:[]x"), std::invalid_argument);
    CHECK_THROWS_AS(decode_state("nonsense"), std::invalid_argument);
}

TEST_CASE("Fock states: numeric mode mirrors exact mode") {
    const NumericCtx N(Cplx(0.3, 0.0));
    const Truncation t{12, -1, 1};
    // Drive the same operator script through both modes and compare.
    FockVector ve = unit(FockState::vacuum());
    FockVectorN vn = FockVectorN::unit(FockState::vacuum(), Cplx(1.0, 0.0));
    const std::vector<std::pair<char, int>> script = {
        {'b', -1}, {'f', -1}, {'f', -3}, {'q', 1}, {'b', -2},
        {'f', 3},  {'b', 2},  {'k', 0},  {'b', -1}, {'f', 1}};
    for (const auto& [kind, arg] : script) {
        switch (kind) {
        case 'b':
            ve = apply_boson(X, arg, ve, t);
            vn = apply_boson(N, arg, vn, t);
            break;
        case 'f':
            ve = apply_fermion(X, arg, ve, t);
            vn = apply_fermion(N, arg, vn, t);
            break;
        case 'q':
            ve = apply_momentum(X, MomentumOp::ExpQ, arg, ve, t);
            vn = apply_momentum(N, MomentumOp::ExpQ, arg, vn, t);
            break;
        case 'k':
            ve = apply_momentum(X, MomentumOp::Cartan, 0, ve, t);
            vn = apply_momentum(N, MomentumOp::Cartan, 0, vn, t);
            break;
        }
    }
    CHECK(!ve.is_zero());
    CHECK(ve.term_count() == vn.term_count());
    for (const auto& [s, c] : ve.terms())
        CHECK(std::abs(vn.coefficient_of(s) - evaluate_numeric(c, Cplx(0.3, 0.0))) <
              1e-12);
}
