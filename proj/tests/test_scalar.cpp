#include <complex>
#include <random>

#include "doctest.h"
#include "qaffine/numeric.hpp"
#include "qaffine/q_numbers.hpp"
#include "qaffine/qscalar.hpp"

using namespace qaffine;

namespace {

LaurentPolyQ qpow(int e) { return LaurentPolyQ::q_power(e); }

} // namespace

TEST_CASE("laurent polynomial basics") {
    LaurentPolyQ z;
    CHECK(z.is_zero());
    CHECK(z.to_string() == "0");

    LaurentPolyQ p = qpow(3);
    p.set_coeff(3, Rat(2));
    p.set_coeff(0, Rat(-1));
    CHECK(p.to_string() == "2*q^3 - 1");
    CHECK(p.coeff(3) == 2);
    CHECK(p.coeff(1) == 0);

    LaurentPolyQ bar = p.subst_q_power(-1);
    CHECK(bar.coeff(-3) == 2);
    CHECK(bar.coeff(0) == -1);

    CHECK((p - p).is_zero());
    CHECK((p * LaurentPolyQ(Rat(1))) == p);
    CHECK((qpow(2) * qpow(-5)) == qpow(-3));
}

TEST_CASE("q-integers") {
    CHECK(qint(0).is_zero());
    CHECK(qint(2) == qpow(1) + qpow(-1));
    CHECK(qint(3) == qpow(2) + LaurentPolyQ(1) + qpow(-2));
    for (int n = -6; n <= 6; ++n) {
        CHECK(qint(-n) == -qint(n));
        CHECK(qint(n).subst_q_power(-1) == qint(n));
    }
    // (q^n - q^-n) = [n] (q - q^-1)
    for (int n = 1; n <= 8; ++n) {
        CHECK(qint(n) * (qpow(1) - qpow(-1)) == qpow(n) - qpow(-n));
    }
}

TEST_CASE("q-factorial") {
    CHECK(qfactorial(0).is_one());
    CHECK(qfactorial(2) == qint(2));
    CHECK(qfactorial(3) == qint(2) * qint(3));
    CHECK_THROWS_AS(qfactorial(-1), std::domain_error);

    const Cplx q0(0.5, 0.0);
    const Cplx lhs = evaluate_numeric(qfactorial(3), q0);
    const Cplx rhs = evaluate_numeric(qint(1), q0) * evaluate_numeric(qint(2), q0) *
                     evaluate_numeric(qint(3), q0);
    CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("q-binomial") {
    CHECK(qbinom(3, 0).is_one());
    CHECK(qbinom(2, 1) == qint(2));
    CHECK_THROWS_AS(q_binomial(3, 4), std::domain_error);
    CHECK_THROWS_AS(q_binomial(3, -1), std::domain_error);

    // brute-force expansion of [4]!/([2]![2]!) = [3][4]/[2]
    const RatFuncQ brute =
        RatFuncQ(qint(3)) * RatFuncQ(qint(4)) / RatFuncQ(qint(2));
    CHECK(RatFuncQ(qbinom(4, 2)) == brute);
    CHECK(qbinom(4, 2) == qpow(4) + qpow(2) + 2 * LaurentPolyQ(Rat(1)) + qpow(-2) + qpow(-4));

    for (int n = 0; n <= 8; ++n)
        for (int r = 0; r <= n; ++r) {
            CHECK(qbinom(n, r) == qbinom(n, n - r));
            CHECK(qbinom(n, r).subst_q_power(-1) == qbinom(n, r));
        }

    // classical limit via the reduced polynomial form
    const Cplx at_one = evaluate_numeric(RatFuncQ(qbinom(4, 2)), Cplx(1.0, 0.0));
    CHECK(std::abs(at_one - Cplx(6.0, 0.0)) < 1e-12);
}

TEST_CASE("rational function canonical form") {
    // (q^2 - 1)/(q - 1) reduces to q + 1
    const RatFuncQ a(qpow(2) - LaurentPolyQ(1), qpow(1) - LaurentPolyQ(1));
    CHECK(a.is_poly());
    CHECK(a.num() == qpow(1) + LaurentPolyQ(1));

    // denominator is normalized to lowest exponent 0, lowest coefficient 1
    const RatFuncQ b(LaurentPolyQ(1), qpow(-1) - qpow(1));
    CHECK(!b.den().is_one());
    CHECK(b.den().lowest_exp() == 0);
    CHECK(b.den().coeff(0) == 1);
    CHECK(b * RatFuncQ(qpow(-1) - qpow(1)) == RatFuncQ(Rat(1)));

    const RatFuncQ c = RatFuncQ(qint(5)) / RatFuncQ(qint(3));
    CHECK(c * RatFuncQ(qint(3)) == RatFuncQ(qint(5)));
    CHECK((c - c).is_zero());
    CHECK(c.reciprocal() * c == RatFuncQ(Rat(1)));

    // q -> q^-1 round trip through the canonical form
    CHECK(c.subst_q_power(-1).subst_q_power(-1) == c);
}

TEST_CASE("QScalar field arithmetic") {
    const QScalar s2 = QScalar::sqrt2();
    CHECK(s2 * s2 == QScalar(Rat(2)));

    const QScalar qm = QScalar::q_power(1) - QScalar::q_power(-1); // q - q^-1
    CHECK(qm.reciprocal() * qm == QScalar(Rat(1)));

    const QScalar mix = QScalar(Rat(1)) + s2;
    CHECK(mix / mix == QScalar(Rat(1)));
    CHECK((mix - mix).is_zero());
    CHECK(mix * mix.reciprocal() == QScalar(Rat(1)));

    CHECK(QScalar(Rat(2)).pow(-2) == QScalar(Rat(1, 4)));
    CHECK(s2.pow(3) == Rat(2) * s2);
}

TEST_CASE("QScalar canonical strings round-trip") {
    const QScalar samples[] = {
        QScalar(),
        QScalar(Rat(5)),
        QScalar(Rat(-3, 7)),
        QScalar::q_power(2),
        -QScalar::q_power(-4),
        QScalar(RatFuncQ(qint(3), qint(2))),
        QScalar::sqrt2(),
        QScalar(Rat(1)) + QScalar::sqrt2(),
        QScalar(RatFuncQ(qint(5), qint(4))) -
            QScalar::sqrt2() * QScalar(RatFuncQ(qpow(-3) - LaurentPolyQ(Rat(1, 2)), qint(2))),
    };
    for (const QScalar& x : samples) {
        const std::string text = x.to_string();
        const QScalar back = QScalar::from_string(text);
        CHECK(back == x);
        CHECK(back.to_string() == text);
    }
    // Non-canonical input re-renders canonically (denominator lowest exponent 0,
    // lowest coefficient 1) but keeps its value.
    const QScalar parsed = QScalar::from_string("(2*q^3 - 1)/(q - q^-1)");
    const QScalar direct(RatFuncQ(Rat(2) * qpow(3) - LaurentPolyQ(1), qpow(1) - qpow(-1)));
    CHECK(parsed == direct);
    CHECK(QScalar::from_string(parsed.to_string()) == parsed);
    CHECK_THROWS_AS(QScalar::from_string("q +"), std::invalid_argument);
    CHECK_THROWS_AS(QScalar::from_string("(q"), std::invalid_argument);
}

TEST_CASE("numeric evaluation") {
    CHECK(std::abs(evaluate_numeric(q_integer(2), Cplx(2.0, 0.0)) - Cplx(2.5, 0.0)) < 1e-12);
    CHECK(evaluate_numeric(q_integer(0), Cplx(0.3, 0.1)) == Cplx(0.0, 0.0));

    const RatFuncQ f(LaurentPolyQ(1), qpow(1) - LaurentPolyQ(1)); // 1/(q-1)
    CHECK_THROWS_AS(evaluate_numeric(f, Cplx(1.0, 0.0)), PoleError);
    try {
        evaluate_numeric(f, Cplx(1.0, 0.0));
    } catch (const PoleError& e) {
        CHECK(e.denominator == f.den().to_string());
    }
}

TEST_CASE("numeric consistency on random expressions") {
    std::mt19937 rng(20260819);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> expo(-5, 5);
    std::uniform_int_distribution<int> op(0, 3);
    const Cplx q0(0.37, 0.0);

    auto random_scalar = [&]() {
        LaurentPolyQ r, s;
        for (int t = 0; t < 3; ++t) {
            r.set_coeff(expo(rng), r.coeff(0) * 0 + Rat(coeff(rng)));
            s.set_coeff(expo(rng), Rat(coeff(rng)));
        }
        return QScalar(RatFuncQ(r), RatFuncQ(s));
    };

    int done = 0;
    while (done < 100) {
        const QScalar a = random_scalar();
        const QScalar b = random_scalar();
        const int o = op(rng);
        if (o == 3 && b.is_zero()) continue;
        QScalar exact;
        Cplx expect;
        const Cplx av = evaluate_numeric(a, q0), bv = evaluate_numeric(b, q0);
        switch (o) {
            case 0: exact = a + b; expect = av + bv; break;
            case 1: exact = a - b; expect = av - bv; break;
            case 2: exact = a * b; expect = av * bv; break;
            default: exact = a / b; expect = av / bv; break;
        }
        const Cplx got = evaluate_numeric(exact, q0);
        const double scale = std::max(1.0, std::abs(expect));
        CHECK(std::abs(got - expect) / scale < 1e-10);
        ++done;
    }
}
