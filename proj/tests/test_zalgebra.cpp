#include <doctest.h>

#include <cmath>

#include "qaffine/bipoly.hpp"
#include "qaffine/q_numbers.hpp"
#include "qaffine/zpoly.hpp"
#include "qaffine/zratfunc.hpp"

using namespace qaffine;

namespace {

ZPoly zlin(const QScalar& c1, const QScalar& c0) {
    ZPoly p;
    p.set_coeff(1, c1);
    p.set_coeff(0, c0);
    return p;
}

} // namespace

TEST_CASE("spectral polynomials: ring operations") {
    const ZPoly zm1 = zlin(QScalar(1), QScalar(-1));
    const ZPoly zp1 = zlin(QScalar(1), QScalar(1));
    const ZPoly prod = zm1 * zp1;
    CHECK(prod.coeff(2) == QScalar(1));
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(0) == QScalar(-1));
    CHECK(prod.term_count() == 2);

    CHECK((zm1 - zm1).is_zero());
    CHECK(zm1.shifted(3).lowest_exp() == 3);
    CHECK(zm1.scaled(QScalar::q_power(2)).coeff(1) == QScalar::q_power(2));
    CHECK((-zm1).coeff(0) == QScalar(1));

    // Substitution at an exact point.
    CHECK(zpoly_at(zm1, QScalar(1)).is_zero());
    CHECK(zpoly_at(prod, QScalar::q_power(1)) ==
          QScalar::q_power(2) - QScalar(1));

    // Laurent part.
    const ZPoly lau = ZPoly::monomial(QScalar(2), -2) + ZPoly(1);
    CHECK(lau.lowest_exp() == -2);
    CHECK(zpoly_at(lau, QScalar(2)) == QScalar(Rat(3, 2)));
}

TEST_CASE("spectral polynomials: rendering") {
    ZPoly p;
    p.set_coeff(2, qint_s(2));
    p.set_coeff(0, QScalar(-1));
    CHECK(p.to_string() == "(q + q^-1)*z^2 + (-1)");
    CHECK(ZPoly().to_string() == "0");
    CHECK(ZPoly::monomial(QScalar(1), 1).to_string() == "(1)*z");
    CHECK(ZPoly::monomial(QScalar(3), -2).to_string() == "(3)*z^-2");
}

TEST_CASE("spectral polynomials: division and gcd") {
    const QScalar q2 = QScalar::q_power(2);
    const ZPoly a = zlin(QScalar(1), -q2) * zlin(QScalar(1), q2); // z^2 - q^4
    ZPoly quot, rem;
    zpoly_divmod(a, zlin(QScalar(1), -q2), quot, rem);
    CHECK(rem.is_zero());
    CHECK(quot == zlin(QScalar(1), q2));

    zpoly_divmod(a + ZPoly(1), zlin(QScalar(1), -q2), quot, rem);
    CHECK(rem == ZPoly(1));

    const ZPoly zm1 = zlin(QScalar(1), QScalar(-1));
    const ZPoly g = zpoly_gcd(zm1 * zlin(QScalar(1), -q2),
                              zm1 * zlin(QScalar(1), -QScalar::q_power(-2)));
    CHECK(g == zm1);

    CHECK(zpoly_div_exact(a, zlin(QScalar(1), q2)) == zlin(QScalar(1), -q2));
    CHECK_THROWS_AS(zpoly_div_exact(a + ZPoly(1), zlin(QScalar(1), -q2)),
                    std::logic_error);
}

TEST_CASE("spectral rational functions: canonical form") {
    const QScalar q2 = QScalar::q_power(2);
    // (z^2 - q^4)/(z - q^2) reduces to a polynomial.
    const ZRatFunc red(zlin(QScalar(1), -q2) * zlin(QScalar(1), q2),
                       zlin(QScalar(1), -q2));
    CHECK(red.is_poly());
    CHECK(red.num() == zlin(QScalar(1), q2));

    // Canonical denominator: lowest exponent 0 with unit lowest coefficient.
    const ZRatFunc b(zlin(QScalar(1), QScalar(-1)),
                     zlin(q2, -QScalar::q_power(-2)));
    CHECK(b.den().lowest_exp() == 0);
    CHECK(b.den().coeff(0).is_one());
    CHECK(!b.is_poly());

    // Laurent units live in the numerator.
    const ZRatFunc shifty(ZPoly(1), ZPoly::monomial(QScalar(1), 2));
    CHECK(shifty.is_poly());
    CHECK(shifty.num() == ZPoly::monomial(QScalar(1), -2));

    // Field axioms on a nontrivial element.
    CHECK((b - b).is_zero());
    CHECK((b * b.reciprocal()).is_one());
    CHECK((b / b).is_one());
    CHECK((ZRatFunc(1) / b) * b == ZRatFunc(1));
    CHECK(b + ZRatFunc() == b);

    // Stability: reducing an already-reduced value changes nothing.
    const ZRatFunc again(b.num(), b.den());
    CHECK(again == b);
}

TEST_CASE("spectral rational functions: numeric evaluation") {
    const QScalar q2 = QScalar::q_power(2);
    const ZRatFunc f(zlin(QScalar(1), QScalar(-1)), zlin(q2, -QScalar::q_power(-2)));
    const Cplx q0(0.3, 0.0), z0(1.7, 0.0);
    const Cplx expect = (z0 - 1.0) / (z0 * 0.09 - 1.0 / 0.09);
    CHECK(std::abs(evaluate_numeric(f, q0, z0) - expect) < 1e-12);

    // A pole is reported, not silently divided through.
    const ZRatFunc pole(ZPoly(1), zlin(QScalar(1), QScalar(-1)));
    CHECK_THROWS_AS(evaluate_numeric(pole, q0, Cplx(1.0, 0.0)), PoleError);
}

TEST_CASE("two-variable polynomials: embeddings and products") {
    ZPoly p;
    p.set_coeff(0, QScalar(1));
    p.set_coeff(1, QScalar::q_power(1));
    p.set_coeff(3, QScalar(-2));
    ZPoly r;
    r.set_coeff(1, qint_s(2));
    r.set_coeff(2, QScalar(1));

    const Cplx q0(0.37, 0.0), z0(1.3, 0.0), w0(0.6, 0.0);
    const auto close = [](Cplx x, Cplx y) { return std::abs(x - y) < 1e-12; };

    CHECK(close(evaluate_numeric(BiPoly::in_z(p), q0, z0, w0),
                evaluate_numeric(p, q0, z0)));
    CHECK(close(evaluate_numeric(BiPoly::in_w(p), q0, z0, w0),
                evaluate_numeric(p, q0, w0)));
    CHECK(close(evaluate_numeric(BiPoly::in_zw(p), q0, z0, w0),
                evaluate_numeric(p, q0, z0 * w0)));

    const BiPoly prod = BiPoly::in_z(p) * BiPoly::in_w(r);
    CHECK(close(evaluate_numeric(prod, q0, z0, w0),
                evaluate_numeric(p, q0, z0) * evaluate_numeric(r, q0, w0)));

    // Commutative ring sanity.
    CHECK(BiPoly::in_z(p) * BiPoly::in_w(r) == BiPoly::in_w(r) * BiPoly::in_z(p));
    CHECK((prod - prod).is_zero());

    // in_zw distributes over multiplication.
    CHECK(BiPoly::in_zw(p * r) == BiPoly::in_zw(p) * BiPoly::in_zw(r));
}
