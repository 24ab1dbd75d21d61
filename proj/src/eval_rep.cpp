#include "qaffine/eval_rep.hpp"

#include <array>
#include <sstream>

#include "qaffine/q_numbers.hpp"

namespace qaffine {

namespace {

// Appends a PASS/FAIL check asserting that `diff` is the zero matrix; on
// failure the first nonzero entry is recorded as the witness.
void add_zero_matrix_check(VerificationReport& rep, std::string desc, const Mat3& diff) {
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            if (!diff(r, c).is_zero()) {
                std::ostringstream note;
                note << "entry (" << r << "," << c << ")";
                rep.add(std::move(desc), CheckStatus::FAIL, diff(r, c).to_string(),
                        note.str());
                return;
            }
    rep.add(std::move(desc), CheckStatus::PASS);
}

Mat3 diagonal_inverse(const Mat3& t) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
        r(i, i) = t(i, i).reciprocal();
    return r;
}

// sum_{r=0}^{3} (-1)^r [3 choose r] x^r y x^{3-r}
Mat3 serre_sum(const Mat3& x, const Mat3& y) {
    std::array<Mat3, 4> pw;
    pw[0] = Mat3::identity();
    for (int k = 1; k <= 3; ++k)
        pw[k] = pw[k - 1] * x;
    Mat3 acc;
    for (int r = 0; r <= 3; ++r) {
        QScalar c(qbinom(3, r));
        if (r % 2 == 1)
            c = -c;
        acc = acc + (pw[r] * y * pw[3 - r]).scaled(ZRatFunc(c));
    }
    return acc;
}

} // namespace

EvalRep build_evaluation_rep() {
    EvalRep rep;
    // Ladder actions on the spin labels: the raising generator for the first
    // node sends v_m -> [1+m] v_{m-1}, its partner sends v_m -> [1-m] v_{m+1}.
    rep.e1(1, 0) = ZRatFunc(qint_s(2));
    rep.e1(2, 1) = ZRatFunc(1);
    rep.f1(0, 1) = ZRatFunc(1);
    rep.f1(1, 2) = ZRatFunc(qint_s(2));
    // The Cartan action is forced by the ladder actions through
    // [e, f] = (t - t^{-1})/(q - q^{-1}): t v_m = q^{-2m} v_m.
    rep.t1(0, 0) = ZRatFunc(QScalar::q_power(-2));
    rep.t1(1, 1) = ZRatFunc(1);
    rep.t1(2, 2) = ZRatFunc(QScalar::q_power(2));
    // Affine node: multiply by the spectral parameter and swap roles.
    rep.e0 = rep.f1.scaled(ZRatFunc::z_power(1));
    rep.f0 = rep.e1.scaled(ZRatFunc::z_power(-1));
    rep.t0 = diagonal_inverse(rep.t1); // level zero: t0 t1 = 1
    return rep;
}

VerificationReport check_evalrep_relations() {
    VerificationReport rep;
    rep.suite = "evalrep-relations";

    const EvalRep v = build_evaluation_rep();
    const std::array<Mat3, 2> e{v.e0, v.e1};
    const std::array<Mat3, 2> f{v.f0, v.f1};
    const std::array<Mat3, 2> t{v.t0, v.t1};
    const std::array<Mat3, 2> tinv{diagonal_inverse(v.t0), diagonal_inverse(v.t1)};
    const std::array<std::array<int, 2>, 2> cartan{{{2, -2}, {-2, 2}}};

    add_zero_matrix_check(rep, "t0 t1 = t1 t0", t[0] * t[1] - t[1] * t[0]);
    add_zero_matrix_check(rep, "t0 t1 = 1 (level zero)",
                          t[0] * t[1] - Mat3::identity());

    const QScalar qdiff = QScalar::q_power(1) - QScalar::q_power(-1);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const int a = cartan[i][j];
            {
                std::ostringstream desc;
                desc << "t" << i << " e" << j << " t" << i << "^-1 = q^" << a
                     << " e" << j;
                add_zero_matrix_check(
                    rep, desc.str(),
                    t[i] * e[j] - (e[j] * t[i]).scaled(ZRatFunc(QScalar::q_power(a))));
            }
            {
                std::ostringstream desc;
                desc << "t" << i << " f" << j << " t" << i << "^-1 = q^" << -a
                     << " f" << j;
                add_zero_matrix_check(
                    rep, desc.str(),
                    t[i] * f[j] -
                        (f[j] * t[i]).scaled(ZRatFunc(QScalar::q_power(-a))));
            }
            {
                std::ostringstream desc;
                desc << "[e" << i << ", f" << j << "] = "
                     << (i == j ? "(t - t^-1)/(q - q^-1)" : "0");
                Mat3 lhs = e[i] * f[j] - f[j] * e[i];
                if (i == j)
                    lhs = lhs - (t[i] - tinv[i]).scaled(ZRatFunc(qdiff.pow(-1)));
                add_zero_matrix_check(rep, desc.str(), lhs);
            }
        }

    add_zero_matrix_check(rep, "cubic Serre identity, raising generators (0,1)",
                          serre_sum(e[0], e[1]));
    add_zero_matrix_check(rep, "cubic Serre identity, raising generators (1,0)",
                          serre_sum(e[1], e[0]));
    add_zero_matrix_check(rep, "cubic Serre identity, lowering generators (0,1)",
                          serre_sum(f[0], f[1]));
    add_zero_matrix_check(rep, "cubic Serre identity, lowering generators (1,0)",
                          serre_sum(f[1], f[0]));

    return rep;
}

} // namespace qaffine
