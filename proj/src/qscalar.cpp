#include "qaffine/qscalar.hpp"

#include <cctype>
#include <stdexcept>

namespace qaffine {

QScalar QScalar::operator*(const QScalar& o) const {
    if (s_.is_zero() && o.s_.is_zero()) return QScalar(r_ * o.r_, RatFuncQ());
    const RatFuncQ two(Rat(2));
    return QScalar(r_ * o.r_ + two * (s_ * o.s_), r_ * o.s_ + s_ * o.r_);
}

QScalar QScalar::reciprocal() const {
    if (s_.is_zero()) return QScalar(r_.reciprocal(), RatFuncQ());
    const RatFuncQ two(Rat(2));
    const RatFuncQ norm = r_ * r_ - two * (s_ * s_);
    // norm != 0: sqrt2 is not a rational function of q.
    return QScalar(r_ / norm, -(s_ / norm));
}

QScalar QScalar::pow(int k) const {
    QScalar base = k < 0 ? reciprocal() : *this;
    unsigned n = k < 0 ? static_cast<unsigned>(-(long)k) : static_cast<unsigned>(k);
    QScalar r(Rat(1));
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

std::string QScalar::to_string() const {
    if (s_.is_zero()) return r_.to_string();
    const std::string tail = "sqrt2*(" + s_.to_string() + ")";
    if (r_.is_zero()) return tail;
    return r_.to_string() + " + " + tail;
}

QScalar operator*(const Rat& c, const QScalar& x) { return QScalar(Rat(c)) * x; }

namespace {

// Recursive-descent parser for the canonical scalar grammar.
struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && s[i] == ' ') ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool peek(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }
    bool lookahead_word(const char* w) {
        skip_ws();
        size_t j = i;
        for (const char* p = w; *p; ++p, ++j)
            if (j >= s.size() || s[j] != *p) return false;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("QScalar::from_string: " + why + " at offset " +
                                    std::to_string(i) + " in \"" + s + "\"");
    }

    Rat parse_number() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected number");
        std::string digits = s.substr(start, i - start);
        if (i < s.size() && s[i] == '/') {
            size_t save = i;
            ++i;
            size_t dstart = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (dstart == i) {
                i = save; // the '/' belongs to a quotient of polynomials
            } else {
                digits += "/" + s.substr(dstart, i - dstart);
            }
        }
        Rat r(digits);
        r.canonicalize();
        return r;
    }

    int parse_exponent() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected exponent");
        int e = std::stoi(s.substr(start, i - start));
        return neg ? -e : e;
    }

    // term := coeff ["*" qpart] | qpart, with an optional sign handled by caller
    LaurentPolyQ parse_term() {
        skip_ws();
        Rat coeff(1);
        bool have_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = parse_number();
            have_coeff = true;
        }
        skip_ws();
        bool have_q = false;
        if (have_coeff) {
            size_t save = i;
            if (eat('*')) {
                if (peek('q')) {
                    have_q = true;
                } else {
                    i = save; // '*' not ours
                }
            }
            if (!have_q && peek('q')) have_q = true;
        } else if (peek('q')) {
            have_q = true;
        }
        if (!have_q) {
            if (!have_coeff) fail("expected term");
            return LaurentPolyQ(coeff);
        }
        expect('q');
        int e = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            e = parse_exponent();
        }
        return LaurentPolyQ::monomial(coeff, e);
    }

    LaurentPolyQ parse_poly() {
        LaurentPolyQ p;
        bool neg = false;
        skip_ws();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        LaurentPolyQ t = parse_term();
        p += neg ? -t : t;
        for (;;) {
            skip_ws();
            if (i >= s.size()) break;
            if (s[i] == '+' || s[i] == '-') {
                // stop if this is the " + sqrt2*(" junction
                if (lookahead_word("+ sqrt2*(")) break;
                neg = s[i] == '-';
                ++i;
                t = parse_term();
                p += neg ? -t : t;
            } else {
                break;
            }
        }
        return p;
    }

    RatFuncQ parse_ratfunc() {
        skip_ws();
        if (peek('(')) {
            expect('(');
            LaurentPolyQ num = parse_poly();
            expect(')');
            expect('/');
            expect('(');
            LaurentPolyQ den = parse_poly();
            expect(')');
            return RatFuncQ(num, den);
        }
        return RatFuncQ(parse_poly());
    }

    QScalar parse_qscalar() {
        skip_ws();
        if (lookahead_word("sqrt2*(")) {
            i += 7;
            RatFuncQ sp = parse_ratfunc();
            expect(')');
            return QScalar(RatFuncQ(), sp);
        }
        RatFuncQ rp = parse_ratfunc();
        skip_ws();
        if (lookahead_word("+ sqrt2*(")) {
            i += 9;
            RatFuncQ sp = parse_ratfunc();
            expect(')');
            return QScalar(rp, sp);
        }
        return QScalar(rp);
    }
};

} // namespace

QScalar QScalar::from_string(const std::string& text) {
    Parser p(text);
    QScalar v = p.parse_qscalar();
    p.skip_ws();
    if (p.i != text.size()) p.fail("trailing input");
    return v;
}

} // namespace qaffine
