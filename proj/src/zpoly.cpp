#include "qaffine/zpoly.hpp"

#include <sstream>

namespace qaffine {

bool ZPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
           coeffs_.begin()->second.is_one();
}

bool ZPoly::is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

void ZPoly::add_to_coeff(int exp, const QScalar& c) {
    if (c.is_zero())
        return;
    auto it = coeffs_.find(exp);
    if (it == coeffs_.end()) {
        coeffs_.emplace(exp, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        coeffs_.erase(it);
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    for (const auto& [exp, c] : o.coeffs_)
        add_to_coeff(exp, c);
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    for (const auto& [exp, c] : o.coeffs_)
        add_to_coeff(exp, -c);
    return *this;
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    ZPoly r;
    for (const auto& [ea, ca] : coeffs_)
        for (const auto& [eb, cb] : o.coeffs_)
            r.add_to_coeff(ea + eb, ca * cb);
    return r;
}

ZPoly ZPoly::operator-() const {
    ZPoly r;
    for (const auto& [exp, c] : coeffs_)
        r.coeffs_.emplace(exp, -c);
    return r;
}

ZPoly ZPoly::scaled(const QScalar& c) const {
    if (c.is_zero())
        return ZPoly();
    ZPoly r;
    for (const auto& [exp, cc] : coeffs_)
        r.set_coeff(exp, cc * c);
    return r;
}

ZPoly ZPoly::shifted(int exp) const {
    ZPoly r;
    for (const auto& [e, c] : coeffs_)
        r.coeffs_.emplace(e + exp, c);
    return r;
}

std::string ZPoly::to_string() const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    // Descending exponents, to match how the coefficient field is printed.
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!first)
            out << " + ";
        first = false;
        out << "(" << it->second.to_string() << ")";
        if (it->first == 1)
            out << "*z";
        else if (it->first != 0)
            out << "*z^" << it->first;
    }
    return out.str();
}

ZPoly operator*(const QScalar& c, const ZPoly& p) { return p.scaled(c); }

QScalar zpoly_at(const ZPoly& p, const QScalar& z0) {
    QScalar sum;
    for (const auto& [exp, c] : p.terms())
        sum += c * z0.pow(exp);
    return sum;
}

Cplx evaluate_numeric(const ZPoly& p, Cplx q0, Cplx z0) {
    Cplx sum(0.0, 0.0);
    for (const auto& [exp, c] : p.terms())
        sum += evaluate_numeric(c, q0) * pow_int(z0, exp);
    return sum;
}

} // namespace qaffine
