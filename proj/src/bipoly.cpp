#include "qaffine/bipoly.hpp"

#include <sstream>

namespace qaffine {

BiPoly BiPoly::in_z(const ZPoly& p) {
    BiPoly r;
    for (const auto& [exp, c] : p.terms())
        r.coeffs_.emplace(Key{exp, 0}, c);
    return r;
}

BiPoly BiPoly::in_w(const ZPoly& p) {
    BiPoly r;
    for (const auto& [exp, c] : p.terms())
        r.coeffs_.emplace(Key{0, exp}, c);
    return r;
}

BiPoly BiPoly::in_zw(const ZPoly& p) {
    BiPoly r;
    for (const auto& [exp, c] : p.terms())
        r.coeffs_.emplace(Key{exp, exp}, c);
    return r;
}

void BiPoly::add_to_coeff(int ze, int we, const QScalar& c) {
    if (c.is_zero())
        return;
    const Key k{ze, we};
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
        coeffs_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        coeffs_.erase(it);
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.coeffs_)
        add_to_coeff(k.first, k.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.coeffs_)
        add_to_coeff(k.first, k.second, -c);
    return *this;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [ka, ca] : coeffs_)
        for (const auto& [kb, cb] : o.coeffs_)
            r.add_to_coeff(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

std::string BiPoly::to_string() const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        if (!first)
            out << " + ";
        first = false;
        out << "(" << c.to_string() << ")";
        if (k.first != 0)
            out << "*z^" << k.first;
        if (k.second != 0)
            out << "*w^" << k.second;
    }
    return out.str();
}

Cplx evaluate_numeric(const BiPoly& p, Cplx q0, Cplx z0, Cplx w0) {
    Cplx sum(0.0, 0.0);
    for (const auto& [k, c] : p.terms())
        sum += evaluate_numeric(c, q0) * pow_int(z0, k.first) * pow_int(w0, k.second);
    return sum;
}

} // namespace qaffine
