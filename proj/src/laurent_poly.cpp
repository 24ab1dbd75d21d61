#include "qaffine/laurent_poly.hpp"

#include <sstream>

namespace qaffine {

LaurentPolyQ LaurentPolyQ::monomial(const Rat& c, int exp) {
    LaurentPolyQ p;
    if (c != 0) p.coeffs_[exp] = c;
    return p;
}

bool LaurentPolyQ::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

bool LaurentPolyQ::is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

Rat LaurentPolyQ::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void LaurentPolyQ::set_coeff(int exp, const Rat& c) {
    if (c == 0)
        coeffs_.erase(exp);
    else
        coeffs_[exp] = c;
}

LaurentPolyQ& LaurentPolyQ::operator+=(const LaurentPolyQ& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPolyQ& LaurentPolyQ::operator-=(const LaurentPolyQ& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPolyQ LaurentPolyQ::operator+(const LaurentPolyQ& o) const {
    LaurentPolyQ r = *this;
    r += o;
    return r;
}

LaurentPolyQ LaurentPolyQ::operator-(const LaurentPolyQ& o) const {
    LaurentPolyQ r = *this;
    r -= o;
    return r;
}

LaurentPolyQ LaurentPolyQ::operator*(const LaurentPolyQ& o) const {
    LaurentPolyQ r;
    if (coeffs_.empty() || o.coeffs_.empty()) return r;
    for (const auto& [e1, c1] : coeffs_) {
        for (const auto& [e2, c2] : o.coeffs_) {
            auto it = r.coeffs_.find(e1 + e2);
            if (it == r.coeffs_.end()) {
                r.coeffs_.emplace(e1 + e2, c1 * c2);
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.coeffs_.erase(it);
            }
        }
    }
    return r;
}

LaurentPolyQ& LaurentPolyQ::operator*=(const LaurentPolyQ& o) {
    *this = *this * o;
    return *this;
}

LaurentPolyQ LaurentPolyQ::operator-() const {
    LaurentPolyQ r = *this;
    for (auto& [e, c] : r.coeffs_) c = -c;
    return r;
}

LaurentPolyQ& LaurentPolyQ::scale(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
    } else {
        for (auto& [e, v] : coeffs_) v *= c;
    }
    return *this;
}

LaurentPolyQ LaurentPolyQ::shifted(int exp) const {
    LaurentPolyQ r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + exp, c);
    return r;
}

LaurentPolyQ LaurentPolyQ::subst_q_power(int k) const {
    LaurentPolyQ r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e * k, c);
    return r;
}

std::string LaurentPolyQ::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const int e = it->first;
        Rat c = it->second;
        const bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        if (neg) c = -c;
        if (e == 0) {
            out << rat_to_string(c);
        } else {
            if (c != 1) out << rat_to_string(c) << "*";
            out << "q";
            if (e != 1) out << "^" << e;
        }
        first = false;
    }
    return out.str();
}

LaurentPolyQ operator*(const Rat& c, const LaurentPolyQ& p) {
    LaurentPolyQ r = p;
    r.scale(c);
    return r;
}

} // namespace qaffine
