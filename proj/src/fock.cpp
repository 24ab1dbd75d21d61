#include "qaffine/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace qaffine {

namespace {

std::vector<int> expanded_bosons(const FockState& s) {
    std::vector<int> out;
    for (const auto& [n, k] : s.bosons)
        out.insert(out.end(), static_cast<std::size_t>(k), n);
    return out;
}

} // namespace

int degree2(const FockState& s) {
    int d = s.p * s.p;
    for (const auto& [n, k] : s.bosons)
        d += 2 * n * k;
    for (int r2 : s.fermions)
        d += r2;
    return d;
}

int parity_sign(const FockState& s) { return s.deg2 % 2 == 0 ? 1 : -1; }

bool operator==(const FockState& a, const FockState& b) {
    return a.p == b.p && a.bosons == b.bosons && a.fermions == b.fermions;
}

bool operator<(const FockState& a, const FockState& b) {
    if (a.deg2 != b.deg2)
        return a.deg2 < b.deg2;
    if (a.p != b.p)
        return a.p < b.p;
    const std::vector<int> ea = expanded_bosons(a), eb = expanded_bosons(b);
    if (ea != eb)
        return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
    return std::lexicographical_compare(a.fermions.begin(), a.fermions.end(),
                                        b.fermions.begin(), b.fermions.end());
}

std::string encode(const FockState& s) {
    std::string out = "p=" + std::to_string(s.p) + "; a:[";
    bool first = true;
    for (const auto& [n, k] : s.bosons)
        for (int i = 0; i < k; ++i) {
            if (!first)
                out += ',';
            out += std::to_string(n);
            first = false;
        }
    out += "]; b:[";
    first = true;
    for (int r2 : s.fermions) {
        if (!first)
            out += ',';
        out += std::to_string(r2) + "/2";
        first = false;
    }
    out += ']';
    return out;
}

namespace {

[[noreturn]] void bad_state(const std::string& text, const std::string& why) {
    throw std::invalid_argument("decode_state: " + why + " in \"" + text + "\"");
}

// Parses a comma-separated integer list between '[' and ']', advancing pos
// past the closing bracket.
std::vector<long> parse_list(const std::string& text, std::size_t& pos,
                             bool half_suffix) {
    if (pos >= text.size() || text[pos] != '[')
        bad_state(text, "expected '['");
    ++pos;
    std::vector<long> out;
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
        return out;
    }
    while (true) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(text.substr(pos), &used);
        } catch (const std::exception&) {
            bad_state(text, "expected an integer");
        }
        pos += used;
        if (half_suffix) {
            if (text.compare(pos, 2, "/2") != 0)
                bad_state(text, "expected '/2'");
            pos += 2;
        }
        out.push_back(v);
        if (pos >= text.size())
            bad_state(text, "unterminated list");
        if (text[pos] == ',') {
            ++pos;
            continue;
        }
        if (text[pos] == ']') {
            ++pos;
            return out;
        }
        bad_state(text, "expected ',' or ']'");
    }
}

} // namespace

FockState decode_state(const std::string& text) {
    std::size_t pos = 0;
    if (text.compare(pos, 2, "p=") != 0)
        bad_state(text, "expected 'p='");
    pos += 2;
    FockState s;
    {
        std::size_t used = 0;
        try {
            s.p = std::stoi(text.substr(pos), &used);
        } catch (const std::exception&) {
            bad_state(text, "expected a momentum integer");
        }
        pos += used;
    }
    if (text.compare(pos, 4, "; a:") != 0)
        bad_state(text, "expected '; a:'");
    pos += 4;
    const std::vector<long> modes = parse_list(text, pos, false);
    for (long n : modes) {
        if (n < 1)
            bad_state(text, "boson mode below 1");
        if (!s.bosons.empty() && s.bosons.back().first == n)
            ++s.bosons.back().second;
        else if (!s.bosons.empty() && s.bosons.back().first > n)
            bad_state(text, "boson modes out of order");
        else
            s.bosons.emplace_back(static_cast<int>(n), 1);
    }
    if (text.compare(pos, 4, "; b:") != 0)
        bad_state(text, "expected '; b:'");
    pos += 4;
    const std::vector<long> halves = parse_list(text, pos, true);
    for (long r2 : halves) {
        if (r2 < 1 || r2 % 2 == 0)
            bad_state(text, "fermion mode not a positive half-odd integer");
        if (!s.fermions.empty() && s.fermions.back() >= r2)
            bad_state(text, "fermion modes not strictly ascending");
        s.fermions.push_back(static_cast<int>(r2));
    }
    if (pos != text.size())
        bad_state(text, "trailing characters");
    s.deg2 = degree2(s);
    return s;
}

FockState with_boson_added(const FockState& s, int n) {
    FockState out = s;
    auto it = std::lower_bound(out.bosons.begin(), out.bosons.end(), n,
                               [](const auto& e, int v) { return e.first < v; });
    if (it != out.bosons.end() && it->first == n)
        ++it->second;
    else
        out.bosons.insert(it, {n, 1});
    out.deg2 += 2 * n;
    return out;
}

int boson_multiplicity(const FockState& s, int n) {
    for (const auto& [m, k] : s.bosons)
        if (m == n)
            return k;
    return 0;
}

FockState with_boson_removed(const FockState& s, int n) {
    FockState out = s;
    auto it = std::lower_bound(out.bosons.begin(), out.bosons.end(), n,
                               [](const auto& e, int v) { return e.first < v; });
    if (it == out.bosons.end() || it->first != n)
        throw std::logic_error("with_boson_removed: mode absent");
    if (--it->second == 0)
        out.bosons.erase(it);
    out.deg2 -= 2 * n;
    return out;
}

FockState with_momentum_shifted(const FockState& s, int delta) {
    FockState out = s;
    out.p += delta;
    out.deg2 += out.p * out.p - s.p * s.p;
    return out;
}

FermionEdit with_fermion_added(const FockState& s, int two_r) {
    auto it = std::lower_bound(s.fermions.begin(), s.fermions.end(), two_r);
    if (it != s.fermions.end() && *it == two_r)
        return {};
    FermionEdit e;
    e.ok = true;
    e.sign = (it - s.fermions.begin()) % 2 == 0 ? 1 : -1;
    e.state = s;
    e.state.fermions.insert(e.state.fermions.begin() + (it - s.fermions.begin()),
                            two_r);
    e.state.deg2 += two_r;
    return e;
}

FermionEdit with_fermion_removed(const FockState& s, int two_r) {
    auto it = std::lower_bound(s.fermions.begin(), s.fermions.end(), two_r);
    if (it == s.fermions.end() || *it != two_r)
        return {};
    FermionEdit e;
    e.ok = true;
    e.sign = (it - s.fermions.begin()) % 2 == 0 ? 1 : -1;
    e.state = s;
    e.state.fermions.erase(e.state.fermions.begin() + (it - s.fermions.begin()));
    e.state.deg2 -= two_r;
    return e;
}

namespace {

void enumerate_bosons(int min_mode, int budget2, FockState& cur,
                      std::vector<FockState>& out) {
    cur.deg2 = degree2(cur);
    out.push_back(cur);
    for (int n = min_mode; 2 * n <= budget2; ++n) {
        if (!cur.bosons.empty() && cur.bosons.back().first == n)
            ++cur.bosons.back().second;
        else
            cur.bosons.emplace_back(n, 1);
        enumerate_bosons(n, budget2 - 2 * n, cur, out);
        if (cur.bosons.back().second == 1)
            cur.bosons.pop_back();
        else
            --cur.bosons.back().second;
    }
}

void enumerate_fermions(int min_r2, int budget2, FockState& cur,
                        std::vector<FockState>& out) {
    enumerate_bosons(1, budget2, cur, out);
    for (int r2 = min_r2; r2 <= budget2; r2 += 2) {
        cur.fermions.push_back(r2);
        enumerate_fermions(r2 + 2, budget2 - r2, cur, out);
        cur.fermions.pop_back();
    }
}

} // namespace

std::vector<FockState> enumerate_basis(const Truncation& t) {
    if (t.deg2_max < 0 || t.p_min > t.p_max)
        throw std::invalid_argument("enumerate_basis: empty truncation window");
    std::vector<FockState> out;
    for (int p = t.p_min; p <= t.p_max; ++p) {
        if (p * p > t.deg2_max)
            continue;
        FockState cur;
        cur.p = p;
        enumerate_fermions(1, t.deg2_max - p * p, cur, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qaffine
