// Elements of the quaternion Kac-Moody algebra in triangular normal form
// N- (+) K (+) N+. The nilpotent parts are free-Lie elements stored as their
// tensor-algebra expansions; the Cartan part is a coefficient map over the
// E-row basis of H and its J-copy.
#ifndef QKM_ELEMENT_HPP
#define QKM_ELEMENT_HPP

#include <map>
#include <optional>
#include <utility>

#include "qkm/lyndon.hpp"

namespace qkm {

enum class Sector { Minus = -1, Cartan = 0, Plus = 1 };

// (marker 0/1, basis row k 0-based)
using CartanKey = std::pair<int, int>;
using CartanMap = std::map<CartanKey, Gauss>;

struct LieElement {
    NcPoly plus;
    NcPoly minus;
    CartanMap cartan;

    bool isZero() const { return plus.empty() && minus.empty() && cartan.empty(); }

    LieElement& operator+=(const LieElement& o) {
        for (const auto& [w, c] : o.plus) ncAdd(plus, w, c);
        for (const auto& [w, c] : o.minus) ncAdd(minus, w, c);
        for (const auto& [k, c] : o.cartan) addCartan(k, c);
        return *this;
    }
    LieElement& operator-=(const LieElement& o) {
        *this += -o;
        return *this;
    }
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator-(const LieElement& a) {
        LieElement r;
        for (const auto& [w, c] : a.plus) r.plus.emplace(w, -c);
        for (const auto& [w, c] : a.minus) r.minus.emplace(w, -c);
        for (const auto& [k, c] : a.cartan) r.cartan.emplace(k, -c);
        return r;
    }
    friend LieElement operator*(const Gauss& s, const LieElement& a) {
        LieElement r;
        if (s.isZero()) return r;
        for (const auto& [w, c] : a.plus) r.plus.emplace(w, s * c);
        for (const auto& [w, c] : a.minus) r.minus.emplace(w, s * c);
        for (const auto& [k, c] : a.cartan) r.cartan.emplace(k, s * c);
        return r;
    }
    friend bool operator==(const LieElement& a, const LieElement& b) {
        return a.plus == b.plus && a.minus == b.minus && a.cartan == b.cartan;
    }
    friend bool operator!=(const LieElement& a, const LieElement& b) { return !(a == b); }

    void addCartan(const CartanKey& k, const Gauss& c) {
        auto it = cartan.find(k);
        if (it == cartan.end()) {
            if (!c.isZero()) cartan.emplace(k, c);
            return;
        }
        it->second += c;
        if (it->second.isZero()) cartan.erase(it);
    }
};

// Degree in the root lattice; nullopt when the terms disagree (Mixed).
inline std::optional<RootVector> degreeOf(const LieElement& x, int n) {
    std::optional<RootVector> deg;
    auto meet = [&](const RootVector& d) -> bool {
        if (!deg) { deg = d; return true; }
        return *deg == d;
    };
    for (const auto& [w, c] : x.plus) {
        (void)c;
        if (!meet(wordContent(w, n))) return std::nullopt;
    }
    for (const auto& [w, c] : x.minus) {
        (void)c;
        RootVector d = wordContent(w, n);
        for (int& v : d) v = -v;
        if (!meet(d)) return std::nullopt;
    }
    if (!x.cartan.empty() && !meet(RootVector(n, 0))) return std::nullopt;
    if (!deg && !x.isZero()) return std::nullopt;
    if (!deg) deg = RootVector(n, 0);
    return deg;
}

// Graded-lex order on signed degrees: by height, then lexicographically.
inline bool degreeLess(const RootVector& a, const RootVector& b) {
    int ha = heightOf(a), hb = heightOf(b);
    if (ha != hb) return ha < hb;
    return a < b;
}

}  // namespace qkm

#endif
