// Lyndon words over the marked alphabet, standard bracketings, and conversion
// between tensor-word expansions and Lyndon-basis coordinates.
//
// Letters are bytes 2*(i-1) + jflag so that e1 < Je1 < e2 < Je2 < ... ; the
// same encoding serves both sectors.
#ifndef QKM_LYNDON_HPP
#define QKM_LYNDON_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qkm/gauss.hpp"

namespace qkm {

using Word = std::string;                 // sequence of letter bytes
using NcPoly = std::map<Word, Gauss>;     // tensor-algebra expansion

inline int letterIndex(char c) { return (static_cast<unsigned char>(c) >> 1) + 1; }  // 1-based
inline bool letterJ(char c) { return c & 1; }
inline char makeLetter(int idx, bool j) { return static_cast<char>(2 * (idx - 1) + (j ? 1 : 0)); }

using RootVector = std::vector<int>;

inline RootVector wordContent(const Word& w, int n) {
    RootVector v(n, 0);
    for (char c : w) ++v[letterIndex(c) - 1];
    return v;
}

inline int heightOf(const RootVector& v) {
    int h = 0;
    for (int k : v) h += k;
    return h;
}

inline bool isLyndon(const Word& w) {
    if (w.empty()) return false;
    for (size_t p = 1; p < w.size(); ++p)
        if (w.compare(w.substr(p)) >= 0) return false;
    return true;
}

// Standard factorization w = uv, v the lexicographically least proper suffix.
inline std::pair<Word, Word> standardFactorization(const Word& w) {
    if (w.size() < 2) throw std::logic_error("standardFactorization: word too short");
    size_t best = 1;
    for (size_t p = 2; p < w.size(); ++p)
        if (w.compare(p, Word::npos, w, best, Word::npos) < 0) best = p;
    return {w.substr(0, best), w.substr(best)};
}

inline void ncAdd(NcPoly& dst, const Word& w, const Gauss& c) {
    auto it = dst.find(w);
    if (it == dst.end()) {
        if (!c.isZero()) dst.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.isZero()) dst.erase(it);
}

inline void ncAccumulate(NcPoly& dst, const NcPoly& src, const Gauss& scale) {
    if (scale.isZero()) return;
    for (const auto& [w, c] : src) ncAdd(dst, w, c * scale);
}

// dst += scale * (P*Q - Q*P), concatenation product.
inline void ncBracketInto(NcPoly& dst, const NcPoly& p, const NcPoly& q, const Gauss& scale) {
    for (const auto& [u, cu] : p)
        for (const auto& [v, cv] : q) {
            Gauss c = cu * cv * scale;
            ncAdd(dst, u + v, c);
            ncAdd(dst, v + u, -c);
        }
}

// Expansion of standard bracketings into the tensor algebra, with a bounded
// memo; longer words are rebuilt transiently from their factors.
class ExpandCache {
public:
    explicit ExpandCache(size_t memoMaxLen = 7) : memoMaxLen_(memoMaxLen) {}

    NcPoly expand(const Word& w) const {
        if (w.size() == 1) return NcPoly{{w, Gauss(1)}};
        if (w.size() <= memoMaxLen_) {
            auto it = memo_.find(w);
            if (it != memo_.end()) return it->second;
        }
        auto [u, v] = standardFactorization(w);
        NcPoly pu = expand(u), pv = expand(v);
        NcPoly r;
        ncBracketInto(r, pu, pv, Gauss(1));
        if (w.size() <= memoMaxLen_) memo_.emplace(w, r);
        return r;
    }

private:
    size_t memoMaxLen_;
    mutable std::map<Word, NcPoly> memo_;
};

// Lyndon coordinates of a Lie element given by its tensor expansion.
// Relies on triangularity: expand(w) = w + lexicographically larger words.
inline std::map<Word, Gauss> lyndonCoordinates(NcPoly p, const ExpandCache& cache) {
    std::map<Word, Gauss> coords;
    while (!p.empty()) {
        auto it = p.begin();
        Word w = it->first;
        Gauss c = it->second;
        if (!isLyndon(w))
            throw std::logic_error("lyndonCoordinates: leading word is not Lyndon; "
                                   "input is not a Lie element");
        coords[w] = c;
        ncAccumulate(p, cache.expand(w), -c);
    }
    return coords;
}

// All Lyndon words over the 2n marked letters with the given content
// (content counts letters per index, markers free), in lexicographic order.
inline std::vector<Word> lyndonWordsOfContent(const RootVector& content) {
    int n = static_cast<int>(content.size());
    int len = heightOf(content);
    std::vector<Word> out;
    if (len == 0) return out;
    Word cur;
    RootVector left = content;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == len) {
            if (isLyndon(cur)) out.push_back(cur);
            return;
        }
        for (int i = 1; i <= n; ++i) {
            if (left[i - 1] == 0) continue;
            --left[i - 1];
            for (int j = 0; j < 2; ++j) {
                cur.push_back(makeLetter(i, j));
                self(self);
                cur.pop_back();
            }
            ++left[i - 1];
        }
    };
    rec(rec);
    return out;
}

// All words (not just Lyndon) of the given content, lexicographic; the
// coordinate frame for per-degree linear algebra.
inline std::vector<Word> allWordsOfContent(const RootVector& content) {
    int n = static_cast<int>(content.size());
    int len = heightOf(content);
    std::vector<Word> out;
    if (len == 0) return out;
    Word cur;
    RootVector left = content;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == len) {
            out.push_back(cur);
            return;
        }
        for (int i = 1; i <= n; ++i) {
            if (left[i - 1] == 0) continue;
            --left[i - 1];
            for (int j = 0; j < 2; ++j) {
                cur.push_back(makeLetter(i, j));
                self(self);
                cur.pop_back();
            }
            ++left[i - 1];
        }
    };
    rec(rec);
    return out;
}

}  // namespace qkm

#endif
