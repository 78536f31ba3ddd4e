// The bracket engine for g~(A): the generator relation table extended by
// Jacobi rewriting, C-bilinear in the i direction, with J handled as a marker.
// Same-sector brackets are free-Lie (computed in the tensor expansion);
// cross-sector brackets reduce by normal ordering in the enveloping algebra.
#ifndef QKM_ENGINE_HPP
#define QKM_ENGINE_HPP

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "qkm/cartan.hpp"
#include "qkm/element.hpp"

namespace qkm {

struct UnsupportedMarkerPair : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SameIndex : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadSign : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct HeightExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Engine {
public:
    explicit Engine(Realization re) : re_(std::move(re)) {}

    const Realization& realization() const { return re_; }
    int n() const { return re_.n; }
    int dim() const { return re_.dim; }
    const ExpandCache& cache() const { return cache_; }

    Rational pairAH(int l, int k0) const { return Rational(re_.e[k0][re_.pos[l - 1]]); }

    // --- generator elements -------------------------------------------------
    LieElement genE(int i, bool jmark = false) const {
        LieElement x;
        x.plus.emplace(Word(1, makeLetter(i, jmark)), Gauss(1));
        return x;
    }
    LieElement genF(int i, bool jmark = false) const {
        LieElement x;
        x.minus.emplace(Word(1, makeLetter(i, jmark)), Gauss(1));
        return x;
    }
    LieElement genH(int k, bool jmark = false) const {  // k 1-based over E rows
        LieElement x;
        x.cartan.emplace(CartanKey{jmark ? 1 : 0, k - 1}, Gauss(1));
        return x;
    }
    LieElement coroot(int i, bool jmark = false) const {
        return genH(re_.corootRow(i) + 1, jmark);
    }

    std::vector<LieElement> allGenerators() const {
        std::vector<LieElement> gens;
        for (int k = 1; k <= re_.dim; ++k)
            for (bool j : {false, true}) gens.push_back(genH(k, j));
        for (int i = 1; i <= re_.n; ++i)
            for (bool j : {false, true}) {
                gens.push_back(genE(i, j));
                gens.push_back(genF(i, j));
            }
        return gens;
    }

    // --- bracket ------------------------------------------------------------
    LieElement bracket(const LieElement& x, const LieElement& y) const {
        LieElement r;
        ncBracketInto(r.plus, x.plus, y.plus, Gauss(1));
        ncBracketInto(r.minus, x.minus, y.minus, Gauss(1));
        for (const auto& [key, c] : x.cartan) {
            r += cartanAct(key, c, y.plus, Sector::Plus);
            r += cartanAct(key, c, y.minus, Sector::Minus);
        }
        for (const auto& [key, c] : y.cartan) {
            r -= cartanAct(key, c, x.plus, Sector::Plus);
            r -= cartanAct(key, c, x.minus, Sector::Minus);
        }
        if (!x.plus.empty() && !y.minus.empty()) r += crossPM(x.plus, y.minus);
        if (!y.plus.empty() && !x.minus.empty()) r -= crossPM(y.plus, x.minus);
        return r;
    }

    LieElement adPower(const LieElement& x, int m, LieElement y) const {
        if (m < 0) throw std::invalid_argument("adPower: negative exponent");
        for (int k = 0; k < m; ++k) y = bracket(x, y);
        return y;
    }

    // Serre elements (ad eps_j)^(1-A_ji)(eps_i), markers chosen per slot.
    LieElement serrePlus(int i, int j, bool jmarkOuter, bool jmarkInner) const {
        if (i == j) throw SameIndex("serrePlus: requires i != j");
        int power = 1 - static_cast<int>(re_.a[j - 1][i - 1]);
        return adPower(genE(j, jmarkOuter), power, genE(i, jmarkInner));
    }
    LieElement serreMinus(int i, int j, bool jmarkOuter, bool jmarkInner) const {
        if (i == j) throw SameIndex("serreMinus: requires i != j");
        int power = 1 - static_cast<int>(re_.a[j - 1][i - 1]);
        return adPower(genF(j, jmarkOuter), power, genF(i, jmarkInner));
    }

    // Hall (Lyndon) basis of the degree-alpha component of the free algebra.
    std::vector<Word> gradedBasisFree(const RootVector& alpha, Sector sector) const {
        if (sector == Sector::Cartan) throw BadSign("gradedBasisFree: sector must be +/-");
        RootVector content(alpha.size());
        bool sawNonzero = false;
        for (size_t t = 0; t < alpha.size(); ++t) {
            int v = alpha[t];
            if (sector == Sector::Minus) v = -v;
            if (v < 0) throw BadSign("gradedBasisFree: degree has wrong sign for sector");
            if (v > 0) sawNonzero = true;
            content[t] = v;
        }
        if (!sawNonzero) throw BadSign("gradedBasisFree: degree must be nonzero");
        return lyndonWordsOfContent(content);
    }

    LieElement basisElement(Sector sector, const Word& lyndonWord) const {
        LieElement x;
        NcPoly p = cache_.expand(lyndonWord);
        if (sector == Sector::Plus) x.plus = std::move(p);
        else x.minus = std::move(p);
        return x;
    }

    std::map<Word, Gauss> lyndonCoords(const NcPoly& p) const {
        return lyndonCoordinates(p, cache_);
    }

    // --- printing -----------------------------------------------------------
    std::string letterAtom(Sector sector, char letter) const {
        std::string s = letterJ(letter) ? "J" : "";
        s += (sector == Sector::Plus) ? "e" : "f";
        s += std::to_string(letterIndex(letter));
        return s;
    }
    std::string cartanAtom(const CartanKey& key) const {
        std::string s = key.first ? "J" : "";
        int k0 = key.second;
        if (k0 < re_.n) {
            s += "hv" + std::to_string(re_.perm[k0] + 1);
        } else {
            s += "h" + std::to_string(k0 + 1);
        }
        return s;
    }
    std::string wordAtom(Sector sector, const Word& w) const {
        if (w.size() == 1) return letterAtom(sector, w[0]);
        auto [u, v] = standardFactorization(w);
        return "[" + wordAtom(sector, u) + "," + wordAtom(sector, v) + "]";
    }

    std::string toString(const LieElement& x) const {
        struct Term {
            RootVector deg;
            int kindRank;  // 0 minus, 1 cartan, 2 plus
            Word key;      // Hall word (or marker/index for Cartan terms)
            std::string atom;
            Gauss coeff;
        };
        std::vector<Term> terms;
        auto pushWords = [&](const NcPoly& part, Sector sec) {
            if (part.empty()) return;
            for (const auto& [w, c] : lyndonCoords(part)) {
                RootVector d = wordContent(w, re_.n);
                if (sec == Sector::Minus)
                    for (int& v : d) v = -v;
                terms.push_back({d, sec == Sector::Minus ? 0 : 2, w, wordAtom(sec, w), c});
            }
        };
        pushWords(x.minus, Sector::Minus);
        for (const auto& [key, c] : x.cartan) {
            Word k{static_cast<char>(key.second), static_cast<char>(key.first)};
            terms.push_back({RootVector(re_.n, 0), 1, k, cartanAtom(key), c});
        }
        pushWords(x.plus, Sector::Plus);
        std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
            if (a.deg != b.deg) return degreeLess(a.deg, b.deg);
            if (a.kindRank != b.kindRank) return a.kindRank < b.kindRank;
            return a.key < b.key;
        });
        if (terms.empty()) return "0";
        std::string out;
        bool first = true;
        auto emit = [&](const Rational& coeff, bool imag, const std::string& atom) {
            if (coeff.isZero()) return;
            Rational a = coeff;
            bool neg = a.sign() < 0;
            if (neg) a = -a;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            std::string prefix;
            if (!(a == Rational(1))) prefix = a.toString() + "*";
            else if (neg) prefix = "1*";
            out += prefix;
            if (imag) out += "i*";
            out += atom;
        };
        for (const auto& t : terms) {
            emit(t.coeff.re(), false, t.atom);
            emit(t.coeff.im(), true, t.atom);
        }
        return out;
    }

private:
    Realization re_;
    ExpandCache cache_;

    // sign factor and marker flip for pushing a Cartan symbol past one letter
    struct PushStep {
        int sign;    // multiplies <alpha_idx, h_k>
        bool flip;   // letter marker flips (J-cartan case)
    };
    static PushStep pushStep(Sector tailSector, int cmark, bool letterJmark) {
        int base = tailSector == Sector::Plus ? 1 : -1;
        if (cmark == 0) return {base, false};
        return {letterJmark ? -base : base, true};
    }

    // dst-part for a sector
    static NcPoly& partOf(LieElement& x, Sector s) {
        return s == Sector::Plus ? x.plus : x.minus;
    }

    // ad of a Cartan basis element on a pure-sector ncpoly (diagonal for the
    // unmarked copy, marker-flipping derivation for the J copy).
    LieElement cartanAct(const CartanKey& key, const Gauss& coeff, const NcPoly& part,
                         Sector sector) const {
        LieElement r;
        if (part.empty() || coeff.isZero()) return r;
        int k0 = key.second;
        NcPoly& dst = partOf(r, sector);
        if (key.first == 0) {
            int sgn = sector == Sector::Plus ? 1 : -1;
            for (const auto& [w, c] : part) {
                Rational eig(0);
                for (char ch : w) eig += pairAH(letterIndex(ch), k0);
                if (sgn < 0) eig = -eig;
                ncAdd(dst, w, coeff * c * Gauss(eig));
            }
        } else {
            for (const auto& [w, c] : part) {
                for (size_t p = 0; p < w.size(); ++p) {
                    PushStep st = pushStep(sector, 1, letterJ(w[p]));
                    Rational f = pairAH(letterIndex(w[p]), k0);
                    if (st.sign < 0) f = -f;
                    if (f.isZero()) continue;
                    Word nw = w;
                    nw[p] = makeLetter(letterIndex(w[p]), !letterJ(w[p]));
                    ncAdd(dst, nw, coeff * c * Gauss(f));
                }
            }
        }
        return r;
    }

    // cross table for [marked e_i, marked f_i]: sign and cartan marker
    static std::pair<int, int> crossTable(bool eJ, bool fJ) {
        if (!eJ && !fJ) return {1, 0};
        if (eJ && fJ) return {-1, 0};
        return {1, 1};
    }

    // [single letter of `sector`, M of the opposite sector]
    LieElement crossLetter(Sector sector, char letter, const NcPoly& m) const {
        LieElement r;
        Sector tailSector = sector == Sector::Plus ? Sector::Minus : Sector::Plus;
        int li = letterIndex(letter);
        bool lJ = letterJ(letter);
        int k0 = re_.corootRow(li);
        int baseSign = sector == Sector::Plus ? 1 : -1;
        NcPoly& dst = partOf(r, tailSector);
        std::map<std::pair<Word, CartanKey>, Gauss> dangling;
        for (const auto& [w, cw] : m) {
            for (size_t p = 0; p < w.size(); ++p) {
                if (letterIndex(w[p]) != li) continue;
                bool eJ = sector == Sector::Plus ? lJ : letterJ(w[p]);
                bool fJ = sector == Sector::Plus ? letterJ(w[p]) : lJ;
                auto [csign, cmark] = crossTable(eJ, fJ);
                Gauss c = cw * Gauss(Rational(csign * baseSign));
                Word prefix = w.substr(0, p);
                // push (cmark, k0) through the tail
                for (size_t t = p + 1; t < w.size(); ++t) {
                    char tau = w[t];
                    PushStep st = pushStep(tailSector, cmark, letterJ(tau));
                    Rational f = pairAH(letterIndex(tau), k0);
                    if (st.sign < 0) f = -f;
                    if (!f.isZero()) {
                        Word done = prefix;
                        done += st.flip ? makeLetter(letterIndex(tau), !letterJ(tau)) : tau;
                        done += w.substr(t + 1);
                        ncAdd(dst, done, c * Gauss(f));
                    }
                    prefix += tau;
                }
                CartanKey key{cmark, k0};
                if (prefix.empty()) {
                    r.addCartan(key, c);
                } else {
                    auto dk = std::make_pair(prefix, key);
                    auto it = dangling.find(dk);
                    if (it == dangling.end()) dangling.emplace(dk, c);
                    else {
                        it->second += c;
                        if (it->second.isZero()) dangling.erase(it);
                    }
                }
            }
        }
        if (!dangling.empty())
            throw std::logic_error("crossLetter: residual mixed monomials; operand was "
                                   "not a Lie element");
        return r;
    }

    // [standard bracketing of the Lyndon word `tree` in `sector`, y]
    LieElement crossTree(Sector sector, const Word& tree, const LieElement& y) const {
        if (tree.size() == 1) {
            LieElement r;
            NcPoly self{{tree, Gauss(1)}};
            const NcPoly& same = sector == Sector::Plus ? y.plus : y.minus;
            const NcPoly& opp = sector == Sector::Plus ? y.minus : y.plus;
            if (!same.empty()) ncBracketInto(partOf(r, sector), self, same, Gauss(1));
            for (const auto& [key, c] : y.cartan)
                r -= cartanAct(key, c, self, sector);
            if (!opp.empty()) r += crossLetter(sector, tree[0], opp);
            return r;
        }
        auto [u, v] = standardFactorization(tree);
        LieElement yv = crossTree(sector, v, y);
        LieElement yu = crossTree(sector, u, y);
        return crossTree(sector, u, yv) - crossTree(sector, v, yu);
    }

    static size_t maxWordLen(const NcPoly& p) {
        size_t m = 0;
        for (const auto& [w, c] : p) { (void)c; m = std::max(m, w.size()); }
        return m;
    }

    static void markerPairCheck(const NcPoly& plusPart, const NcPoly& minusPart) {
        auto classesOf = [](const NcPoly& p) {
            bool cls[2][2] = {{false, false}, {false, false}};
            for (const auto& [w, c] : p) {
                bool hasJ = false;
                for (char ch : w)
                    if (letterJ(ch)) { hasJ = true; break; }
                if (!c.re().isZero()) cls[0][hasJ] = true;
                if (!c.im().isZero()) cls[1][hasJ] = true;
            }
            return std::array<std::array<bool, 2>, 2>{
                {{cls[0][0], cls[0][1]}, {cls[1][0], cls[1][1]}}};
        };
        auto a = classesOf(plusPart), b = classesOf(minusPart);
        for (int i1 = 0; i1 < 2; ++i1)
            for (int j1 = 0; j1 < 2; ++j1)
                for (int i2 = 0; i2 < 2; ++i2)
                    for (int j2 = 0; j2 < 2; ++j2) {
                        if (!a[i1][j1] || !b[i2][j2]) continue;
                        if (((i1 & j2) ^ (i2 & j1)) != 0)
                            throw UnsupportedMarkerPair(
                                "bracket: i-marked against J-marked operands across "
                                "sectors is outside the relation table; evaluate via "
                                "the tensor representation oracle");
                    }
    }

    LieElement crossPM(const NcPoly& plusPart, const NcPoly& minusPart) const {
        markerPairCheck(plusPart, minusPart);
        LieElement r;
        if (maxWordLen(plusPart) <= maxWordLen(minusPart)) {
            LieElement y;
            y.minus = minusPart;
            for (const auto& [w, c] : lyndonCoordinates(plusPart, cache_))
                r += c * crossTree(Sector::Plus, w, y);
        } else {
            LieElement y;
            y.plus = plusPart;
            for (const auto& [w, c] : lyndonCoordinates(minusPart, cache_))
                r -= c * crossTree(Sector::Minus, w, y);
        }
        return r;
    }
};

}  // namespace qkm

#endif
