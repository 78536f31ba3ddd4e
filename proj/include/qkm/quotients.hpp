// Graded exact linear algebra over the free pieces of g~(A): Serre-ideal
// components (Standard algebra), maximal-radical components (Reduced
// algebra), and multiplicity tables for all three algebras.
#ifndef QKM_QUOTIENTS_HPP
#define QKM_QUOTIENTS_HPP

#include <deque>
#include <map>
#include <string>
#include <vector>

#include "qkm/linalg.hpp"
#include "qkm/tensor.hpp"

namespace qkm {

struct GradedComponent {
    RootVector degree;          // signed
    std::vector<Word> basis;    // Lyndon words of the free component
    GaussMat span;              // RREF rows in Lyndon coordinates
    size_t rank() const { return span.size(); }
};

enum class Algebra { Universal, Standard, Reduced };

struct MultRow {
    RootVector alpha;  // positive degree; the minus sector mirrors it
    int ht = 0;
    long long dimUniversal = 0;
    long long dimStandard = 0;
    long long dimReduced = 0;
};

struct MultiplicityTable {
    int n = 0;
    int cartanComplexDim = 0;  // dim_C(H + JH) = 2(2n-r)
    std::vector<MultRow> rows;

    long long complexTotal(Algebra a) const {
        long long acc = cartanComplexDim;
        for (const auto& r : rows)
            acc += 2 * (a == Algebra::Universal   ? r.dimUniversal
                        : a == Algebra::Standard  ? r.dimStandard
                                                  : r.dimReduced);
        return acc;
    }
    long long realTotal(Algebra a) const { return 2 * complexTotal(a); }
};

class Quotients {
public:
    Quotients(const Engine& eng, int maxHt) : eng_(eng), maxHt_(maxHt) {
        if (maxHt < 1) throw std::invalid_argument("Quotients: maxHt >= 1");
    }

    int maxHeight() const { return maxHt_; }
    const Engine& engine() const { return eng_; }

    // ---- Serre ideal K = I+ + I- --------------------------------------------
    GradedComponent serreComponent(const RootVector& alpha) {
        checkHeight(alpha);
        ensureSerre();
        if (heightOf(alpha) == 0) return emptyComponent(alpha);
        return makeReport(alpha, serre_);
    }
    const std::vector<std::string>& serreViolations() {
        ensureSerre();
        return serreViolations_;
    }
    size_t serreRank(const RootVector& alpha) {
        ensureSerre();
        auto it = serre_.find(alpha);
        return it == serre_.end() ? 0 : it->second.wordSpan.rank();
    }

    // ---- radical (unique maximal graded ideal meeting H, JH trivially) ------
    GradedComponent radicalComponent(const RootVector& alpha) {
        if (heightOf(alpha) == 0)
            throw std::invalid_argument("radicalComponent: degree must be nonzero");
        checkHeight(alpha);
        ensureRadical();
        return makeReport(alpha, radical_);
    }
    size_t radicalRank(const RootVector& alpha) {
        ensureRadical();
        auto it = radical_.find(alpha);
        return it == radical_.end() ? 0 : it->second.wordSpan.rank();
    }

    // ---- multiplicities -------------------------------------------------------
    MultiplicityTable multiplicities() {
        ensureSerre();
        ensureRadical();
        MultiplicityTable table;
        table.n = eng_.n();
        table.cartanComplexDim = 2 * eng_.dim();
        for (const RootVector& alpha : positiveDegrees()) {
            MultRow row;
            row.alpha = alpha;
            row.ht = heightOf(alpha);
            row.dimUniversal = static_cast<long long>(lyndonWordsOfContent(alpha).size());
            row.dimStandard = row.dimUniversal - static_cast<long long>(serreRank(alpha));
            row.dimReduced = row.dimUniversal - static_cast<long long>(radicalRank(alpha));
            table.rows.push_back(std::move(row));
        }
        return table;
    }

    // ---- checks ---------------------------------------------------------------
    // Per-degree row-space containment: Serre span inside radical span.
    std::vector<CheckResult> serreInRadicalCheck() {
        ensureSerre();
        ensureRadical();
        std::vector<CheckResult> out;
        for (const RootVector& alpha : signedDegrees()) {
            auto it = serre_.find(alpha);
            CheckResult res{"serre-in-radical", degreeName(alpha), true, ""};
            if (it != serre_.end() && it->second.wordSpan.rank() > 0) {
                const GaussSpan* rad = findSpan(radical_, alpha);
                for (const auto& row : it->second.wordSpan.rows()) {
                    if (!rad || !rad->contains(row)) {
                        res.pass = false;
                        res.counterexample = "Serre row escapes the radical";
                        break;
                    }
                }
            }
            out.push_back(res);
        }
        return out;
    }

    // Ideal property: ad(generator) maps every span member into the span of
    // the shifted degree (or to zero across the Cartan boundary).
    std::vector<CheckResult> idealClosureCheck(bool radicalSide) {
        if (radicalSide) ensureRadical();
        else ensureSerre();
        auto& comps = radicalSide ? radical_ : serre_;
        std::vector<CheckResult> out;
        for (auto& [alpha, comp] : comps) {
            CheckResult res{radicalSide ? "radical-ideal-closure" : "serre-ideal-closure",
                            degreeName(alpha), true, ""};
            for (const auto& row : comp.lyndonRows) {
                LieElement x = elementOf(alpha, row);
                for (const LieElement& g : closureGenerators()) {
                    LieElement y = eng_.bracket(g, x);
                    if (!y.cartan.empty()) {
                        res.pass = false;
                        res.counterexample = "bracket reaches the Cartan subalgebra";
                        break;
                    }
                    if (!checkMembership(y, comps)) {
                        res.pass = false;
                        res.counterexample = "bracket escapes the computed components";
                        break;
                    }
                }
                if (!res.pass) break;
            }
            out.push_back(res);
        }
        return out;
    }

    // e<->f mirror: spans coincide degree-for-degree in word coordinates.
    bool mirrorSymmetric(bool radicalSide) {
        if (radicalSide) ensureRadical();
        else ensureSerre();
        auto& comps = radicalSide ? radical_ : serre_;
        for (const RootVector& alpha : positiveDegrees()) {
            RootVector neg = alpha;
            for (int& v : neg) v = -v;
            const GaussSpan* p = findSpan(comps, alpha);
            const GaussSpan* m = findSpan(comps, neg);
            size_t rp = p ? p->rank() : 0, rm = m ? m->rank() : 0;
            if (rp != rm) return false;
            if (rp == 0) continue;
            if (!p->sameSpan(*m)) return false;
        }
        return true;
    }

    std::vector<RootVector> positiveDegrees() const {
        std::vector<RootVector> out;
        RootVector cur(eng_.n(), 0);
        for (int h = 1; h <= maxHt_; ++h) {
            auto rec = [&](auto&& self, int pos, int left) -> void {
                if (pos == eng_.n()) {
                    if (left == 0) out.push_back(cur);
                    return;
                }
                for (int v = 0; v <= left; ++v) {
                    cur[pos] = v;
                    self(self, pos + 1, left - v);
                    cur[pos] = 0;
                }
            };
            rec(rec, 0, h);
        }
        return out;
    }

    LieElement elementOf(const RootVector& alpha, const GaussVec& lyndonRow) {
        auto basis = lyndonBasisOf(alpha);
        LieElement x;
        Sector sec = heightOf(alpha) > 0 ? Sector::Plus : Sector::Minus;
        for (size_t t = 0; t < basis.size(); ++t)
            if (!lyndonRow[t].isZero()) x += lyndonRow[t] * eng_.basisElement(sec, basis[t]);
        return x;
    }

private:
    const Engine& eng_;
    int maxHt_;

    struct Component {
        std::vector<Word> basis;   // Lyndon words (frame of the Lie subspace)
        GaussSpan wordSpan;        // rows in word coordinates
        GaussMat lyndonRows;       // RREF rows in Lyndon coordinates
    };

    struct WordFrame {
        std::vector<Word> words;
        std::map<Word, size_t> index;
    };

    std::map<RootVector, Component> serre_, radical_;
    bool serreDone_ = false, radicalDone_ = false;
    std::vector<std::string> serreViolations_;
    std::map<RootVector, WordFrame> frames_;

    void checkHeight(const RootVector& alpha) const {
        int h = heightOf(alpha);
        if (h > maxHt_ || -h > maxHt_)
            throw HeightExceeded("component degree exceeds the configured height bound");
    }

    static std::string degreeName(const RootVector& alpha) {
        std::string s = "(";
        for (size_t i = 0; i < alpha.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(alpha[i]);
        }
        return s + ")";
    }

    RootVector absOf(const RootVector& alpha) const {
        RootVector c = alpha;
        for (int& v : c) v = v < 0 ? -v : v;
        return c;
    }

    const WordFrame& frameOf(const RootVector& content) {
        auto it = frames_.find(content);
        if (it != frames_.end()) return it->second;
        WordFrame f;
        f.words = allWordsOfContent(content);
        for (size_t k = 0; k < f.words.size(); ++k) f.index.emplace(f.words[k], k);
        return frames_.emplace(content, std::move(f)).first->second;
    }

    GaussVec vectorize(const NcPoly& p, const WordFrame& f) const {
        GaussVec v(f.words.size(), Gauss(0));
        for (const auto& [w, c] : p) v[f.index.at(w)] = c;
        return v;
    }
    NcPoly devectorize(const GaussVec& v, const WordFrame& f) const {
        NcPoly p;
        for (size_t k = 0; k < v.size(); ++k)
            if (!v[k].isZero()) p.emplace(f.words[k], v[k]);
        return p;
    }

    std::vector<Word> lyndonBasisOf(const RootVector& alpha) {
        return lyndonWordsOfContent(absOf(alpha));
    }

    static const GaussSpan* findSpan(std::map<RootVector, Component>& comps,
                                     const RootVector& alpha) {
        auto it = comps.find(alpha);
        return it == comps.end() ? nullptr : &it->second.wordSpan;
    }

    std::vector<RootVector> signedDegrees() {
        std::vector<RootVector> out;
        for (const RootVector& alpha : positiveDegrees()) {
            RootVector neg = alpha;
            for (int& v : neg) v = -v;
            out.push_back(neg);
        }
        auto pos = positiveDegrees();
        out.insert(out.end(), pos.begin(), pos.end());
        return out;
    }

    std::vector<LieElement> closureGenerators() const {
        std::vector<LieElement> gens;
        for (int k = 1; k <= eng_.dim(); ++k) gens.push_back(eng_.genH(k, true));
        for (int i = 1; i <= eng_.n(); ++i)
            for (bool j : {false, true}) {
                gens.push_back(eng_.genE(i, j));
                gens.push_back(eng_.genF(i, j));
            }
        return gens;
    }

    bool checkMembership(const LieElement& y, std::map<RootVector, Component>& comps) {
        auto deg = degreeOf(y, eng_.n());
        if (y.isZero()) return true;
        if (!deg) return false;
        int h = heightOf(*deg);
        if (h > maxHt_ || -h > maxHt_) return true;  // outside the computed window
        const GaussSpan* span = findSpan(comps, *deg);
        if (!span) return false;
        const NcPoly& part = h > 0 ? y.plus : y.minus;
        return span->contains(vectorize(part, frameOf(absOf(*deg))));
    }

    GradedComponent emptyComponent(const RootVector& alpha) {
        GradedComponent c;
        c.degree = alpha;
        return c;
    }

    GradedComponent makeReport(const RootVector& alpha, std::map<RootVector, Component>& comps) {
        GradedComponent c;
        c.degree = alpha;
        c.basis = lyndonBasisOf(alpha);
        auto it = comps.find(alpha);
        if (it != comps.end()) c.span = it->second.lyndonRows;
        return c;
    }

    void finalizeComponent(const RootVector& alpha, Component& comp) {
        comp.basis = lyndonBasisOf(alpha);
        std::map<Word, size_t> lyIndex;
        for (size_t k = 0; k < comp.basis.size(); ++k) lyIndex.emplace(comp.basis[k], k);
        GaussMat rows;
        const WordFrame& f = frameOf(absOf(alpha));
        for (const auto& row : comp.wordSpan.rows()) {
            NcPoly p = devectorize(row, f);
            GaussVec ly(comp.basis.size(), Gauss(0));
            for (const auto& [w, c] : eng_.lyndonCoords(p)) ly[lyIndex.at(w)] = c;
            rows.push_back(std::move(ly));
        }
        rref(rows);
        comp.lyndonRows = std::move(rows);
    }

    // ---- Serre saturation ------------------------------------------------------
    void ensureSerre() {
        if (serreDone_) return;
        serreDone_ = true;
        int maxSeedHt = 1;
        std::deque<std::pair<RootVector, LieElement>> queue;
        for (int i = 1; i <= eng_.n(); ++i)
            for (int j = 1; j <= eng_.n(); ++j) {
                if (i == j) continue;
                for (bool mo : {false, true})
                    for (bool mi : {false, true}) {
                        LieElement xp = eng_.serrePlus(i, j, mo, mi);
                        LieElement ym = eng_.serreMinus(i, j, mo, mi);
                        for (LieElement* s : {&xp, &ym}) {
                            if (s->isZero()) continue;
                            auto deg = degreeOf(*s, eng_.n());
                            int h = heightOf(*deg);
                            maxSeedHt = std::max({maxSeedHt, h, -h});
                            queue.emplace_back(*deg, *s);
                        }
                    }
            }
        int window = std::max(maxHt_, maxSeedHt);
        while (!queue.empty()) {
            auto [alpha, x] = queue.front();
            queue.pop_front();
            int h = heightOf(alpha);
            const WordFrame& f = frameOf(absOf(alpha));
            auto& comp = serre_[alpha];
            if (comp.wordSpan.cols() == 0) comp.wordSpan = GaussSpan(f.words.size());
            const NcPoly& part = h > 0 ? x.plus : x.minus;
            GaussVec vec = comp.wordSpan.reduce(vectorize(part, f));
            bool zero = true;
            for (const auto& c : vec)
                if (!c.isZero()) { zero = false; break; }
            if (zero) continue;
            comp.wordSpan.insert(vec);
            LieElement xr;
            if (h > 0) xr.plus = devectorize(vec, f);
            else xr.minus = devectorize(vec, f);
            for (const LieElement& g : closureGenerators()) {
                LieElement y = eng_.bracket(g, xr);
                if (y.isZero()) continue;
                if (!y.cartan.empty()) {
                    serreViolations_.push_back("Serre ideal reaches K at degree " +
                                               degreeName(alpha));
                    continue;
                }
                auto dy = degreeOf(y, eng_.n());
                int hy = heightOf(*dy);
                if (hy > window || -hy > window) continue;
                queue.emplace_back(*dy, y);
            }
        }
        for (auto& [alpha, comp] : serre_) finalizeComponent(alpha, comp);
    }

    // ---- radical fixpoint --------------------------------------------------------
    void ensureRadical() {
        if (radicalDone_) return;
        radicalDone_ = true;
        for (int sector = 0; sector < 2; ++sector) {
            bool plusSide = sector == 0;
            for (int h = 1; h <= maxHt_; ++h)
                for (const RootVector& content : contentsOfHeight(h))
                    radicalDegree(content, plusSide);
        }
    }

    std::vector<RootVector> contentsOfHeight(int h) const {
        std::vector<RootVector> out;
        RootVector cur(eng_.n(), 0);
        auto rec = [&](auto&& self, int pos, int left) -> void {
            if (pos == eng_.n()) {
                if (left == 0) out.push_back(cur);
                return;
            }
            for (int v = 0; v <= left; ++v) {
                cur[pos] = v;
                self(self, pos + 1, left - v);
                cur[pos] = 0;
            }
        };
        rec(rec, 0, h);
        return out;
    }

    void radicalDegree(const RootVector& content, bool plusSide) {
        auto basis = lyndonWordsOfContent(content);
        if (basis.empty()) return;
        RootVector alpha = content;
        if (!plusSide)
            for (int& v : alpha) v = -v;
        Sector sec = plusSide ? Sector::Plus : Sector::Minus;
        int h = heightOf(content);
        std::vector<LieElement> belems;
        for (const auto& w : basis) belems.push_back(eng_.basisElement(sec, w));

        GaussMat constraints;
        for (int j = 1; j <= eng_.n(); ++j)
            for (bool jm : {false, true}) {
                LieElement lower = plusSide ? eng_.genF(j, jm) : eng_.genE(j, jm);
                std::vector<LieElement> images;
                for (const auto& b : belems) images.push_back(eng_.bracket(lower, b));
                if (h == 1) {
                    // crossing the Cartan boundary: images must vanish outright
                    std::map<CartanKey, size_t> keys;
                    for (const auto& y : images)
                        for (const auto& [k, c] : y.cartan) {
                            (void)c;
                            keys.emplace(k, keys.size());
                        }
                    if (keys.empty()) continue;
                    GaussMat rows(keys.size(), GaussVec(basis.size(), Gauss(0)));
                    for (size_t t = 0; t < images.size(); ++t)
                        for (const auto& [k, c] : images[t].cartan)
                            rows[keys.at(k)][t] = c;
                    for (auto& r : rows) constraints.push_back(std::move(r));
                    continue;
                }
                RootVector beta = content;
                beta[j - 1] -= 1;
                bool feasible = beta[j - 1] >= 0;
                RootVector betaSigned = beta;
                if (!plusSide)
                    for (int& v : betaSigned) v = -v;
                const GaussSpan* prior = feasible ? findSpan(radical_, betaSigned) : nullptr;
                const WordFrame* f = feasible ? &frameOf(beta) : nullptr;
                std::vector<GaussVec> residuals;
                size_t cols = feasible ? f->words.size() : 0;
                bool anyNonzero = false;
                for (const auto& y : images) {
                    const NcPoly& part = plusSide ? y.plus : y.minus;
                    if (!feasible) {
                        if (!part.empty() || !y.cartan.empty())
                            throw std::logic_error("radicalDegree: impossible descent");
                        residuals.push_back({});
                        continue;
                    }
                    GaussVec v = vectorize(part, *f);
                    if (prior) v = prior->reduce(std::move(v));
                    for (const auto& c : v)
                        if (!c.isZero()) { anyNonzero = true; break; }
                    residuals.push_back(std::move(v));
                }
                if (!feasible || !anyNonzero) continue;
                for (size_t coord = 0; coord < cols; ++coord) {
                    GaussVec row(basis.size(), Gauss(0));
                    bool nz = false;
                    for (size_t t = 0; t < residuals.size(); ++t) {
                        row[t] = residuals[t][coord];
                        if (!row[t].isZero()) nz = true;
                    }
                    if (nz) constraints.push_back(std::move(row));
                }
            }

        GaussMat kernel = nullspace(std::move(constraints), basis.size());
        if (kernel.empty()) return;
        Component comp;
        comp.basis = basis;
        const WordFrame& frame = frameOf(content);
        comp.wordSpan = GaussSpan(frame.words.size());
        for (const auto& kv : kernel) {
            NcPoly p;
            for (size_t t = 0; t < basis.size(); ++t)
                if (!kv[t].isZero()) ncAccumulate(p, eng_.cache().expand(basis[t]), kv[t]);
            comp.wordSpan.insert(vectorize(p, frame));
        }
        GaussMat ly = kernel;
        rref(ly);
        comp.lyndonRows = std::move(ly);
        radical_.emplace(alpha, std::move(comp));
    }
};

// ---- Lemma 3.1 verification (symbolic + oracle, all marker decorations) -----
// For unmarked decorations the descent vanishes in g~(A); for marked ones the
// symbolic residual lies in the radical and the oracle operator is zero, and
// the two paths agree exactly through psi.
inline std::vector<CheckResult> lemma31Check(const Engine& eng, const Rep& rep,
                                             Quotients& quot) {
    std::vector<CheckResult> out;
    int n = eng.n();
    auto testOne = [&](bool minusFamily, int i, int j, int k, bool mo, bool mi, bool mk) {
        std::string name = std::string(minusFamily ? "ad eps_k(y_ij)" : "ad phi_k(x_ij)") +
                           " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                           " k=" + std::to_string(k) + (mo ? " Jouter" : "") +
                           (mi ? " Jinner" : "") + (mk ? " Jk" : "");
        CheckResult res{"lemma31", name, true, ""};
        LieElement target = minusFamily ? eng.serreMinus(i, j, mo, mi)
                                        : eng.serrePlus(i, j, mo, mi);
        LieElement probe = minusFamily ? eng.genE(k, mk) : eng.genF(k, mk);
        LieElement descent = eng.bracket(probe, target);
        bool unmarked = !mo && !mi && !mk;
        if (unmarked && !descent.isZero()) {
            res.pass = false;
            res.counterexample = "unmarked descent is nonzero symbolically";
            out.push_back(res);
            return;
        }
        // the two paths agree exactly: psi(descent) equals the operator commutator
        int slack = Rep::growthOf(target) + 1;
        int maxLen = rep.config().truncation - slack;
        for (const TWord& w : rep.testWords(std::max(maxLen, 0))) {
            TensorElement t{{w, Gauss(1)}};
            TensorElement viaSymbolic = rep.actElem(descent, t);
            TensorElement viaOracle = rep.commutatorOp(probe, target, t);
            if (viaSymbolic != viaOracle) {
                res.pass = false;
                res.counterexample = "paths disagree at " + twordToString(w);
                break;
            }
            if (!viaOracle.empty()) {
                res.pass = false;
                res.counterexample = "oracle operator nonzero at " + twordToString(w);
                break;
            }
        }
        // marked residuals are radical members
        if (res.pass && !descent.isZero()) {
            auto deg = degreeOf(descent, n);
            if (!deg) {
                res.pass = false;
                res.counterexample = "descent is not homogeneous";
            } else {
                int h = heightOf(*deg);
                if (h <= quot.maxHeight() && -h <= quot.maxHeight()) {
                    GradedComponent comp = quot.radicalComponent(*deg);
                    std::map<Word, size_t> idx;
                    for (size_t t2 = 0; t2 < comp.basis.size(); ++t2)
                        idx.emplace(comp.basis[t2], t2);
                    const NcPoly& part = h > 0 ? descent.plus : descent.minus;
                    GaussVec v(comp.basis.size(), Gauss(0));
                    for (const auto& [w2, c2] : eng.lyndonCoords(part)) v[idx.at(w2)] = c2;
                    GaussSpan span(comp.basis.size());
                    for (const auto& row : comp.span) span.insert(row);
                    if (!span.contains(v)) {
                        res.pass = false;
                        res.counterexample = "marked residual escapes the radical";
                    }
                }
            }
        }
        out.push_back(res);
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            for (int k = 1; k <= n; ++k)
                for (bool mo : {false, true})
                    for (bool mi : {false, true})
                        for (bool mk : {false, true}) {
                            testOne(true, i, j, k, mo, mi, mk);
                            testOne(false, i, j, k, mo, mi, mk);
                        }
        }
    return out;
}

}  // namespace qkm

#endif
