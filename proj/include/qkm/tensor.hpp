// The representation of g~(A) on the truncated quaternion tensor algebra
// T(V): the 21-rule generator action, its linear extension to normal-form
// elements, and the verification oracles built on it (homomorphism, ideal
// annihilation, sl(2)-type operator identities, nontriviality).
#ifndef QKM_TENSOR_HPP
#define QKM_TENSOR_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qkm/engine.hpp"

namespace qkm {

struct TruncationOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// leading marker tag (0 or 1) and letter sequence over 1..n
using TWord = std::pair<int, std::string>;
using TensorElement = std::map<TWord, Gauss>;

inline std::string twordToString(const TWord& w) {
    std::string s = w.first ? "J" : "";
    if (w.second.empty()) return s.empty() ? "1" : s;
    for (char c : w.second) s += "v" + std::to_string(static_cast<int>(c));
    return s;
}

inline void tensorAdd(TensorElement& dst, const TWord& w, const Gauss& c) {
    auto it = dst.find(w);
    if (it == dst.end()) {
        if (!c.isZero()) dst.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.isZero()) dst.erase(it);
}

inline void tensorAccumulate(TensorElement& dst, const TensorElement& src, const Gauss& s) {
    if (s.isZero()) return;
    for (const auto& [w, c] : src) tensorAdd(dst, w, c * s);
}

struct RepConfig {
    int truncation = 5;              // L
    std::vector<Rational> weight;    // values of lambda on the E-row basis

    static RepConfig generic(const Realization& re, int L = 5) {
        RepConfig cfg;
        cfg.truncation = L;
        for (int k = 1; k <= re.dim; ++k) cfg.weight.push_back(Rational(k));
        return cfg;
    }
};

struct CheckResult {
    std::string check;
    std::string subject;
    bool pass = true;
    std::string counterexample;
};

class Rep {
public:
    Rep(const Engine& eng, RepConfig cfg) : eng_(eng), cfg_(std::move(cfg)) {
        if (cfg_.truncation < 1) throw std::invalid_argument("Rep: truncation must be >= 1");
        if (static_cast<int>(cfg_.weight.size()) != eng_.dim())
            throw std::invalid_argument("Rep: weight size must equal 2n-r");
    }

    const RepConfig& config() const { return cfg_; }
    const Engine& engine() const { return eng_; }

    // --- generator actions on basis words ------------------------------------
    TensorElement actH(int k0, bool jmark, const TWord& w) const {
        TensorElement r;
        Rational eig = cfg_.weight[k0];
        for (char c : w.second) eig -= eng_.pairAH(static_cast<int>(c), k0);
        if (!jmark) {
            tensorAdd(r, w, Gauss(eig));
        } else if (w.first == 0) {
            tensorAdd(r, TWord{1, w.second}, Gauss(eig));
        } else {
            tensorAdd(r, TWord{0, w.second}, Gauss(-eig));
        }
        return r;
    }

    TensorElement actF(int i, bool jmark, const TWord& w) const {
        if (static_cast<int>(w.second.size()) + 1 > cfg_.truncation)
            throw TruncationOverflow("actF: word length would exceed the truncation");
        TensorElement r;
        std::string nw = std::string(1, static_cast<char>(i)) + w.second;
        if (!jmark) {
            tensorAdd(r, TWord{w.first, nw}, Gauss(1));
        } else if (w.first == 0) {
            tensorAdd(r, TWord{1, nw}, Gauss(1));
        } else {
            tensorAdd(r, TWord{0, nw}, Gauss(-1));
        }
        return r;
    }

    TensorElement actE(int i, bool jmark, const TWord& w) const {
        TensorElement r;
        if (w.second.empty()) return r;
        int j1 = static_cast<int>(w.second[0]);
        std::string tail = w.second.substr(1);
        int k0 = eng_.realization().corootRow(i);
        if (!jmark) {
            // e_i . v_j1 t = v_j1 (e_i . t) + delta alpha_i^v . t, marker preserved
            TensorElement inner = actE(i, false, TWord{w.first, tail});
            prependInto(r, j1, inner, Gauss(1));
            if (j1 == i) tensorAccumulate(r, actH(k0, false, TWord{w.first, tail}), Gauss(1));
        } else if (w.first == 0) {
            TensorElement inner = actE(i, true, TWord{0, tail});
            prependInto(r, j1, inner, Gauss(1));
            if (j1 == i) tensorAccumulate(r, actH(k0, true, TWord{0, tail}), Gauss(1));
        } else {
            // Je_i . J v_j1 t = -v_j1 (e_i . t) - delta alpha_i^v . t, unmarked tail
            TensorElement inner = actE(i, false, TWord{0, tail});
            prependInto(r, j1, inner, Gauss(-1));
            if (j1 == i) tensorAccumulate(r, actH(k0, false, TWord{0, tail}), Gauss(-1));
        }
        return r;
    }

    // --- linear extension to elements ----------------------------------------
    TensorElement actElem(const LieElement& x, const TensorElement& t) const {
        TensorElement r;
        for (const auto& [key, c] : x.cartan) {
            for (const auto& [w, cw] : t)
                tensorAccumulate(r, actH(key.second, key.first != 0, w), c * cw);
        }
        applyWords(r, x.plus, Sector::Plus, t);
        applyWords(r, x.minus, Sector::Minus, t);
        return r;
    }

    // operator commutator [psi(x), psi(y)] applied to t
    TensorElement commutatorOp(const LieElement& x, const LieElement& y,
                               const TensorElement& t) const {
        TensorElement xy = actElem(x, actElem(y, t));
        TensorElement yx = actElem(y, actElem(x, t));
        TensorElement r = xy;
        tensorAccumulate(r, yx, Gauss(-1));
        return r;
    }

    // words of T(V) with length <= maxLen, both leading markers
    std::vector<TWord> testWords(int maxLen) const {
        std::vector<TWord> out;
        int n = eng_.n();
        std::string cur;
        auto rec = [&](auto&& self) -> void {
            for (int m : {0, 1}) out.push_back(TWord{m, cur});
            if (static_cast<int>(cur.size()) >= maxLen) return;
            for (int i = 1; i <= n; ++i) {
                cur.push_back(static_cast<char>(i));
                self(self);
                cur.pop_back();
            }
        };
        rec(rec);
        return out;
    }

    // largest word-length growth psi(x) can cause (f-type letters prepend)
    static int growthOf(const LieElement& x) {
        int g = 0;
        for (const auto& [w, c] : x.minus) {
            (void)c;
            g = std::max(g, static_cast<int>(w.size()));
        }
        return g;
    }

    // --- checks ---------------------------------------------------------------
    // psi([x,y]) = [psi(x), psi(y)] on all words with headroom
    CheckResult commutatorCheck(const LieElement& x, const LieElement& y,
                                const std::string& subject) const {
        CheckResult res{"homomorphism", subject, true, ""};
        LieElement b = eng_.bracket(x, y);
        int slack = growthOf(x) + growthOf(y);
        int maxLen = cfg_.truncation - std::max(slack, 1);
        for (const TWord& w : testWords(std::max(maxLen, 0))) {
            TensorElement t{{w, Gauss(1)}};
            TensorElement lhs = actElem(b, t);
            TensorElement rhs = commutatorOp(x, y, t);
            if (lhs != rhs) {
                res.pass = false;
                res.counterexample = twordToString(w);
                return res;
            }
        }
        return res;
    }

    // every generator of the ideal I-hat annihilates words of length <= L-1
    std::vector<CheckResult> idealZeroCheck() const {
        std::vector<CheckResult> out;
        int n = eng_.n(), d = eng_.dim();
        auto probe = [&](const LieElement& a, const LieElement& b, const LieElement& corr,
                         const std::string& name) {
            CheckResult res{"ideal-annihilation", name, true, ""};
            for (const TWord& w : testWords(cfg_.truncation - 1)) {
                TensorElement t{{w, Gauss(1)}};
                TensorElement val = commutatorOp(a, b, t);
                tensorAccumulate(val, actElem(corr, t), Gauss(-1));
                if (!val.empty()) {
                    res.pass = false;
                    res.counterexample = twordToString(w);
                    break;
                }
            }
            out.push_back(res);
        };
        LieElement zero;
        for (int k = 1; k <= d; ++k)
            for (int l = k; l <= d; ++l) {
                probe(eng_.genH(k), eng_.genH(l), zero, "[h" + std::to_string(k) + ",h" + std::to_string(l) + "]");
                probe(eng_.genH(k), eng_.genH(l, true), zero, "[h" + std::to_string(k) + ",Jh" + std::to_string(l) + "]");
                probe(eng_.genH(k, true), eng_.genH(l, true), zero, "[Jh" + std::to_string(k) + ",Jh" + std::to_string(l) + "]");
            }
        for (int k = 1; k <= d; ++k)
            for (int i = 1; i <= n; ++i) {
                Gauss p(eng_.pairAH(i, k - 1));
                std::string hk = "h" + std::to_string(k), ei = "e" + std::to_string(i),
                            fi = "f" + std::to_string(i);
                probe(eng_.genH(k), eng_.genE(i), p * eng_.genE(i), "[" + hk + "," + ei + "] - <a,h>" + ei);
                probe(eng_.genH(k, true), eng_.genE(i), p * eng_.genE(i, true), "[J" + hk + "," + ei + "] - <a,h>J" + ei);
                probe(eng_.genH(k), eng_.genE(i, true), p * eng_.genE(i, true), "[" + hk + ",J" + ei + "] - <a,h>J" + ei);
                probe(eng_.genH(k, true), eng_.genE(i, true), -(p * eng_.genE(i)), "[J" + hk + ",J" + ei + "] + <a,h>" + ei);
                probe(eng_.genH(k), eng_.genF(i), -(p * eng_.genF(i)), "[" + hk + "," + fi + "] + <a,h>" + fi);
                probe(eng_.genH(k, true), eng_.genF(i), -(p * eng_.genF(i, true)), "[J" + hk + "," + fi + "] + <a,h>J" + fi);
                probe(eng_.genH(k), eng_.genF(i, true), -(p * eng_.genF(i, true)), "[" + hk + ",J" + fi + "] + <a,h>J" + fi);
                probe(eng_.genH(k, true), eng_.genF(i, true), p * eng_.genF(i), "[J" + hk + ",J" + fi + "] - <a,h>" + fi);
            }
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                LieElement hv = i == j ? eng_.coroot(i) : zero;
                LieElement jhv = i == j ? eng_.coroot(i, true) : zero;
                std::string ei = "e" + std::to_string(i), fj = "f" + std::to_string(j);
                probe(eng_.genE(i), eng_.genF(j), hv, "[" + ei + "," + fj + "] - d hv");
                probe(eng_.genE(i, true), eng_.genF(j), jhv, "[J" + ei + "," + fj + "] - d Jhv");
                probe(eng_.genE(i), eng_.genF(j, true), jhv, "[" + ei + ",J" + fj + "] - d Jhv");
                probe(eng_.genE(i, true), eng_.genF(j, true), -hv, "[J" + ei + ",J" + fj + "] + d hv");
            }
        return out;
    }

    // Operator identity of Lemma 3.1's engine room, per marker decoration.
    // Unmarked: [adE,(adF)^m] = m(adF)^(m-1) adH - m(m-1)(adF)^(m-1);
    // (J,J) flips both signs; mixed decorations carry the corrected two-term
    // forms with ad psi(f) / ad psi(Jf) in the quadratic term.
    CheckResult sl2IdentityCheck(int i, int m) const {
        CheckResult res{"sl2-identity", "i=" + std::to_string(i) + " m=" + std::to_string(m),
                        true, ""};
        if (m < 1) throw std::invalid_argument("sl2IdentityCheck: m >= 1");
        int need = m + 3;
        Rep rep = cfg_.truncation >= need ? *this : Rep(eng_, RepConfig{need, cfg_.weight});
        for (int em = 0; em < 2; ++em)
            for (int fm = 0; fm < 2; ++fm) {
                CheckResult sub = rep.sl2IdentityOne(i, m, em != 0, fm != 0);
                if (!sub.pass) {
                    res.pass = false;
                    res.counterexample = "marks(" + std::string(em ? "J" : "1") + "," +
                                         (fm ? "J" : "1") + ") " + sub.counterexample;
                    return res;
                }
            }
        return res;
    }

    // each generator image is a nonzero operator (generic weight)
    std::vector<CheckResult> nontrivialityCheck() const {
        std::vector<CheckResult> out;
        auto witness = [&](const LieElement& g, const std::string& name) {
            CheckResult res{"nontriviality", name, false, ""};
            for (const TWord& w : testWords(cfg_.truncation - 1)) {
                TensorElement t{{w, Gauss(1)}};
                if (!actElem(g, t).empty()) {
                    res.pass = true;
                    res.counterexample = twordToString(w);
                    return res;
                }
            }
            return res;
        };
        for (int k = 1; k <= eng_.dim(); ++k) {
            out.push_back(witness(eng_.genH(k), "h" + std::to_string(k)));
            out.push_back(witness(eng_.genH(k, true), "Jh" + std::to_string(k)));
        }
        for (int i = 1; i <= eng_.n(); ++i) {
            out.push_back(witness(eng_.genE(i), "e" + std::to_string(i)));
            out.push_back(witness(eng_.genE(i, true), "Je" + std::to_string(i)));
            out.push_back(witness(eng_.genF(i), "f" + std::to_string(i)));
            out.push_back(witness(eng_.genF(i, true), "Jf" + std::to_string(i)));
        }
        return out;
    }

private:
    const Engine& eng_;
    RepConfig cfg_;

    void prependInto(TensorElement& dst, int letter, const TensorElement& src,
                     const Gauss& scale) const {
        for (const auto& [w, c] : src) {
            if (static_cast<int>(w.second.size()) + 1 > cfg_.truncation)
                throw TruncationOverflow("prepend: word length would exceed the truncation");
            tensorAdd(dst, TWord{w.first, std::string(1, static_cast<char>(letter)) + w.second},
                      c * scale);
        }
    }

    void applyWords(TensorElement& acc, const NcPoly& part, Sector sec,
                    const TensorElement& t) const {
        for (const auto& [word, c] : part) {
            TensorElement cur = t;
            for (size_t p = word.size(); p-- > 0;) {
                TensorElement next;
                int idx = letterIndex(word[p]);
                bool jm = letterJ(word[p]);
                for (const auto& [w, cw] : cur) {
                    TensorElement step = sec == Sector::Plus ? actE(idx, jm, w) : actF(idx, jm, w);
                    tensorAccumulate(next, step, cw);
                }
                cur = std::move(next);
                if (cur.empty()) break;
            }
            tensorAccumulate(acc, cur, c);
        }
    }

    // operator expressions: sum of scaled composition chains of element actions
    struct OpChain {
        Gauss coeff;
        std::vector<const LieElement*> seq;  // applied right to left
    };
    using OpExpr = std::vector<OpChain>;

    static OpExpr opOf(const LieElement* g) { return {OpChain{Gauss(1), {g}}}; }
    static OpExpr adOp(const LieElement* a, const OpExpr& x) {
        OpExpr r;
        for (const auto& ch : x) {
            OpChain left{ch.coeff, {}};
            left.seq.push_back(a);
            left.seq.insert(left.seq.end(), ch.seq.begin(), ch.seq.end());
            OpChain right{-ch.coeff, ch.seq};
            right.seq.push_back(a);
            r.push_back(std::move(left));
            r.push_back(std::move(right));
        }
        return r;
    }
    static OpExpr adPowOp(const LieElement* a, int m, OpExpr x) {
        for (int k = 0; k < m; ++k) x = adOp(a, x);
        return x;
    }
    static void scaleExpr(OpExpr& x, const Gauss& s) {
        for (auto& ch : x) ch.coeff *= s;
    }
    TensorElement evalExpr(const OpExpr& x, const TensorElement& t) const {
        TensorElement r;
        for (const auto& ch : x) {
            TensorElement cur = t;
            for (size_t p = ch.seq.size(); p-- > 0;) cur = actElem(*ch.seq[p], cur);
            tensorAccumulate(r, cur, ch.coeff);
        }
        return r;
    }

    CheckResult sl2IdentityOne(int i, int m, bool em, bool fm) const {
        CheckResult res{"sl2-identity", "", true, ""};
        LieElement E = eng_.genE(i, em), F = eng_.genF(i, fm);
        LieElement H = eng_.coroot(i), JH = eng_.coroot(i, true);
        LieElement fPlain = eng_.genF(i, false), fJ = eng_.genF(i, true);
        Gauss gm(m), gmm1(static_cast<long long>(m) * (m - 1));
        for (const LieElement& g : eng_.allGenerators()) {
            OpExpr X = opOf(&g);
            // LHS = adE((adF)^m X) - (adF)^m(adE X)
            OpExpr lhs = adOp(&E, adPowOp(&F, m, X));
            OpExpr tmp = adPowOp(&F, m, adOp(&E, X));
            scaleExpr(tmp, Gauss(-1));
            lhs.insert(lhs.end(), tmp.begin(), tmp.end());
            OpExpr rhs;
            if (!em && !fm) {
                rhs = adPowOp(&F, m - 1, adOp(&H, X));
                scaleExpr(rhs, gm);
                OpExpr t2 = adPowOp(&F, m - 1, X);
                scaleExpr(t2, -gmm1);
                rhs.insert(rhs.end(), t2.begin(), t2.end());
            } else if (em && fm) {
                rhs = adPowOp(&F, m - 1, adOp(&H, X));
                scaleExpr(rhs, -gm);
                OpExpr t2 = adPowOp(&F, m - 1, X);
                scaleExpr(t2, gmm1);
                rhs.insert(rhs.end(), t2.begin(), t2.end());
            } else {
                rhs = adPowOp(&F, m - 1, adOp(&JH, X));
                scaleExpr(rhs, gm);
                if (m >= 2) {
                    OpExpr t2 = adPowOp(&F, m - 2, adOp(!em && fm ? &fPlain : &fJ, X));
                    scaleExpr(t2, !em && fm ? gmm1 : -gmm1);
                    rhs.insert(rhs.end(), t2.begin(), t2.end());
                }
            }
            int maxLen = cfg_.truncation - (m + 2);
            for (const TWord& w : testWords(std::max(maxLen, 0))) {
                TensorElement t{{w, Gauss(1)}};
                if (evalExpr(lhs, t) != evalExpr(rhs, t)) {
                    res.pass = false;
                    res.counterexample = "generator image at " + twordToString(w);
                    return res;
                }
            }
        }
        return res;
    }
};

}  // namespace qkm

#endif
