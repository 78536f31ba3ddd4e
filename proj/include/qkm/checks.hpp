// Aggregated verification suites over the engine and the representation,
// shared by the CLI front end and the acceptance harness.
#ifndef QKM_CHECKS_HPP
#define QKM_CHECKS_HPP

#include <cstdint>

#include "qkm/quotients.hpp"

namespace qkm {

// splitmix64; fixed seeds give identical streams on every platform
class SplitMix {
public:
    explicit SplitMix(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t bound) { return next() % bound; }
    long long intIn(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

private:
    uint64_t state_;
};

inline LieElement randomHomogeneous(const Engine& eng, SplitMix& rng, int maxHt) {
    int n = eng.n();
    int kind = static_cast<int>(rng.below(8));
    LieElement x;
    if (kind == 3 || kind == 4) {
        int terms = 1 + static_cast<int>(rng.below(2));
        for (int t = 0; t < terms; ++t) {
            int k = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(eng.dim())));
            x += Gauss(Rational(rng.intIn(-3, 3), rng.intIn(1, 3))) * eng.genH(k, rng.below(2) != 0);
        }
        return x;
    }
    Sector sec = kind < 3 ? Sector::Minus : Sector::Plus;
    int ht = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(maxHt)));
    RootVector content(n, 0);
    for (int s = 0; s < ht; ++s) ++content[rng.below(static_cast<uint64_t>(n))];
    RootVector alpha = content;
    if (sec == Sector::Minus)
        for (int& v : alpha) v = -v;
    auto words = eng.gradedBasisFree(alpha, sec);
    int terms = 1 + static_cast<int>(rng.below(2));
    for (int t = 0; t < terms; ++t) {
        const Word& w = words[rng.below(words.size())];
        Rational c(rng.intIn(-4, 4), rng.intIn(1, 3));
        if (c.isZero()) c = Rational(1);
        x += Gauss(c) * eng.basisElement(sec, w);
    }
    return x;
}

// the 13 cleaned generator relations, exact, every pair and marker choice
inline std::vector<CheckResult> relationTableCheck(const Engine& eng) {
    std::vector<CheckResult> out;
    int n = eng.n(), d = eng.dim();
    auto expect = [&](const LieElement& got, const LieElement& want, const std::string& name) {
        CheckResult res{"relation-table", name, got == want, ""};
        if (!res.pass) res.counterexample = "got " + eng.toString(got);
        out.push_back(res);
    };
    for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l)
            for (bool jk : {false, true})
                for (bool jl : {false, true})
                    expect(eng.bracket(eng.genH(k, jk), eng.genH(l, jl)), LieElement{},
                           "[h,h'] family");
    for (int k = 1; k <= d; ++k)
        for (int i = 1; i <= n; ++i) {
            Gauss p(eng.pairAH(i, k - 1));
            std::string hk = "h" + std::to_string(k) + ",";
            std::string gi = std::to_string(i);
            expect(eng.bracket(eng.genH(k), eng.genE(i)), p * eng.genE(i), "[" + hk + "e" + gi + "]");
            expect(eng.bracket(eng.genH(k, true), eng.genE(i)), p * eng.genE(i, true),
                   "[J" + hk + "e" + gi + "]");
            expect(eng.bracket(eng.genH(k), eng.genE(i, true)), p * eng.genE(i, true),
                   "[" + hk + "Je" + gi + "]");
            expect(eng.bracket(eng.genH(k, true), eng.genE(i, true)), -(p * eng.genE(i)),
                   "[J" + hk + "Je" + gi + "]");
            expect(eng.bracket(eng.genH(k), eng.genF(i)), -(p * eng.genF(i)), "[" + hk + "f" + gi + "]");
            expect(eng.bracket(eng.genH(k, true), eng.genF(i)), -(p * eng.genF(i, true)),
                   "[J" + hk + "f" + gi + "]");
            expect(eng.bracket(eng.genH(k), eng.genF(i, true)), -(p * eng.genF(i, true)),
                   "[" + hk + "Jf" + gi + "]");
            expect(eng.bracket(eng.genH(k, true), eng.genF(i, true)), p * eng.genF(i),
                   "[J" + hk + "Jf" + gi + "]");
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            LieElement zero;
            LieElement hv = i == j ? eng.coroot(i) : zero;
            LieElement jhv = i == j ? eng.coroot(i, true) : zero;
            std::string ij = std::to_string(i) + ",f" + std::to_string(j);
            expect(eng.bracket(eng.genE(i), eng.genF(j)), hv, "[e" + ij + "]");
            expect(eng.bracket(eng.genE(i, true), eng.genF(j)), jhv, "[Je" + ij + "]");
            expect(eng.bracket(eng.genE(i), eng.genF(j, true)), jhv, "[e" + ij + " J]");
            expect(eng.bracket(eng.genE(i, true), eng.genF(j, true)), -hv, "[Je" + ij + " J]");
        }
    return out;
}

inline CheckResult jacobiCheck(const Engine& eng, int trials, int maxHt, uint64_t seed) {
    SplitMix rng(seed);
    CheckResult res{"jacobi", std::to_string(trials) + " random homogeneous triples", true, ""};
    for (int t = 0; t < trials; ++t) {
        LieElement x = randomHomogeneous(eng, rng, maxHt);
        LieElement y = randomHomogeneous(eng, rng, maxHt);
        LieElement z = randomHomogeneous(eng, rng, maxHt);
        LieElement jac = eng.bracket(x, eng.bracket(y, z)) + eng.bracket(y, eng.bracket(z, x)) +
                         eng.bracket(z, eng.bracket(x, y));
        if (!jac.isZero()) {
            res.pass = false;
            res.counterexample = "triple #" + std::to_string(t) + ": x=" + eng.toString(x) +
                                 " y=" + eng.toString(y) + " z=" + eng.toString(z);
            return res;
        }
        if (!eng.bracket(x, x).isZero()) {
            res.pass = false;
            res.counterexample = "[x,x] != 0 at triple #" + std::to_string(t);
            return res;
        }
    }
    return res;
}

inline std::vector<CheckResult> homomorphismCheck(const Engine& eng, const Rep& rep) {
    std::vector<CheckResult> out;
    auto gens = eng.allGenerators();
    for (size_t a = 0; a < gens.size(); ++a)
        for (size_t b = a; b < gens.size(); ++b) {
            CheckResult res = rep.commutatorCheck(
                gens[a], gens[b],
                eng.toString(gens[a]) + " , " + eng.toString(gens[b]));
            out.push_back(res);
        }
    return out;
}

inline std::string degreeName(const RootVector& alpha) {
    std::string s;
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(alpha[i]);
    }
    return s;
}

inline std::vector<CheckResult> quotientChecks(Quotients& quot) {
    std::vector<CheckResult> out;
    auto table = quot.multiplicities();
    CheckResult mono{"monotonicity", "dimR <= dimS <= dimU per degree", true, ""};
    for (const auto& r : table.rows) {
        if (!(r.dimReduced <= r.dimStandard && r.dimStandard <= r.dimUniversal)) {
            mono.pass = false;
            mono.counterexample = "degree (" + degreeName(r.alpha) + ")";
            break;
        }
    }
    out.push_back(mono);
    for (auto& r : quot.serreInRadicalCheck()) out.push_back(r);
    CheckResult mirror{"mirror-symmetry", "e<->f swap maps spans degree-for-degree", true, ""};
    if (!quot.mirrorSymmetric(false) || !quot.mirrorSymmetric(true)) mirror.pass = false;
    out.push_back(mirror);
    CheckResult kfree{"serre-avoids-cartan", "K cap H = 0 during saturation", true, ""};
    if (!quot.serreViolations().empty()) {
        kfree.pass = false;
        kfree.counterexample = quot.serreViolations().front();
    }
    out.push_back(kfree);
    return out;
}

}  // namespace qkm

#endif
