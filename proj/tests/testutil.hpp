// Shared test helpers: deterministic RNG and random exact scalars.
#ifndef QKM_TESTUTIL_HPP
#define QKM_TESTUTIL_HPP

#include <cstdint>

#include "qkm/engine.hpp"

namespace qkmtest {

// splitmix64: portable deterministic stream for property tests
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, bound)
    uint64_t below(uint64_t bound) { return next() % bound; }
    long long intIn(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

private:
    uint64_t state_;
};

inline qkm::Rational randRational(Rng& rng, long long span = 20) {
    long long num = rng.intIn(-span, span);
    long long den = rng.intIn(1, 8);
    return qkm::Rational(num, den);
}

inline qkm::Gauss randGauss(Rng& rng, long long span = 20) {
    return qkm::Gauss(randRational(rng, span), randRational(rng, span));
}

// Random homogeneous element: a rational combination of Hall words of one
// degree in one sector (or a Cartan combination). Heights drawn from 1..maxHt.
inline qkm::LieElement randHomogeneous(const qkm::Engine& eng, Rng& rng, int maxHt) {
    using namespace qkm;
    int n = eng.n();
    int kind = static_cast<int>(rng.below(8));  // 0..2 minus, 3..4 cartan, 5..7 plus
    LieElement x;
    if (kind == 3 || kind == 4) {
        int terms = 1 + static_cast<int>(rng.below(2));
        for (int t = 0; t < terms; ++t) {
            int k = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(eng.dim())));
            x += Gauss(randRational(rng, 3)) * eng.genH(k, rng.below(2) != 0);
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
    if (words.empty()) return x;
    int terms = 1 + static_cast<int>(rng.below(2));
    for (int t = 0; t < terms; ++t) {
        const Word& w = words[rng.below(words.size())];
        Rational c = randRational(rng, 3);
        if (c.isZero()) c = Rational(1);
        x += Gauss(c) * eng.basisElement(sec, w);
    }
    return x;
}

}  // namespace qkmtest

#endif
