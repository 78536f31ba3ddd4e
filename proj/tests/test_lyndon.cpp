#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "qkm/lyndon.hpp"
#include "testutil.hpp"

using namespace qkm;
using qkmtest::Rng;

namespace {

// moebius function for the Witt-formula oracle
int moebius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

long long wittTotal(int letters, int k) {
    long long acc = 0;
    for (int d = 1; d <= k; ++d) {
        if (k % d) continue;
        long long pw = 1;
        for (int t = 0; t < k / d; ++t) pw *= letters;
        acc += moebius(d) * pw;
    }
    return acc / k;
}

long long multinomial(int k, const RootVector& parts) {
    long long r = 1;
    int used = 0;
    for (int p : parts)
        for (int t = 1; t <= p; ++t) r = r * (++used) / t;
    (void)k;
    return r;
}

// multivariate Witt count on pairs of letters: content alpha, 2 markers per index
long long wittOfContent(const RootVector& alpha) {
    int k = heightOf(alpha);
    int g = 0;
    for (int v : alpha) g = std::gcd(g, v);
    long long acc = 0;
    for (int d = 1; d <= g; ++d) {
        if (g % d) continue;
        RootVector parts;
        for (int v : alpha) parts.push_back(v / d);
        long long pw = 1;
        for (int t = 0; t < k / d; ++t) pw *= 2;
        acc += moebius(d) * multinomial(k / d, parts) * pw;
    }
    return acc / k;
}

}  // namespace

TEST_CASE("lyndon recognition and factorization") {
    Word ab = {makeLetter(1, false), makeLetter(1, true)};
    CHECK(isLyndon(ab));
    Word ba = {makeLetter(1, true), makeLetter(1, false)};
    CHECK_FALSE(isLyndon(ba));
    Word aa = {makeLetter(1, false), makeLetter(1, false)};
    CHECK_FALSE(isLyndon(aa));
    Word aab = {ab[0], ab[0], ab[1]};
    CHECK(isLyndon(aab));
    auto [u, v] = standardFactorization(aab);
    CHECK(u == Word{ab[0]});
    CHECK(v == Word{ab[0], ab[1]});
}

TEST_CASE("expansion is triangular with unit leading coefficient") {
    ExpandCache cache;
    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        int n = static_cast<int>(rng.intIn(1, 3));
        int len = static_cast<int>(rng.intIn(1, 6));
        Word w;
        for (int p = 0; p < len; ++p)
            w.push_back(makeLetter(static_cast<int>(rng.intIn(1, n)), rng.below(2)));
        if (!isLyndon(w)) continue;
        NcPoly e = cache.expand(w);
        REQUIRE(!e.empty());
        CHECK(e.begin()->first == w);
        CHECK(e.begin()->second == Gauss(1));
    }
}

TEST_CASE("lyndon coordinates invert expansion") {
    ExpandCache cache;
    RootVector content = {2, 1};
    auto words = lyndonWordsOfContent(content);
    for (const auto& w : words) {
        auto coords = lyndonCoordinates(cache.expand(w), cache);
        REQUIRE(coords.size() == 1);
        CHECK(coords.begin()->first == w);
        CHECK(coords.begin()->second == Gauss(1));
    }
    // a combination round-trips too
    NcPoly p;
    Gauss c(Rational(3, 2), Rational(-1, 3));
    int idx = 0;
    for (const auto& w : words) {
        ncAccumulate(p, cache.expand(w), c + Gauss(idx));
        ++idx;
    }
    auto coords = lyndonCoordinates(p, cache);
    CHECK(coords.size() == words.size());
    idx = 0;
    for (const auto& w : words) CHECK(coords.at(w) == c + Gauss(idx++));
}

TEST_CASE("free graded dimensions match the Witt formula, n <= 2, ht <= 5") {
    for (int n = 1; n <= 2; ++n) {
        for (int k = 1; k <= 5; ++k) {
            // per-degree multivariate count and per-height total
            long long total = 0;
            RootVector alpha(n, 0);
            auto rec = [&](auto&& self, int pos, int left) -> void {
                if (pos == n) {
                    if (left == 0 && heightOf(alpha) == k) {
                        long long dim =
                            static_cast<long long>(lyndonWordsOfContent(alpha).size());
                        CHECK(dim == wittOfContent(alpha));
                        total += dim;
                    }
                    return;
                }
                for (int v = 0; v <= left; ++v) {
                    alpha[pos] = v;
                    self(self, pos + 1, left - v);
                    alpha[pos] = 0;
                }
            };
            rec(rec, 0, k);
            CHECK(total == wittTotal(2 * n, k));
        }
    }
}

TEST_CASE("specific Hall bases from the construction") {
    // n=1, degree 2alpha: only [e1, Je1]
    auto w2 = lyndonWordsOfContent({2});
    REQUIRE(w2.size() == 1);
    CHECK(w2[0] == Word{makeLetter(1, false), makeLetter(1, true)});
    // n=2, alpha_1 + alpha_2: four words
    auto w11 = lyndonWordsOfContent({1, 1});
    CHECK(w11.size() == 4);
    // single letters
    auto w1 = lyndonWordsOfContent({1});
    CHECK(w1.size() == 2);
}
