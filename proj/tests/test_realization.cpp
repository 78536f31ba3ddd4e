#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qkm/cartan.hpp"
#include "testutil.hpp"

using namespace qkm;
using qkmtest::Rng;

namespace {

BigInt detCofactor(const IntMat& m) {
    size_t n = m.size();
    if (n == 0) return BigInt(1);
    if (n == 1) return BigInt(m[0][0]);
    BigInt acc(0);
    for (size_t c = 0; c < n; ++c) {
        IntMat minor(n - 1, std::vector<long long>(n - 1));
        for (size_t i = 1; i < n; ++i) {
            size_t jc = 0;
            for (size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor[i - 1][jc++] = m[i][j];
            }
        }
        BigInt term = BigInt(m[0][c]) * detCofactor(minor);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

TEST_CASE("GCM validation") {
    CHECK(validateGcm({{2}}).ok);
    CHECK(validateGcm({{2, -1}, {-1, 2}}).ok);
    auto bad = validateGcm({{2, -1}, {0, 2}});
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.violations.size() == 1);
    CHECK(bad.violations[0].kind == Violation::AsymmetricZero);
    CHECK(bad.violations[0].i == 2);
    CHECK(bad.violations[0].j == 1);

    auto bad2 = validateGcm({{1, 1}, {-1, 2}});
    CHECK_FALSE(bad2.ok);
    bool sawDiag = false, sawPos = false;
    for (const auto& v : bad2.violations) {
        if (v.kind == Violation::DiagonalNotTwo) sawDiag = true;
        if (v.kind == Violation::PositiveOffDiagonal) sawPos = true;
    }
    CHECK(sawDiag);
    CHECK(sawPos);
}

TEST_CASE("principal block permutation") {
    auto bp = principalBlockPermute({{2, -1}, {-1, 2}});
    CHECK(bp.r == 2);
    CHECK(bp.rowPerm == std::vector<int>{0, 1});

    auto affine = principalBlockPermute({{2, -2}, {-2, 2}});
    CHECK(affine.r == 1);
    CHECK(affine.rowPerm == std::vector<int>{0, 1});  // leading 1x1 block [2] already works

    auto zero = principalBlockPermute({{0}});
    CHECK(zero.r == 0);
}

TEST_CASE("extend: worked examples") {
    {
        auto bp = principalBlockPermute({{2, -2}, {-2, 2}});
        IntMat e = extend(applyPermutation({{2, -2}, {-2, 2}}, bp), bp.r);
        IntMat expect = {{2, -2, 0}, {-2, 2, 1}, {0, 1, 0}};
        CHECK(e == expect);
        CHECK(detBareiss(e) == BigInt(-2));
    }
    {
        IntMat e = extend({{2}}, 1);
        CHECK(e == IntMat{{2}});
        CHECK(detBareiss(e) == BigInt(2));
    }
    {
        IntMat e = extend({{0}}, 0);
        CHECK(e == IntMat{{0, 1}, {1, 0}});
        CHECK(detBareiss(e) == BigInt(-1));
    }
    CHECK_THROWS_AS(extend({{2, -2}, {-2, 2}}, 2), SingularBlock);
}

TEST_CASE("det E = +/- det A(r) for 200 random integer matrices") {
    Rng rng(211);
    int done = 0;
    while (done < 200) {
        int n = static_cast<int>(rng.intIn(1, 6));
        IntMat a(n, std::vector<long long>(n));
        for (auto& row : a)
            for (auto& x : row) x = rng.intIn(-3, 3);
        auto bp = principalBlockPermute(a);
        IntMat ap = applyPermutation(a, bp);
        IntMat e = extend(ap, bp.r);
        std::vector<int> lead(bp.r);
        for (int i = 0; i < bp.r; ++i) lead[i] = i;
        IntMat block(bp.r, std::vector<long long>(bp.r));
        for (int i = 0; i < bp.r; ++i)
            for (int j = 0; j < bp.r; ++j) block[i][j] = ap[i][j];
        BigInt da = detCofactor(block);
        BigInt de = detCofactor(e);
        CHECK((de == da || de == -da));
        CHECK_FALSE(de.isZero());
        ++done;
    }
}

TEST_CASE("realization: coroots, dimension, pairing") {
    {
        auto re = realize(validateGcm({{2, -2}, {-2, 2}}).matrix);
        CHECK(re.dim == 3);
        // alpha_1^v = (2,-2,0), alpha_2^v = (-2,2,1) as rows of E
        CHECK(re.e[re.corootRow(1)] == std::vector<long long>{2, -2, 0});
        CHECK(re.e[re.corootRow(2)] == std::vector<long long>{-2, 2, 1});
    }
    {
        auto re = realize(validateGcm({{2}}).matrix);
        CHECK(re.dim == 1);  // 2n - r = 1
    }
    // <alpha_i, alpha_j^v> = A_ji for every valid GCM tested
    std::vector<IntMat> gcms = {
        {{2}}, {{2, -1}, {-1, 2}}, {{2, -2}, {-2, 2}}, {{2, -1}, {-2, 2}},
        {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}};
    for (const auto& a : gcms) {
        auto re = realize(validateGcm(a).matrix);
        int n = re.n;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                CHECK(re.pairAH(i, re.corootRow(j)) == Rational(a[j - 1][i - 1]));
    }
}

TEST_CASE("pairing marker table") {
    auto a2 = realize(validateGcm({{2, -1}, {-1, 2}}).matrix);
    CHECK(pairValue(a2, 1, Marker::One, 2, Marker::One) == Quat(Gauss(Rational(-1))));
    auto aff = realize(validateGcm({{2, -2}, {-2, 2}}).matrix);
    CHECK(pairValue(aff, 1, Marker::J, 1, Marker::J) == Quat(Gauss(Rational(-2))));
    // <J alpha_i, alpha_j^v> = J A_ji when B0 = A
    CHECK(pairValue(a2, 1, Marker::J, 2, Marker::One) ==
          Quat(Gauss(0), Gauss(Rational(-1))));
    CHECK(pairValue(a2, 2, Marker::One, 1, Marker::J) ==
          Quat(Gauss(0), Gauss(Rational(-1))));
    // bilinearity in integer combinations: pair(i, j) over a sum of coroot rows
    auto re = realize(validateGcm({{2, -1}, {-2, 2}}).matrix);
    for (int i = 1; i <= 2; ++i) {
        Rational sum(0);
        for (int j = 1; j <= 2; ++j) sum += re.pairAH(i, re.corootRow(j));
        Rational direct(0);
        for (int j = 1; j <= 2; ++j) direct += Rational(re.a[j - 1][i - 1]);
        CHECK(sum == direct);
    }
}

TEST_CASE("B0 override: rank mismatch is rejected") {
    auto gcm = validateGcm({{2, -2}, {-2, 2}}).matrix;  // rank 1
    CHECK_THROWS_AS(realize(gcm, IntMat{{2, -1}, {-1, 2}}), RankMismatch);
    auto re = realize(gcm, IntMat{{1, -1}, {-1, 1}});  // rank 1, accepted
    CHECK(re.b0 == IntMat{{1, -1}, {-1, 1}});
}

TEST_CASE("first n rows of E are linearly independent") {
    Rng rng(97);
    for (int t = 0; t < 50; ++t) {
        int n = static_cast<int>(rng.intIn(1, 5));
        IntMat a(n, std::vector<long long>(n));
        for (auto& row : a)
            for (auto& x : row) x = rng.intIn(-3, 3);
        auto bp = principalBlockPermute(a);
        IntMat e = extend(applyPermutation(a, bp), bp.r);
        IntMat firstN(a.size());
        for (int i = 0; i < n; ++i) firstN[i] = e[i];
        CHECK(rankInt(firstN) == n);
    }
}
