#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qkm/engine.hpp"
#include "testutil.hpp"

using namespace qkm;
using qkmtest::Rng;

namespace {

Engine makeEngine(const IntMat& a) {
    auto v = validateGcm(a);
    REQUIRE(v.ok);
    return Engine(realize(v.matrix));
}

const std::vector<IntMat> kTestGcms = {
    {{2}}, {{2, -1}, {-1, 2}}, {{2, -2}, {-2, 2}}, {{2, -1}, {-2, 2}}};

// All 13 cleaned relations for one engine, exact equality.
void checkRelationTable(const Engine& eng) {
    int n = eng.n(), d = eng.dim();
    for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l)
            for (bool jk : {false, true})
                for (bool jl : {false, true})
                    CHECK(eng.bracket(eng.genH(k, jk), eng.genH(l, jl)).isZero());
    for (int k = 1; k <= d; ++k)
        for (int i = 1; i <= n; ++i) {
            Gauss p(eng.pairAH(i, k - 1));
            CHECK(eng.bracket(eng.genH(k), eng.genE(i)) == p * eng.genE(i));
            CHECK(eng.bracket(eng.genH(k, true), eng.genE(i)) == p * eng.genE(i, true));
            CHECK(eng.bracket(eng.genH(k), eng.genE(i, true)) == p * eng.genE(i, true));
            CHECK(eng.bracket(eng.genH(k, true), eng.genE(i, true)) == -(p * eng.genE(i)));
            CHECK(eng.bracket(eng.genH(k), eng.genF(i)) == -(p * eng.genF(i)));
            CHECK(eng.bracket(eng.genH(k, true), eng.genF(i)) == -(p * eng.genF(i, true)));
            CHECK(eng.bracket(eng.genH(k), eng.genF(i, true)) == -(p * eng.genF(i, true)));
            CHECK(eng.bracket(eng.genH(k, true), eng.genF(i, true)) == p * eng.genF(i));
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            LieElement hv = eng.coroot(i), jhv = eng.coroot(i, true), zero;
            CHECK(eng.bracket(eng.genE(i), eng.genF(j)) == (i == j ? hv : zero));
            CHECK(eng.bracket(eng.genE(i, true), eng.genF(j)) == (i == j ? jhv : zero));
            CHECK(eng.bracket(eng.genE(i), eng.genF(j, true)) == (i == j ? jhv : zero));
            CHECK(eng.bracket(eng.genE(i, true), eng.genF(j, true)) == (i == j ? -hv : zero));
        }
}

}  // namespace

TEST_CASE("relation table conformance on the four test GCMs") {
    for (const auto& a : kTestGcms) checkRelationTable(makeEngine(a));
}

TEST_CASE("sl(2,H) pattern for each index") {
    for (const auto& a : kTestGcms) {
        Engine eng = makeEngine(a);
        for (int i = 1; i <= eng.n(); ++i) {
            Gauss two(2);
            auto e = eng.genE(i), je = eng.genE(i, true);
            auto f = eng.genF(i), jf = eng.genF(i, true);
            auto h = eng.coroot(i), jh = eng.coroot(i, true);
            CHECK(eng.bracket(h, e) == two * e);
            CHECK(eng.bracket(h, je) == two * je);
            CHECK(eng.bracket(jh, e) == two * je);
            CHECK(eng.bracket(jh, je) == -(two * e));
            CHECK(eng.bracket(h, f) == -(two * f));
            CHECK(eng.bracket(h, jf) == -(two * jf));
            CHECK(eng.bracket(jh, f) == -(two * jf));
            CHECK(eng.bracket(jh, jf) == two * f);
            CHECK(eng.bracket(e, f) == h);
            CHECK(eng.bracket(je, f) == jh);
            CHECK(eng.bracket(e, jf) == jh);
            CHECK(eng.bracket(je, jf) == -h);
        }
    }
}

TEST_CASE("degrees") {
    Engine eng = makeEngine({{2, -1}, {-1, 2}});
    auto x = eng.bracket(eng.genE(1), eng.bracket(eng.genE(1), eng.genE(2)));
    auto d = degreeOf(x, 2);
    REQUIRE(d.has_value());
    CHECK(*d == RootVector{2, 1});
    CHECK(degreeOf(eng.coroot(1, true), 2) == RootVector{0, 0});
    CHECK_FALSE(degreeOf(eng.genE(1) + eng.genF(1), 2).has_value());  // Mixed
}

TEST_CASE("bracket worked examples") {
    Engine a1 = makeEngine({{2}});
    // [f1, [e1, Je1]] = 0
    CHECK(a1.bracket(a1.genF(1), a1.bracket(a1.genE(1), a1.genE(1, true))).isZero());
    // [Jf1, [e1, Je1]] = 0
    CHECK(a1.bracket(a1.genF(1, true), a1.bracket(a1.genE(1), a1.genE(1, true))).isZero());
    // ad_power(hv1, 3, e1) = 8 e1
    CHECK(a1.adPower(a1.coroot(1), 3, a1.genE(1)) == Gauss(8) * a1.genE(1));
    // [e1, e1] = 0
    CHECK(a1.bracket(a1.genE(1), a1.genE(1)).isZero());

    Engine a2 = makeEngine({{2, -1}, {-1, 2}});
    // [h, [e1,e2]] = <alpha_1 + alpha_2, h> [e1,e2]
    auto w = a2.bracket(a2.genE(1), a2.genE(2));
    for (int k = 1; k <= 2; ++k) {
        Gauss eig(a2.pairAH(1, k - 1) + a2.pairAH(2, k - 1));
        CHECK(a2.bracket(a2.genH(k), w) == eig * w);
    }
    // ad_power(f1, 2, f2): nonzero of degree (-2,-1)
    auto y = a2.adPower(a2.genF(1), 2, a2.genF(2));
    CHECK_FALSE(y.isZero());
    CHECK(degreeOf(y, 2) == RootVector{-2, -1});
}

TEST_CASE("serre elements") {
    Engine a2 = makeEngine({{2, -1}, {-1, 2}});
    // (ad e1)^2 (e2), exponent 1 - A_12 = 2
    auto x = a2.serrePlus(2, 1, false, false);
    CHECK(x == a2.bracket(a2.genE(1), a2.bracket(a2.genE(1), a2.genE(2))));
    auto xj = a2.serrePlus(2, 1, true, false);
    CHECK(xj == a2.bracket(a2.genE(1, true), a2.bracket(a2.genE(1, true), a2.genE(2))));
    CHECK_THROWS_AS(a2.serrePlus(1, 1, false, false), SameIndex);

    Engine diag = makeEngine({{2, 0}, {0, 2}});
    CHECK(diag.serrePlus(1, 2, false, false) == diag.bracket(diag.genE(2), diag.genE(1)));
}

TEST_CASE("graded free basis") {
    Engine a2 = makeEngine({{2, -1}, {-1, 2}});
    CHECK(a2.gradedBasisFree({1, 1}, Sector::Plus).size() == 4);
    CHECK(a2.gradedBasisFree({1, 0}, Sector::Plus).size() == 2);
    CHECK(a2.gradedBasisFree({-1, -1}, Sector::Minus).size() == 4);
    CHECK_THROWS_AS(a2.gradedBasisFree({1, -1}, Sector::Plus), BadSign);
    CHECK_THROWS_AS(a2.gradedBasisFree({0, 0}, Sector::Plus), BadSign);
    Engine a1 = makeEngine({{2}});
    auto b2 = a1.gradedBasisFree({2}, Sector::Plus);
    REQUIRE(b2.size() == 1);
    CHECK(a1.basisElement(Sector::Plus, b2[0]) ==
          a1.bracket(a1.genE(1), a1.genE(1, true)));
}

TEST_CASE("jacobi, alternating, grading additivity on random homogeneous elements") {
    Rng rng(1234);
    for (const auto& a : kTestGcms) {
        if (a.size() > 3) continue;
        Engine eng = makeEngine(a);
        int trials = 60;
        for (int t = 0; t < trials; ++t) {
            LieElement x = qkmtest::randHomogeneous(eng, rng, 3);
            LieElement y = qkmtest::randHomogeneous(eng, rng, 3);
            LieElement z = qkmtest::randHomogeneous(eng, rng, 3);
            LieElement jac = eng.bracket(x, eng.bracket(y, z)) +
                             eng.bracket(y, eng.bracket(z, x)) +
                             eng.bracket(z, eng.bracket(x, y));
            CHECK(jac.isZero());
            CHECK(eng.bracket(x, x).isZero());
            auto dx = degreeOf(x, eng.n()), dy = degreeOf(y, eng.n());
            LieElement b = eng.bracket(x, y);
            if (dx && dy && !b.isZero()) {
                RootVector sum(eng.n());
                for (int i = 0; i < eng.n(); ++i) sum[i] = (*dx)[i] + (*dy)[i];
                CHECK(degreeOf(b, eng.n()) == sum);
            }
        }
    }
}

TEST_CASE("C-bilinearity in the i direction") {
    Engine a2 = makeEngine({{2, -1}, {-1, 2}});
    Gauss i = Gauss::i();
    auto e1 = a2.genE(1), f1 = a2.genF(1), f2 = a2.genF(2);
    CHECK(a2.bracket(i * e1, f1) == i * a2.bracket(e1, f1));
    CHECK(a2.bracket(e1, i * f1) == i * a2.bracket(e1, f1));
    auto x = a2.bracket(e1, a2.genE(2));
    CHECK(a2.bracket(i * x, f2) == i * a2.bracket(x, f2));
}

TEST_CASE("unsupported marker pairs across sectors") {
    Engine a2 = makeEngine({{2, -1}, {-1, 2}});
    Gauss i = Gauss::i();
    CHECK_THROWS_AS(a2.bracket(i * a2.genE(1), a2.genF(1, true)), UnsupportedMarkerPair);
    CHECK_THROWS_AS(a2.bracket(a2.genE(1, true), i * a2.genF(1)), UnsupportedMarkerPair);
    // same-sector and J-free cross pairs stay defined
    CHECK_NOTHROW(a2.bracket(i * a2.genE(1), a2.genE(1, true)));
    CHECK_NOTHROW(a2.bracket(i * a2.genE(1), a2.genF(1)));
    // (Ji,Ji) pairs commute and go through
    CHECK_NOTHROW(a2.bracket(i * a2.genE(1, true), i * a2.genF(1, true)));
}

TEST_CASE("triangular closure: parts reassemble exactly") {
    Engine eng = makeEngine({{2, -1}, {-2, 2}});
    Rng rng(77);
    for (int t = 0; t < 40; ++t) {
        LieElement x = qkmtest::randHomogeneous(eng, rng, 3);
        LieElement y = qkmtest::randHomogeneous(eng, rng, 3);
        LieElement b = eng.bracket(x, y);
        // each nilpotent part is a Lie element: Lyndon coordinates rebuild it
        for (Sector sec : {Sector::Plus, Sector::Minus}) {
            const NcPoly& part = sec == Sector::Plus ? b.plus : b.minus;
            if (part.empty()) continue;
            LieElement rebuilt;
            for (const auto& [w, c] : eng.lyndonCoords(part))
                rebuilt += c * eng.basisElement(sec, w);
            const NcPoly& got = sec == Sector::Plus ? rebuilt.plus : rebuilt.minus;
            CHECK(got == part);
        }
    }
}
