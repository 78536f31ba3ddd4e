#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qkm/parser.hpp"
#include "testutil.hpp"

using namespace qkm;
using qkmtest::Rng;

namespace {
Engine makeEngine(const IntMat& a) {
    auto v = validateGcm(a);
    REQUIRE(v.ok);
    return Engine(realize(v.matrix));
}
}  // namespace

TEST_CASE("atoms and brackets evaluate through the engine") {
    Engine a2 = makeEngine({{2, -1}, {-1, 2}});
    CHECK(parseElement(a2, "e1") == a2.genE(1));
    CHECK(parseElement(a2, "Jf2") == a2.genF(2, true));
    CHECK(parseElement(a2, "hv1") == a2.coroot(1));
    CHECK(parseElement(a2, "Jhv2") == a2.coroot(2, true));
    CHECK(parseElement(a2, "h2") == a2.genH(2));
    CHECK(parseElement(a2, "3/2*e1") == Gauss(Rational(3, 2)) * a2.genE(1));
    CHECK(parseElement(a2, "i*e1") == Gauss::i() * a2.genE(1));
    CHECK(parseElement(a2, "-e1") == -a2.genE(1));
    CHECK(parseElement(a2, "[e1,f1]") == a2.coroot(1));
    CHECK(parseElement(a2, "[Je1,Jf1]") == -a2.coroot(1));
    CHECK(parseElement(a2, "e1 + Je1 - 2*f2") ==
          a2.genE(1) + a2.genE(1, true) - Gauss(2) * a2.genF(2));
    CHECK(parseElement(a2, "[e1,[Je1,f2]]") ==
          a2.bracket(a2.genE(1), a2.bracket(a2.genE(1, true), a2.genF(2))));
}

TEST_CASE("parse errors carry positions") {
    Engine a2 = makeEngine({{2, -1}, {-1, 2}});
    CHECK_THROWS_AS(parseElement(a2, "e3"), ParseError);
    CHECK_THROWS_AS(parseElement(a2, "[e1,f1"), ParseError);
    CHECK_THROWS_AS(parseElement(a2, "e1 e2"), ParseError);
    CHECK_THROWS_AS(parseElement(a2, "e1*e2"), ParseError);
    CHECK_THROWS_AS(parseElement(a2, "3/2"), ParseError);
    CHECK_THROWS_AS(parseElement(a2, "q1"), ParseError);
    CHECK_THROWS_AS(parseElement(a2, "h9"), ParseError);
    try {
        parseElement(a2, "[e1,,f1]");
    } catch (const ParseError& e) {
        CHECK(e.position > 0);
    }
}

TEST_CASE("print/parse round trip") {
    Engine a2 = makeEngine({{2, -1}, {-1, 2}});
    Engine aff = makeEngine({{2, -2}, {-2, 2}});
    Rng rng(4242);
    for (Engine* eng : {&a2, &aff}) {
        for (int t = 0; t < 60; ++t) {
            LieElement x = qkmtest::randHomogeneous(*eng, rng, 3);
            if (rng.below(3) == 0) x += qkmtest::randHomogeneous(*eng, rng, 2);
            std::string printed = eng->toString(x);
            LieElement back = parseElement(*eng, printed == "0" ? "0*e1" : printed);
            CHECK(back == x);
        }
    }
    // worked example: [Je1, Jf1] prints as -1*hv1
    CHECK(a2.toString(a2.bracket(a2.genE(1, true), a2.genF(1, true))) == "-1*hv1");
    CHECK(a2.toString(LieElement{}) == "0");
}

TEST_CASE("printing uses deterministic term order") {
    Engine a2 = makeEngine({{2, -1}, {-1, 2}});
    LieElement x = a2.genE(1) + a2.genF(2) + a2.coroot(1, true);
    std::string s = a2.toString(x);
    CHECK(s == "f2 + Jhv1 + e1");
    LieElement y = Gauss(Rational(1, 2)) * a2.genE(2, true) + Gauss::i() * a2.genE(2);
    CHECK(a2.toString(y) == "i*e2 + 1/2*Je2");
}
