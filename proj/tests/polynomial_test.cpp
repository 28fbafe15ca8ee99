/*
   Copyright 2026 the geiser authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "geiser/parser.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace geiser;

namespace {
constexpr int N = 12;
MultiPoly P(const std::string& s) { return parse_poly(s, N); }
} // namespace

TEST(MultiPoly, RingBasics) {
    EXPECT_EQ(P("(x+y)*(x-y)"), P("x^2-y^2"));
    EXPECT_EQ(P("x^3-y^2").derive(Var::x), P("3*x^2"));
    EXPECT_EQ(P("t*(x*t+y)").substitute(Var::t, CycNumber::zero(N)), MultiPoly::zero(N));
    EXPECT_EQ(P("x+1").pow(2), P("x^2+2*x+1"));
}

TEST(MultiPoly, GrlexOrderAndPrinting) {
    // Leading term compares total degree first, then t, z, y, x.
    EXPECT_EQ(P("x^2 + y^2").leading_monomial()[Var::y], 2u);
    EXPECT_EQ(P("x^3 + y*z^2").leading_monomial()[Var::z], 2u);
    EXPECT_EQ(P("x^2-y^2").to_string(), "-y^2 + x^2");
    EXPECT_EQ(P("3*x^2*y - 2/3*x + j*z").to_string(), "3*x^2*y + j*z - 2/3*x");
    EXPECT_EQ(MultiPoly::zero(N).to_string(), "0");
}

TEST(MultiPoly, PrintParseRoundTrip) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        MultiPoly p = oracle::random_poly(rng, N, {Var::x, Var::y, Var::z, Var::t}, 5, 6, true);
        EXPECT_EQ(P(p.to_string()), p) << p.to_string();
    }
}

TEST(MultiPoly, RingAxiomsRandomized) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        MultiPoly a = oracle::random_poly(rng, N, {Var::x, Var::y}, 4, 4);
        MultiPoly b = oracle::random_poly(rng, N, {Var::x, Var::y}, 4, 4);
        MultiPoly c = oracle::random_poly(rng, N, {Var::x, Var::y}, 4, 4);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        if (!b.is_zero()) {
            EXPECT_EQ((a * b).exact_div(b), a);
        }
    }
}

TEST(MultiPoly, ExactDivFailure) {
    EXPECT_THROW(P("x^2+1").exact_div(P("y")), domain_error);
    EXPECT_FALSE(P("y").divides(P("x^2+1")));
    EXPECT_TRUE(P("x+y").divides(P("x^2-y^2")));
}

TEST(MultiPoly, SubstitutionAndEvaluation) {
    MultiPoly p = P("x^2*y - z");
    EXPECT_EQ(p.substitute(Var::z, P("x^2*y")), MultiPoly::zero(N));
    auto val = p.evaluate_xyz(CycNumber::from_int(N, 2), CycNumber::from_int(N, 3),
                              CycNumber::from_int(N, 5));
    EXPECT_EQ(val, CycNumber::from_int(N, 7));
    // Simultaneous substitution does not cascade.
    MultiPoly q = P("x*y");
    MultiPoly sx = P("y"), sy = P("x");
    std::array<const MultiPoly*, 4> rep{&sx, &sy, nullptr, nullptr};
    EXPECT_EQ(q.substituted(rep), P("x*y"));
}

TEST(MultiPoly, HomogenizeDehomogenize) {
    MultiPoly p = P("x^3 - y^2");
    MultiPoly h = p.homogenize(Var::z, 3);
    EXPECT_EQ(h, P("x^3 - y^2*z"));
    EXPECT_TRUE(h.is_homogeneous());
    EXPECT_EQ(h.dehomogenize(Var::z), p);
}

TEST(Gcd, SpecExamples) {
    EXPECT_EQ(gcd(P("x^2-y^2"), P("x^2+2*x*y+y^2")), P("x+y"));
    EXPECT_EQ(gcd(P("2*x^2-2*y^2"), MultiPoly::zero(N)), P("x^2-y^2").monic());
    EXPECT_EQ(gcd(P("x^2*y"), P("x*y^2")), P("x*y"));
}

TEST(Gcd, DividesBothAndScalesRandomized) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 15; ++trial) {
        MultiPoly p = oracle::random_poly(rng, N, {Var::x, Var::y}, 3, 3);
        MultiPoly q = oracle::random_poly(rng, N, {Var::x, Var::y}, 3, 3);
        MultiPoly r = oracle::random_poly(rng, N, {Var::x, Var::y}, 2, 2);
        if (p.is_zero() || q.is_zero() || r.is_zero()) continue;
        MultiPoly g = gcd(p, q);
        EXPECT_TRUE(g.divides(p));
        EXPECT_TRUE(g.divides(q));
        MultiPoly gr = gcd(p * r, q * r);
        MultiPoly expected = (g * r).monic();
        EXPECT_EQ(gr, expected) << "trial " << trial;
    }
}

TEST(Gcd, TrivariateHomogeneous) {
    MultiPoly g = P("x^2*y + y^2*z + z^2*x");
    MultiPoly a = P("x+y") * g;
    MultiPoly b = P("z^2") * g;
    EXPECT_EQ(gcd(a, b), g.monic());
}

TEST(SquareFree, PerfectSquareSpecExamples) {
    // -3 x^14 = (-3) * (x^7)^2
    auto d1 = perfect_square_decompose(P("-3*x^14"));
    ASSERT_TRUE(d1.has_value());
    EXPECT_EQ(d1->first, CycNumber::from_int(N, -3));
    EXPECT_EQ(d1->second, P("x^7"));
    // 3 x^6 y^6 (x+y)^4 (y-x)^4
    auto d2 = perfect_square_decompose(P("3*x^6*y^6*(x+y)^4*(y-x)^4"));
    ASSERT_TRUE(d2.has_value());
    EXPECT_EQ(d2->first, CycNumber::from_int(N, 3));
    EXPECT_EQ(d2->second, P("x^3*y^3*(x+y)^2*(y-x)^2").monic());
    // x^4 + y^4 is not a square over C.
    EXPECT_FALSE(perfect_square_decompose(P("x^4+y^4")).has_value());
    // Constants are squares up to a constant.
    auto d3 = perfect_square_decompose(P("7"));
    ASSERT_TRUE(d3.has_value());
    EXPECT_EQ(d3->first, CycNumber::from_int(N, 7));
}

TEST(SquareFree, RoundTripRandomized) {
    std::mt19937_64 rng(13);
    int produced = 0;
    for (int trial = 0; trial < 40 && produced < 15; ++trial) {
        MultiPoly p = oracle::random_poly(rng, N, {Var::x, Var::y}, 3, 3);
        if (p.is_constant()) continue;
        ++produced;
        MultiPoly sq = p * p;
        auto d = perfect_square_decompose(sq);
        ASSERT_TRUE(d.has_value()) << p.to_string();
        // kappa * s^2 = D exactly, with s monic: kappa = lead(p)^2.
        EXPECT_EQ(MultiPoly::constant(d->first) * d->second * d->second, sq);
        EXPECT_EQ(d->first, p.leading_coefficient() * p.leading_coefficient());
        EXPECT_EQ(d->second, p.monic());
        // Multiplying by a square-free nonconstant kills it.
        MultiPoly spoiler = P("x+7*y+3");
        if (!spoiler.divides(p)) {
            EXPECT_FALSE(perfect_square_decompose(sq * spoiler).has_value());
        }
    }
    EXPECT_GE(produced, 10);
}

TEST(Det3, Basics) {
    auto one = MultiPoly::one(N), zero = MultiPoly::zero(N);
    std::array<std::array<MultiPoly, 3>, 3> id{{{one, zero, zero}, {zero, one, zero}, {zero, zero, one}}};
    EXPECT_EQ(det3(id), one);
    std::array<std::array<MultiPoly, 3>, 3> rep{{{P("x"), P("y"), P("z")},
                                                 {P("x"), P("y"), P("z")},
                                                 {P("1"), P("x*y"), P("z^2")}}};
    EXPECT_EQ(det3(rep), zero);
}

TEST(Det3, MultilinearitySpotChecks) {
    std::mt19937_64 rng(5);
    auto rp = [&] { return oracle::random_poly(rng, N, {Var::x, Var::y, Var::z}, 2, 3); };
    for (int trial = 0; trial < 5; ++trial) {
        std::array<std::array<MultiPoly, 3>, 3> m{{{rp(), rp(), rp()}, {rp(), rp(), rp()}, {rp(), rp(), rp()}}};
        // Scaling one row scales the determinant.
        auto scaled = m;
        MultiPoly s = P("x+2");
        for (auto& entry : scaled[1]) entry *= s;
        EXPECT_EQ(det3(scaled), det3(m) * s);
        // Adding a multiple of one row to another leaves it unchanged.
        auto sheared = m;
        for (int k = 0; k < 3; ++k) sheared[0][static_cast<std::size_t>(k)] += s * m[2][static_cast<std::size_t>(k)];
        EXPECT_EQ(det3(sheared), det3(m));
    }
}

TEST(Det3, JouanolouInflectionDeterminant) {
    // Lift Z = y^2 dx + z^2 dy + x^2 dz of the degree-2 Jouanolou foliation.
    MultiPoly E = P("y^2"), F = P("z^2"), G = P("x^2");
    auto ZD = [&](const MultiPoly& f) {
        return E * f.derive(Var::x) + F * f.derive(Var::y) + G * f.derive(Var::z);
    };
    std::array<std::array<MultiPoly, 3>, 3> m{{{P("x"), E, ZD(E)}, {P("y"), F, ZD(F)}, {P("z"), G, ZD(G)}}};
    EXPECT_EQ(det3(m), P("2*(3*x^2*y^2*z^2 - x*y^5 - x^5*z - y*z^5)"));
}

TEST(Resultant, SylvesterConventionAndSpecCases) {
    MultiPoly r = resultant(P("y-x"), P("y+x"), Var::y);
    EXPECT_EQ(r, oracle::sylvester_resultant(P("y-x"), P("y+x"), Var::y));
    EXPECT_EQ(r, P("2*x"));
    EXPECT_EQ(resultant(P("x^3-y^2"), P("x^3-y^2"), Var::y), MultiPoly::zero(N));
    // Eliminating y from the degree-2 Jouanolou singular system lands on x^7 = 1.
    MultiPoly elim = resultant(P("x^3-y^2"), P("x^2*y-1"), Var::y);
    EXPECT_TRUE(P("x^7-1").divides(elim)) << elim.to_string();
    EXPECT_THROW(resultant(P("x"), P("y+x"), Var::y), domain_error);
}

TEST(Resultant, MatchesSylvesterOracleRandomized) {
    std::mt19937_64 rng(17);
    int tested = 0;
    for (int trial = 0; trial < 60 && tested < 20; ++trial) {
        MultiPoly p = oracle::random_poly(rng, N, {Var::x, Var::y}, 3, 4);
        MultiPoly q = oracle::random_poly(rng, N, {Var::x, Var::y}, 3, 4);
        if (p.degree(Var::y) < 1 || q.degree(Var::y) < 1) continue;
        ++tested;
        EXPECT_EQ(resultant(p, q, Var::y), oracle::sylvester_resultant(p, q, Var::y));
    }
    EXPECT_GE(tested, 10);
}

TEST(Resultant, VanishesIffCommonFactorRandomized) {
    std::mt19937_64 rng(19);
    int tested = 0;
    for (int trial = 0; trial < 80 && tested < 15; ++trial) {
        MultiPoly p = oracle::random_poly(rng, N, {Var::x, Var::y}, 2, 3);
        MultiPoly q = oracle::random_poly(rng, N, {Var::x, Var::y}, 2, 3);
        MultiPoly c = oracle::random_poly(rng, N, {Var::x, Var::y}, 2, 2);
        if (p.degree(Var::y) < 1 || q.degree(Var::y) < 1 || c.degree(Var::y) < 1) continue;
        ++tested;
        bool common = gcd(p, q).degree(Var::y) > 0;
        EXPECT_EQ(resultant(p, q, Var::y).is_zero(), common);
        // Forcing a common factor forces a zero resultant.
        EXPECT_TRUE(resultant(p * c, q * c, Var::y).is_zero());
    }
    EXPECT_GE(tested, 8);
}

TEST(RationalFunctionOps, ReductionAndArithmetic) {
    RationalFunction f = parse_rational("(x^4-y^4)/(x^4 - j*y^4)", N);
    EXPECT_TRUE(gcd(f.numerator(), f.denominator()).is_constant());
    // Cross-check against the unreduced pair.
    EXPECT_EQ(f.numerator() * P("x^4 - j*y^4"), f.denominator() * P("x^4-y^4"));
    EXPECT_EQ(f.denominator().leading_coefficient(), CycNumber::one(N));
    RationalFunction g = parse_rational("1/x", N);
    EXPECT_EQ(g * g, parse_rational("1/x^2", N));
    EXPECT_EQ(g - g, RationalFunction(N));
    EXPECT_EQ(parse_rational("(x^2-y^2)/(x+y)", N), parse_rational("x-y", N));
    EXPECT_THROW(parse_rational("x/(y-y)", N), error);
}

TEST(Parser, LiteralsAndErrors) {
    EXPECT_EQ(P("x^3 - y^2"), P("x*x*x - y*y"));
    EXPECT_EQ(P("j*x + j^2*y").coefficient(Monomial{{1, 0, 0, 0}}), CycNumber::unit_j(N));
    EXPECT_EQ(P("zeta(12)^3"), MultiPoly::constant(CycNumber::unit_i(N)));
    EXPECT_EQ(P("zeta(3)"), MultiPoly::constant(CycNumber::unit_j(N)));
    EXPECT_EQ(P("5/10"), MultiPoly::constant(N, BigRational(1, 2)));
    EXPECT_EQ(P("x^-2*x^3"), P("x"));
    try {
        parse_poly("x + ", N);
        FAIL() << "expected parse_error";
    } catch (const parse_error& e) {
        EXPECT_EQ(e.position, 4u);
    }
    EXPECT_THROW(parse_poly("x + w", N), parse_error);
    EXPECT_THROW(parse_poly("zeta(5)", N), parse_error);
    EXPECT_THROW(parse_poly("1/x", N), domain_error);
    EXPECT_THROW(parse_poly("i", 7), extension_required);
}
