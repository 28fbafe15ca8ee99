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

#include "geiser/foliation.hpp"

#include "geiser/parser.hpp"

#include <gtest/gtest.h>

using namespace geiser;

namespace {
constexpr int N = 12;
MultiPoly P(const std::string& s) { return parse_poly(s, N); }
Foliation field(const std::string& x1, const std::string& x2) {
    return Foliation::from_field(P(x1), P(x2));
}
bool proportional(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.monic() == b.monic();
}
} // namespace

TEST(Foliation, JouanolouDegree2Representations) {
    Foliation F = field("x^3-y^2", "x^2*y-1");
    EXPECT_EQ(F.degree(), 2);
    EXPECT_EQ(foliation_degree(F), 2);
    // Round trip through the homogeneous form.
    Foliation G = Foliation::from_form(F.form().u, F.form().v, F.form().w);
    EXPECT_TRUE(proportional(G.field().X1, F.field().X1));
    EXPECT_TRUE(proportional(G.field().X2, F.field().X2));
    // Euler identity is enforced on construction.
    MultiPoly euler = P("x") * F.form().u + P("y") * F.form().v + P("z") * F.form().w;
    EXPECT_TRUE(euler.is_zero());
}

TEST(Foliation, PencilOfLinesDegreeZero) {
    // x = cte, via the form z dx - x dz.
    Foliation F = Foliation::from_form(P("z"), MultiPoly::zero(N), P("-x"));
    EXPECT_EQ(F.degree(), 0);
    // Base point of the pencil is singular.
    EXPECT_TRUE(is_singular_point(F, {CycNumber::zero(N), CycNumber::one(N), CycNumber::zero(N)}));
    // Radial pencil: from_form is fine, from_field must reject the radial field.
    Foliation radial = Foliation::from_form(P("y"), P("-x"), MultiPoly::zero(N));
    EXPECT_EQ(radial.degree(), 0);
    EXPECT_THROW(Foliation::from_field(P("x"), P("y")), domain_error);
}

TEST(Foliation, RoundTripUpToConstantRandomFields) {
    for (const char* pair : {"y^3,x^3", "x^3,1", "x^2+x*y,y^2-1", "x*y^2,y^3-x^2"}) {
        std::string s(pair);
        auto comma = s.find(',');
        Foliation F = field(s.substr(0, comma), s.substr(comma + 1));
        Foliation G = Foliation::from_form(F.form().u, F.form().v, F.form().w);
        EXPECT_TRUE(proportional(G.field().X1, F.field().X1)) << s;
        EXPECT_TRUE(proportional(G.field().X2, F.field().X2)) << s;
    }
}

TEST(Foliation, HamiltonianFieldHomogenizesToDegreeFour) {
    Foliation F = field("y^3", "x^3");
    EXPECT_EQ(F.form().coefficient_degree(), 4);
    EXPECT_EQ(F.degree(), 3);
}

TEST(Foliation, PencilTangencyCurve) {
    // F5 and the pencil through the origin: Tang = x^2 y up to a constant.
    Foliation F5 = field("x^2+x*y^2", "y^3");
    MultiPoly tang = pencil_tangency_curve(F5, {CycNumber::zero(N), CycNumber::zero(N), CycNumber::one(N)});
    EXPECT_TRUE(proportional(tang, P("x^2*y")));
}

TEST(Foliation, InflectionPolynomialPaperExamples) {
    // Jouanolou degree 2: H ~ 3x^2y^2z^2 - xy^5 - x^5z - yz^5.
    Foliation FJ = field("x^3-y^2", "x^2*y-1");
    EXPECT_TRUE(proportional(inflection_polynomial(FJ), P("3*x^2*y^2*z^2 - x*y^5 - x^5*z - y*z^5")));
    // x^3 d/dx + d/dy: H ~ x^5 z^4.
    EXPECT_TRUE(proportional(inflection_polynomial(field("x^3", "1")), P("x^5*z^4")));
    // x^3 d/dx + y^3 d/dy: H ~ x^3 y^3 z (x+y) (y-x).
    EXPECT_TRUE(proportional(inflection_polynomial(field("x^3", "y^3")),
                             P("x^3*y^3*z*(x+y)*(y-x)")));
}

TEST(Foliation, TangencyPolynomialDiscriminants) {
    // x^3 d/dx + d/dy: Delta(P) = -3 x^14.
    Foliation F1 = field("x^3", "1");
    TangencyData d1 = tangency_polynomial(F1);
    EXPECT_EQ(d1.nu, 3);
    MultiPoly delta1 = d1.b() * d1.b() - MultiPoly::constant(N, 4) * d1.a() * d1.c();
    EXPECT_EQ(delta1, P("-3*x^14"));
    // (x^3 - 1) d/dx + d/dy: Delta(P) = -3 x^2 (x^3-1)^4.
    TangencyData d2 = tangency_polynomial(field("x^3-1", "1"));
    MultiPoly delta2 = d2.b() * d2.b() - MultiPoly::constant(N, 4) * d2.a() * d2.c();
    EXPECT_EQ(delta2, P("-3*x^2*(x^3-1)^4"));
    // x^3 d/dx + (1 + x + x^2/3) d/dy: Delta(P) = -(1/3) x^14 (x+3)^2.
    TangencyData d3 = tangency_polynomial(field("x^3", "1 + x + x^2/3"));
    MultiPoly delta3 = d3.b() * d3.b() - MultiPoly::constant(N, 4) * d3.a() * d3.c();
    EXPECT_EQ(delta3, P("-1/3*x^14*(x+3)^2"));
    // c is the affine inflection polynomial, up to a constant.
    MultiPoly h1 = inflection_polynomial(F1).dehomogenize(Var::z);
    EXPECT_TRUE(proportional(d1.c(), h1));
}

TEST(Foliation, TangencyCIsInflectionOnDegree3Examples) {
    for (const char* pair : {"x^3,1", "x^3-1,1", "y^3,x^3", "x^3,y^3"}) {
        std::string s(pair);
        auto comma = s.find(',');
        Foliation F = field(s.substr(0, comma), s.substr(comma + 1));
        TangencyData d = tangency_polynomial(F);
        MultiPoly h = inflection_polynomial(F).dehomogenize(Var::z);
        EXPECT_TRUE(proportional(d.c(), h)) << s;
    }
}

TEST(Foliation, RescalingInvarianceOfRoots) {
    // Replacing X by h X divides the tangency roots by h: the displacements
    // r_i X are those of the reduced field, so the construction only sees the
    // foliation.  Check that r_i / h are exact roots of the rescaled Q/t.
    Foliation F = field("x^3", "1");
    TangencyData d = tangency_polynomial(F);
    MultiPoly h = P("x^2+1");
    AffineVectorField scaled(F.field().X1 * h, F.field().X2 * h);
    const MultiPoly tvar = MultiPoly::variable(N, Var::t);
    MultiPoly ax = P("x") + tvar * scaled.X1;
    MultiPoly ay = P("y") + tvar * scaled.X2;
    std::array<const MultiPoly*, 4> rep{&ax, &ay, nullptr, nullptr};
    SubstitutionEngine engine(N, rep);
    MultiPoly Q = engine(scaled.X1) * scaled.X2 - engine(scaled.X2) * scaled.X1;
    MultiPoly Ps = Q.exact_div(tvar);
    // Roots of the original P: r = (-b +- sqrt(Delta)) / (2a) with
    // Delta = -3 x^14 = (sqrt(-3) x^7)^2.
    CycNumber mu = *CycNumber::from_int(N, -3).sqrt_in_field();
    MultiPoly sq = MultiPoly::constant(mu) * P("x^7");
    for (int pick : {1, -1}) {
        RationalFunction r((pick > 0 ? sq - d.b() : -sq - d.b()),
                           MultiPoly::constant(N, 2) * d.a());
        RationalFunction r_scaled = r / RationalFunction(h);
        // Evaluate Ps at t = r_scaled.
        auto coeffs = Ps.coefficients_in(Var::t);
        RationalFunction acc(N);
        for (std::size_t k = coeffs.size(); k-- > 0;)
            acc = acc * r_scaled + RationalFunction(coeffs[k]);
        EXPECT_TRUE(acc.is_zero()) << "pick " << pick;
    }
}

TEST(Foliation, SingularPoints) {
    Foliation FJ = field("x^3-y^2", "x^2*y-1");
    auto one = CycNumber::one(N);
    EXPECT_TRUE(is_singular_point(FJ, {one, one, one}));
    EXPECT_FALSE(is_singular_point(FJ, {CycNumber::from_int(N, 2), one, one}));
    // In Q(zeta_84): (xi, xi^-2, 1) with xi = zeta_84^12 a primitive 7th root.
    auto xi = CycNumber::zeta(84, 12);
    EXPECT_TRUE(is_singular_point(FJ, {xi, xi.pow(-2), CycNumber::one(84)}));
    EXPECT_TRUE(is_singular_point(FJ, {xi.pow(3), xi.pow(-6), CycNumber::one(84)}));
    // Eliminants: x-eliminant divisible by x^7 - 1.
    auto [ex, ey] = singular_elimination(FJ);
    EXPECT_TRUE(P("x^7-1").divides(ex)) << ex;
    EXPECT_TRUE(P("y^7-1").divides(ey)) << ey;
    // y d/dx - x d/dy: eliminants are powers of the variables.
    auto [ex2, ey2] = singular_elimination(field("y", "-x"));
    EXPECT_TRUE(proportional(ex2, P("x").pow(static_cast<unsigned>(ex2.degree()))));
    EXPECT_TRUE(proportional(ey2, P("y").pow(static_cast<unsigned>(ey2.degree()))));
}

TEST(Foliation, IsotropyExamples) {
    // Jouanolou degree 2 admits the cyclic symmetry (y : z : x).
    Foliation FJ = field("x^3-y^2", "x^2*y-1");
    BirationalMap cyc = BirationalMap::from_triple(P("y"), P("z"), P("x"));
    EXPECT_TRUE(is_symmetry(FJ, cyc));
    BirationalMap other = BirationalMap::from_triple(P("x"), P("z"), P("y"));
    EXPECT_FALSE(is_symmetry(FJ, other));
    // And the order-7 diagonal symmetry over Q(zeta_84).
    Foliation FJ84 = FJ.embed(84);
    auto xi = MultiPoly::constant(CycNumber::zeta(84, 12));
    BirationalMap diag = BirationalMap::from_triple(
        xi * MultiPoly::variable(84, Var::x),
        MultiPoly::constant(CycNumber::zeta(84, 12).pow(-2)) * MultiPoly::variable(84, Var::y),
        MultiPoly::variable(84, Var::z));
    EXPECT_TRUE(is_symmetry(FJ84, diag));
    // F1 (omega_1 = x^2 dx + y^2 (x dy - y dx)): (b^3 x : b^2 y : z + c x).
    Foliation F1 = field("x*y^2", "y^3 - x^2");
    BirationalMap g1 = BirationalMap::from_triple(P("8*x"), P("4*y"), P("z + 5*x"));
    EXPECT_TRUE(is_symmetry(F1, g1));
    // F4: (j x : j^2 y : z).
    Foliation F4 = field("x + y^2 - x^2*y", "-x^2 - x*y^2");
    BirationalMap g4 = BirationalMap::from_triple(P("j*x"), P("j^2*y"), P("z"));
    EXPECT_TRUE(is_symmetry(F4, g4));
}

TEST(Foliation, InvariantLines) {
    // x^3 d/dx + y^3 d/dy leaves x = 0, y = 0, z = 0 and x = +-y invariant.
    Foliation F = field("x^3", "y^3");
    for (const char* line : {"x", "y", "z", "x-y", "x+y"})
        EXPECT_TRUE(is_invariant_line(F, P(line))) << line;
    EXPECT_FALSE(is_invariant_line(F, P("x-z")));
    // Jouanolou has no invariant line (spot-check a few).
    Foliation FJ = field("x^3-y^2", "x^2*y-1");
    for (const char* line : {"x", "y", "z", "x-y", "x+y-z"})
        EXPECT_FALSE(is_invariant_line(FJ, P(line))) << line;
}

TEST(Foliation, FromInvolutionExamples) {
    // Degree-9 Jonquieres involution: field ~ -d/dx + (1 + x^2 y^2) d/dy, degree 4.
    RationalFunction I1 = parse_rational("y/(1+x^2*y^2)", N);
    RationalFunction I2 = parse_rational("x*(1+x^2*y^2)", N);
    BirationalMap I = BirationalMap::from_affine(I1, I2);
    EXPECT_EQ(I.degree(), 9);
    auto data = foliation_from_involution(I);
    EXPECT_EQ(data.degree, 4);
    EXPECT_TRUE(data.degree_even);
    EXPECT_TRUE(data.degree_bound_ok);
    EXPECT_TRUE(proportional(data.foliation.field().X1, P("-1")));
    EXPECT_TRUE(proportional(data.foliation.field().X2, P("1+x^2*y^2")));
    EXPECT_EQ(data.fix_degree, 5);
    // Cremona involution sigma: degree-2 foliation.
    BirationalMap sigma = BirationalMap::from_triple(P("y*z"), P("x*z"), P("x*y"));
    auto dsigma = foliation_from_involution(sigma);
    EXPECT_EQ(dsigma.degree, 2);
    EXPECT_EQ(dsigma.fix_degree, 0);
    // (x, R(x)/y) gives the pencil x = cte for any R.
    for (const char* R : {"x^3+1", "x", "x^5-2*x+1"}) {
        BirationalMap J = BirationalMap::from_affine(
            RationalFunction::variable(N, Var::x),
            parse_rational(std::string(R) + std::string("/y"), N));
        auto dj = foliation_from_involution(J);
        EXPECT_EQ(dj.degree, 0) << R;
        EXPECT_TRUE(dj.foliation.field().X1.is_zero());
    }
}
