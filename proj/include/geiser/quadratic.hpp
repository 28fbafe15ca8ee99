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

#ifndef GEISER_QUADRATIC_HPP
#define GEISER_QUADRATIC_HPP

#include "geiser/foliation.hpp"
#include "geiser/linalg.hpp"

namespace geiser {

// The involution swapping the two tangency points of a generic line with a
// degree-2 foliation: m + s X(m) for the nonzero root s of Q(t)/t.
inline BirationalMap involution_from_quadratic(const Foliation& F) {
    if (F.degree() != 2)
        throw domain_error("involution_from_quadratic expects a degree-2 foliation, got degree " +
                           std::to_string(F.degree()));
    TangencyData data = tangency_polynomial(F); // P = a t + b
    const MultiPoly& a = data.a2();
    const MultiPoly& b = data.b2();
    if (a.is_zero()) throw domain_error("degenerate tangency: Q/t has no linear term");
    RationalFunction s(-b, a);
    const int n = F.conductor();
    RationalFunction I1 = RationalFunction::variable(n, Var::x) + s * RationalFunction(F.field().X1);
    RationalFunction I2 = RationalFunction::variable(n, Var::y) + s * RationalFunction(F.field().X2);
    return BirationalMap::from_affine(I1, I2);
}

// Quadratic foliations normalized to be singular at (1:0:0), (0:1:0),
// (0:0:1) and (1:1:1):
//   X = (x^2 y + a x^2 + b x y + c x + e y) d/dx
//     + (x y^2 + A y^2 + B x y + C x + E y) d/dy
// with e = -1-a-b-c and E = -1-A-B-C.
struct NormalizedQuadraticCoefficients {
    CycNumber a, b, c, A, B, C;

    NormalizedQuadraticCoefficients(CycNumber a_, CycNumber b_, CycNumber c_, CycNumber A_,
                                    CycNumber B_, CycNumber C_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), A(std::move(A_)), B(std::move(B_)),
          C(std::move(C_)) {}

    int conductor() const { return a.conductor(); }
    CycNumber e() const { return -(CycNumber::one(conductor()) + a + b + c); }
    CycNumber E() const { return -(CycNumber::one(conductor()) + A + B + C); }

    std::pair<MultiPoly, MultiPoly> field_components() const {
        const int n = conductor();
        MultiPoly X1(n), X2(n);
        X1.add_term(Monomial{{2, 1, 0, 0}}, CycNumber::one(n));
        X1.add_term(Monomial{{2, 0, 0, 0}}, a);
        X1.add_term(Monomial{{1, 1, 0, 0}}, b);
        X1.add_term(Monomial{{1, 0, 0, 0}}, c);
        X1.add_term(Monomial{{0, 1, 0, 0}}, e());
        X2.add_term(Monomial{{1, 2, 0, 0}}, CycNumber::one(n));
        X2.add_term(Monomial{{0, 2, 0, 0}}, A);
        X2.add_term(Monomial{{1, 1, 0, 0}}, B);
        X2.add_term(Monomial{{1, 0, 0, 0}}, C);
        X2.add_term(Monomial{{0, 1, 0, 0}}, E());
        return {std::move(X1), std::move(X2)};
    }

    bool field_is_reduced() const {
        auto [X1, X2] = field_components();
        return gcd(X1, X2).is_constant();
    }

    Foliation foliation() const {
        auto [X1, X2] = field_components();
        if (!gcd(X1, X2).is_constant())
            throw domain_error("normalized quadratic coefficients give a field with a common factor");
        return Foliation::from_field(std::move(X1), std::move(X2));
    }
};

struct GeiserClosedForm {
    MultiPoly U1, V1, U2, V2, T;
    BirationalMap map;
};

// Literal transcription of the closed-form Geiser involution
// (U1 / (T U2), V1 / (T V2)) for the normalized quadratic family.  The
// formulas are stored as coefficient data; any transcription slip is caught
// by the equivalence with the tangency construction.
inline GeiserClosedForm geiser_closed_form(const NormalizedQuadraticCoefficients& q) {
    const int n = q.conductor();
    const CycNumber a = q.a, b = q.b, c = q.c, A = q.A, B = q.B, C = q.C, e = q.e(), E = q.E();
    auto k = [&](long v) { return CycNumber::from_int(n, v); };
    const CycNumber two = k(2), three = k(3);

    MultiPoly U1(n);
    U1.add_term(Monomial{{3, 2, 0, 0}}, (B - a) * (E - A * (B - a)));
    U1.add_term(Monomial{{3, 1, 0, 0}}, E * (a * B - a * a + C) + two * A * C * (a - B));
    U1.add_term(Monomial{{3, 0, 0, 0}}, C * (a * E - A * C));
    U1.add_term(Monomial{{0, 3, 0, 0}}, e * (A * E - b * E - c * A + e * B));
    U1.add_term(Monomial{{1, 3, 0, 0}},
                two * (A * A * c - e * E - b * c * A - A * A * E) - a * e * A + c * e + b * e * B +
                    three * b * A * E - b * b * E);
    U1.add_term(Monomial{{1, 1, 0, 0}}, (c * E - e * C) * (E - c));
    U1.add_term(Monomial{{0, 2, 0, 0}}, e * (e * C - c * E));
    U1.add_term(Monomial{{2, 2, 0, 0}},
                a * e * B - e * C - e * B * B + E * E - c * E + b * B * E +
                    two * (b * A * C - a * c * A - A * A * C - a * b * E - A * B * E + c * A * B) +
                    three * a * A * E);
    U1.add_term(Monomial{{2, 0, 0, 0}}, C * (c * E - e * C));
    U1.add_term(Monomial{{2, 1, 0, 0}},
                two * (c * A * C - e * C * B - a * c * E - A * C * E) + a * E * E + c * B * E +
                    b * C * E + a * e * C);
    U1.add_term(Monomial{{2, 3, 0, 0}},
                two * A * (A - b) * (a - B) + e * (a - B) + (A - b) * E);
    U1.add_term(Monomial{{1, 4, 0, 0}}, (b - A) * (e - A * (b - A)));
    U1.add_term(Monomial{{1, 2, 0, 0}},
                b * e * C - a * e * E - c * c * A + b * E * E - A * E * E + three * c * A * E +
                    c * e * B - e * B * E - two * b * c * E);
    U1.add_term(Monomial{{0, 4, 0, 0}}, e * (A * A - b * A + e));

    MultiPoly V1(n);
    V1.add_term(Monomial{{3, 2, 0, 0}},
                two * a * (a - B) * (b - A) - a * c - A * C + b * C + c * B);
    V1.add_term(Monomial{{2, 3, 0, 0}}, (A - b) * (a * (A - b) + c));
    V1.add_term(Monomial{{4, 1, 0, 0}}, (a - B) * (C + a * (a - B)));
    V1.add_term(Monomial{{3, 1, 0, 0}},
                two * (a * B * E + c * C - a * a * E + a * a * c) - three * a * c * B - C * E +
                    a * A * C - b * B * C + c * B * B);
    V1.add_term(Monomial{{2, 0, 0, 0}}, C * (c * E - e * C));
    V1.add_term(Monomial{{1, 1, 0, 0}}, (E - c) * (c * E - e * C));
    V1.add_term(Monomial{{2, 2, 0, 0}},
                two * (a * A * E - a * e * B + a * b * c - a * b * E + c * A * B + a * a * e) +
                    b * b * C + e * C - b * c * B - c * c - three * a * c * A - b * A * C + c * E);
    V1.add_term(Monomial{{4, 0, 0, 0}}, -(C * (C - a * B + a * a)));
    V1.add_term(Monomial{{2, 1, 0, 0}},
                two * c * B * E + a * E * E - b * C * E - three * a * c * E - c * c * B +
                    b * c * C + c * A * C - e * C * B + a * c * c);
    V1.add_term(Monomial{{3, 0, 0, 0}}, C * (a * E - b * C - a * c + c * B));
    V1.add_term(Monomial{{0, 3, 0, 0}}, e * (a * e - c * A));
    V1.add_term(Monomial{{1, 2, 0, 0}},
                two * (a * c * e + b * e * C - a * e * E + c * A * E) - c * c * A - c * e * B -
                    e * A * C - b * c * E);
    V1.add_term(Monomial{{1, 3, 0, 0}},
                c * A * A - c * e - b * c * A + two * a * e * (b - A));
    V1.add_term(Monomial{{0, 2, 0, 0}}, e * (e * C - c * E));

    auto [V2, U2] = [&] {
        auto fc = q.field_components();
        return std::make_pair(fc.first, fc.second); // V2 = X1, U2 = X2
    }();

    MultiPoly T(n);
    T.add_term(Monomial{{2, 0, 0, 0}}, C - a * B + a * a);
    T.add_term(Monomial{{1, 1, 0, 0}}, E - c - A * B + a * b);
    T.add_term(Monomial{{1, 0, 0, 0}}, b * C - c * B - A * C + a * c);
    T.add_term(Monomial{{0, 2, 0, 0}}, b * A - A * A - e);
    T.add_term(Monomial{{0, 1, 0, 0}}, b * E - e * B - A * E + a * e);
    if (T.is_zero()) throw domain_error("degenerate configuration: T vanishes identically");

    RationalFunction I1(U1, T * U2), I2(V1, T * V2);
    BirationalMap map = BirationalMap::from_affine(I1, I2);
    return GeiserClosedForm{std::move(U1), std::move(V1), std::move(U2), std::move(V2), std::move(T),
                            std::move(map)};
}

// Solve the seven-points linear system for the three extra singular points
// m1, m2, m3 (the first four are the normalized ones).
inline NormalizedQuadraticCoefficients seven_points_solve(
    const std::array<std::pair<CycNumber, CycNumber>, 3>& points) {
    const int n = points[0].first.conductor();
    CycMatrix ma, mA;
    CycVector ra, rA;
    for (const auto& [x, y] : points) {
        // (x^2 - y) a + (x y - y) b + (x - y) c = y - x^2 y
        ma.push_back({x * x - y, x * y - y, x - y});
        ra.push_back(y - x * x * y);
        // (y^2 - y) A + (x y - y) B + (x - y) C = y - x y^2
        mA.push_back({y * y - y, x * y - y, x - y});
        rA.push_back(y - x * y * y);
    }
    auto sa = solve_linear(ma, ra);
    auto sA = solve_linear(mA, rA);
    if (!sa || !sA) throw domain_error("seven-points system is singular for these points");
    NormalizedQuadraticCoefficients q((*sa)[0], (*sa)[1], (*sa)[2], (*sA)[0], (*sA)[1], (*sA)[2]);
    if (!q.field_is_reduced())
        throw domain_error("seven-points field has a common factor: points in special position");
    return q;
}

} // namespace geiser

#endif
