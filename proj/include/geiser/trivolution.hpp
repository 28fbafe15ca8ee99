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

#ifndef GEISER_TRIVOLUTION_HPP
#define GEISER_TRIVOLUTION_HPP

#include "geiser/foliation.hpp"
#include "geiser/linalg.hpp"
#include "geiser/parser.hpp"

namespace geiser {

// ---------------------------------------------------------------------------
// Discriminant of the tangency quadratic P = a t^2 + b t + c.

struct TrivolutionDiscriminant {
    MultiPoly a, b, c;
    MultiPoly delta; // b^2 - 4 a c
};

inline TrivolutionDiscriminant trivolution_discriminant(const Foliation& F) {
    if (F.degree() != 3)
        throw domain_error("trivolution_discriminant expects a degree-3 foliation, got degree " +
                           std::to_string(F.degree()));
    TangencyData data = tangency_polynomial(F);
    const int n = F.conductor();
    MultiPoly delta = data.b() * data.b() - MultiPoly::constant(n, 4) * data.a() * data.c();
    return {data.a(), data.b(), data.c(), std::move(delta)};
}

// ---------------------------------------------------------------------------
// The order-3 maps swapping the three tangency points, when Delta(P) is a
// square.

struct TrivolutionResult {
    TrivolutionDiscriminant disc;
    std::optional<std::pair<CycNumber, MultiPoly>> square; // Delta = kappa s^2
    std::optional<std::pair<BirationalMap, BirationalMap>> maps;
};

inline TrivolutionResult trivolution_from_cubic(const Foliation& F, bool post_verify = true) {
    TrivolutionResult out{trivolution_discriminant(F), std::nullopt, std::nullopt};
    auto square = perfect_square_decompose(out.disc.delta);
    if (!square) return out; // not a square over C: no trivolution
    out.square = square;
    const auto& [kappa, s] = *square;
    auto mu = kappa.sqrt_in_field(); // throws extension_required on non-rational kappa
    if (!mu)
        throw extension_required("Delta(P) = kappa * s^2 with kappa = " + kappa.to_string() +
                                 " not a square in Q(zeta_" + std::to_string(F.conductor()) +
                                 "): enlarge the conductor");
    const int n = F.conductor();
    const MultiPoly& a = out.disc.a;
    const MultiPoly& b = out.disc.b;
    MultiPoly ms = MultiPoly::constant(*mu) * s;
    MultiPoly two_a = MultiPoly::constant(n, 2) * a;
    RationalFunction r1(ms - b, two_a), r2(-ms - b, two_a);
    auto build = [&](const RationalFunction& r) {
        RationalFunction I1 = RationalFunction::variable(n, Var::x) + r * RationalFunction(F.field().X1);
        RationalFunction I2 = RationalFunction::variable(n, Var::y) + r * RationalFunction(F.field().X2);
        return BirationalMap::from_affine(I1, I2);
    };
    BirationalMap T1 = build(r1), T2 = build(r2);
    if (post_verify) {
        if (!detail::composes_to_identity(T1, T2)) throw error("internal: T1 o T2 != id");
        if (!verify_period(T1, 3)) throw error("internal: T1 does not have period 3");
    }
    out.maps = std::make_pair(std::move(T1), std::move(T2));
    return out;
}

// ---------------------------------------------------------------------------
// Alignment: det(T(m) - m, T^2(m) - m) = 0 identically.

inline bool alignment_check(const BirationalMap& T) {
    if (is_identity(T)) throw domain_error("alignment_check of the identity");
    const int n = T.conductor();
    auto [t1, t2] = T.affine_pair();
    const RationalFunction* rep1[4] = {&t1, &t2, nullptr, nullptr};
    std::array<const RationalFunction*, 4> rep{rep1[0], rep1[1], rep1[2], rep1[3]};
    RationalFunction s1 = t1.substituted(rep); // first component of T^2
    RationalFunction s2 = t2.substituted(rep);
    RationalFunction x = RationalFunction::variable(n, Var::x);
    RationalFunction y = RationalFunction::variable(n, Var::y);
    RationalFunction det = (t1 - x) * (s2 - y) - (t2 - y) * (s1 - x);
    return det.is_zero();
}

// ---------------------------------------------------------------------------
// Binary quartics and the projected Veronese surface of perfect squares.

struct BinaryQuartic {
    std::array<CycNumber, 5> tau; // tau1 x^4 + tau2 x^3 y + ... + tau5 y^4

    explicit BinaryQuartic(std::array<CycNumber, 5> t) : tau(std::move(t)) {
        bool all_zero = true;
        for (const auto& c : tau) all_zero = all_zero && c.is_zero();
        if (all_zero) throw domain_error("zero binary quartic");
    }

    int conductor() const { return tau[0].conductor(); }

    MultiPoly to_poly() const {
        const int n = conductor();
        MultiPoly p(n);
        for (int k = 0; k < 5; ++k) {
            Monomial m;
            m[Var::x] = static_cast<unsigned>(4 - k);
            m[Var::y] = static_cast<unsigned>(k);
            p.add_term(m, tau[static_cast<std::size_t>(k)]);
        }
        return p;
    }
};

// Membership in Theta = { T : T = (A x^2 + B x y + C y^2)^2 } via the chart
// conditions (i), (ii), (iii); a square over C, not necessarily over the
// configured field.
inline bool quartic_square_test(const BinaryQuartic& T) {
    const auto& tau = T.tau;
    const CycNumber& t1 = tau[0];
    const CycNumber& t2 = tau[1];
    const CycNumber& t3 = tau[2];
    const CycNumber& t4 = tau[3];
    const CycNumber& t5 = tau[4];
    const int n = T.conductor();
    const CycNumber four = CycNumber::from_int(n, 4);
    const CycNumber eight = CycNumber::from_int(n, 8);
    if (t5.is_zero()) {
        // (i): tau4 = tau5 = 0 and 4 tau1 tau3 - tau2^2 = 0.
        return t4.is_zero() && (four * t1 * t3 - t2 * t2).is_zero();
    }
    // Normalize tau5 = 1.
    const CycNumber inv = t5.inverse();
    const CycNumber n1 = t1 * inv, n2 = t2 * inv, n3 = t3 * inv, n4 = t4 * inv;
    if (n4.is_zero()) {
        // (ii): tau2 = tau4 = 0 and tau3^2 - 4 tau1 = 0.
        return n2.is_zero() && (n3 * n3 - four * n1).is_zero();
    }
    // (iii): tau4^2 tau1 - tau2^2 = 0 and 4 tau3 tau4 - tau4^3 - 8 tau2 = 0.
    return (n4 * n4 * n1 - n2 * n2).is_zero() &&
           (four * n3 * n4 - n4 * n4 * n4 - eight * n2).is_zero();
}

// ---------------------------------------------------------------------------
// The homogeneous degree-3 family F(alpha; lambda, mu, nu).

struct HomogeneousFamilyParams {
    CycNumber alpha, lambda, mu, nu;

    int conductor() const { return alpha.conductor(); }
    bool admissible() const {
        const CycNumber one = CycNumber::one(conductor());
        CycNumber prod = alpha * lambda * mu * nu * (one + lambda + mu + nu);
        return !prod.is_zero() && alpha != one;
    }
};

namespace family {

// Closed forms of the coefficients r1..r5 of the quartic R(x, y), as
// polynomials in the parameters with x = alpha, y = lambda, z = mu, t = nu.
inline const std::array<MultiPoly, 5>& r_polynomials(int conductor) {
    static const std::array<const char*, 5> text{
        // r1
        "y^2*x^2*(2*x*t*z + x^2 + 2*x^2*t + x^2*t^2 - 2*x - 2*x*z - 2*x*t + 1 + 2*z + z^2)",
        // r2
        "-2*y*x*(y*x*t*z + y*x^2*z*t - 3*x^2*z*t + t*z^2 + y*z^2 - y*x*t + x*t^2*z - 2*x*t*z^2"
        " + x^2*t*z^2 - 3*x*t*z - y*x*z - y*x^2*z + 2*t*z - x^2*z^2 + y + t + 2*z*y - y*x^2"
        " - y*x + y*x^3 + t^2*z*x^3 + 2*t*z*x^3 - x*t - x^2*z + z*x^3 - y*t*x^2 - 2*z*t^2*x^2"
        " - t^2*x + 2*y*t*x^3 + y*t^2*x^3)",
        // r3
        "2*z*t^2 - 4*y*x^2*z^2 - 4*y*x*t*z^2 - 2*y*x*t*z + 2*t^2*y*x^2*z - 12*y*x^2*z*t"
        " + 2*y^2*t*x^2*z + 2*y*t*x^2*z^2 + 4*y*t*z*x^4 - 4*y*t^2*z*x^3 + 2*y*t^2*z*x^4"
        " + 4*y*t*z + 6*t^2*x^2*z^2 - 4*y^2*x^2*t - 4*y^2*x^2*z - 4*x*t^2*z + 2*x^2*t*z^2"
        " - 4*y*x^2*z + 2*y^2*x*z + 2*z*y*x^4 + 2*x^2*z*t - 2*y*t*z*x^3 + 2*y*t*z^2 + 2*y*x*t"
        " - 4*x*z^2*t^2 + 2*y^2*z + y^2*z^2 + 2*y^2*x - 6*y^2*x^2 + t^2 + 2*y*t + y^2"
        " + z^2*x^4 + y^2*x^4 + 2*y^2*x^3 - 4*z^2*t^2*x^3 + 2*y^2*t*x^4 + z^2*t^2 - 4*y*t*x^2"
        " - 4*t*z^2*x^3 + 2*z*t^2*x^2 - 4*y*t^2*x^2 + 2*y^2*t*x^3 + 2*z*y*x^3 + z^2*t^2*x^4"
        " + 2*t*z^2*x^4 + y^2*t^2*x^4",
        // r4
        "-2*(z*t^2 - 3*y*x*t*z - 3*y*x^2*z*t + x^2*z*t + 2*y*t*z*x^3 - y*x*t + 2*y*t*z"
        " - y^2*x^2*t - 2*x*t^2*z + x*t*z^2 - 2*x^2*t*z^2 + x*t*z - y*x*z - y*x*z^2 - y*x^2*z"
        " + z^2*x^3 + y^2*x^3 - y*t*x^2 + t*z^2*x^3 + z*t^2*x^2 - y*t^2*x^2 + y^2*t*x^3"
        " + 2*z*y*x^3 - y^2*x*z + y^2*z - y^2*x - y^2*x^2 + t^2 + 2*y*t + y^2)",
        // r5
        "y^2 + y^2*x^2 - 2*y^2*x + 2*y*x^2*z + 2*y*t - 2*y*x*t - 2*y*x*z + 2*x*t*z + t^2"
        " + x^2*z^2"};
    static std::map<int, std::array<MultiPoly, 5>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(conductor);
    if (it != cache.end()) return it->second;
    std::array<MultiPoly, 5> polys{MultiPoly::zero(conductor), MultiPoly::zero(conductor),
                                   MultiPoly::zero(conductor), MultiPoly::zero(conductor),
                                   MultiPoly::zero(conductor)};
    for (int k = 0; k < 5; ++k) polys[static_cast<std::size_t>(k)] = parse_poly(text[static_cast<std::size_t>(k)], conductor);
    return cache.emplace(conductor, std::move(polys)).first->second;
}

inline std::array<CycNumber, 5> r_values(const HomogeneousFamilyParams& p) {
    const auto& polys = r_polynomials(p.conductor());
    std::array<CycNumber, 4> point{p.alpha, p.lambda, p.mu, p.nu};
    std::array<CycNumber, 5> out{CycNumber::zero(p.conductor()), CycNumber::zero(p.conductor()),
                                 CycNumber::zero(p.conductor()), CycNumber::zero(p.conductor()),
                                 CycNumber::zero(p.conductor())};
    for (int k = 0; k < 5; ++k) out[static_cast<std::size_t>(k)] = polys[static_cast<std::size_t>(k)].evaluate(point);
    return out;
}

// The explicit homogeneous vector field of F(alpha; lambda, mu, nu).
inline std::pair<MultiPoly, MultiPoly> field_components(const HomogeneousFamilyParams& p) {
    const int n = p.conductor();
    const MultiPoly x = MultiPoly::variable(n, Var::x);
    const MultiPoly y = MultiPoly::variable(n, Var::y);
    const MultiPoly al = MultiPoly::constant(p.alpha);
    const MultiPoly la = MultiPoly::constant(p.lambda);
    const MultiPoly mu = MultiPoly::constant(p.mu);
    const MultiPoly nu = MultiPoly::constant(p.nu);
    MultiPoly ymx = y - x;          // y - x
    MultiPoly ymax = y - al * x;    // y - alpha x
    MultiPoly X1 = -(x * (la * ymx * ymax + mu * y * ymax + nu * y * ymx));
    MultiPoly X2 = y * (ymx * ymax - mu * x * ymax - nu * al * x * ymx);
    return {std::move(X1), std::move(X2)};
}

} // namespace family

struct HomogeneousFamilyFoliation {
    HomogeneousFamilyParams params;
    Foliation foliation;
    std::array<CycNumber, 5> r; // closed-form r1..r5, cross-checked
};

// Build the family member and its quartic coefficients; the closed forms are
// verified against the discriminant factorization
//   Delta(P) = (lambda+mu+nu+1)^4 x^4 y^4 (y^2 - (alpha+1) x y + alpha x^2)^4 R(x, y).
inline HomogeneousFamilyFoliation homogeneous_family_build(const HomogeneousFamilyParams& p) {
    if (!p.admissible()) throw domain_error("inadmissible family parameters");
    const int n = p.conductor();
    auto [X1, X2] = family::field_components(p);
    if (!gcd(X1, X2).is_constant())
        throw domain_error("family field has a common factor at these parameters");
    Foliation F = Foliation::from_field(X1, X2);
    auto r = family::r_values(p);
    // Cross-check against the tangency discriminant.
    TrivolutionDiscriminant disc = trivolution_discriminant(F);
    const MultiPoly x = MultiPoly::variable(n, Var::x);
    const MultiPoly y = MultiPoly::variable(n, Var::y);
    const CycNumber one = CycNumber::one(n);
    MultiPoly conic = y * y - MultiPoly::constant(p.alpha + one) * x * y +
                      MultiPoly::constant(p.alpha) * x * x;
    MultiPoly R(n);
    for (int k = 0; k < 5; ++k) {
        Monomial m;
        m[Var::x] = static_cast<unsigned>(4 - k);
        m[Var::y] = static_cast<unsigned>(k);
        R.add_term(m, r[static_cast<std::size_t>(k)]);
    }
    CycNumber scale = (p.lambda + p.mu + p.nu + one).pow(4);
    MultiPoly expected = MultiPoly::constant(scale) * (x * y).pow(4) * conic.pow(4) * R;
    if (expected != disc.delta)
        throw error("internal: closed-form r_i disagree with the tangency discriminant");
    return {p, std::move(F), std::move(r)};
}

// Exact 4x4 Jacobian of (r1/r5, ..., r4/r5) with respect to
// (alpha, lambda, mu, nu), by symbolic differentiation of the closed forms.
inline CycMatrix family_jacobian(const HomogeneousFamilyParams& p) {
    const int n = p.conductor();
    const auto& polys = family::r_polynomials(n);
    std::array<CycNumber, 4> pt{p.alpha, p.lambda, p.mu, p.nu};
    CycNumber r5 = polys[4].evaluate(pt);
    if (r5.is_zero()) throw domain_error("family_jacobian: r5 vanishes, chart tau5 = 1 invalid");
    CycMatrix jac;
    for (int i = 0; i < 4; ++i) {
        CycNumber ri = polys[static_cast<std::size_t>(i)].evaluate(pt);
        CycVector row;
        for (Var v : all_vars) {
            CycNumber dri = polys[static_cast<std::size_t>(i)].derive(v).evaluate(pt);
            CycNumber dr5 = polys[4].derive(v).evaluate(pt);
            row.push_back((dri * r5 - ri * dr5) / (r5 * r5));
        }
        jac.push_back(std::move(row));
    }
    return jac;
}

// Proposition soleil: the two components of the alpha = -1 slice.
inline bool soleil_condition_a(const HomogeneousFamilyParams& p) {
    const int n = p.conductor();
    CycNumber four = CycNumber::from_int(n, 4), two = CycNumber::from_int(n, 2),
              one = CycNumber::one(n);
    return ((four - p.nu) * p.lambda - p.nu * (two * p.nu + one)).is_zero() && p.mu == p.nu;
}
inline bool soleil_condition_b(const HomogeneousFamilyParams& p) {
    const int n = p.conductor();
    CycNumber four = CycNumber::from_int(n, 4), two = CycNumber::from_int(n, 2),
              one = CycNumber::one(n);
    return p.lambda == one && (p.mu + p.nu - four * p.mu * p.nu + two).is_zero();
}

struct ScanRow {
    HomogeneousFamilyParams params;
    std::array<CycNumber, 5> r;
    bool is_square;                    // quartic_square_test of R
    std::optional<bool> soleil_match;  // alpha = -1 only: verdict == (a) or (b)
};

struct ScanReport {
    std::vector<ScanRow> rows;
    bool all_soleil_consistent = true;
};

inline ScanReport family_parameter_scan(const std::vector<HomogeneousFamilyParams>& grid) {
    ScanReport report;
    for (const auto& p : grid) {
        if (!p.admissible()) throw domain_error("inadmissible grid point");
        const int n = p.conductor();
        auto r = family::r_values(p);
        bool square = quartic_square_test(BinaryQuartic(r));
        ScanRow row{p, r, square, std::nullopt};
        if (p.alpha == CycNumber::from_int(n, -1)) {
            bool expected = soleil_condition_a(p) || soleil_condition_b(p);
            row.soleil_match = (square == expected);
            if (!*row.soleil_match) report.all_soleil_consistent = false;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

// ---------------------------------------------------------------------------
// Closed-form trivolution for the soleil family (a), with nut = sqrt(2 nu + 1):
//   T = (U1 / (W U2), V1 / (W V2)).

struct FamilyAClosedForm {
    MultiPoly U1, V1, W, U2, V2;
    BirationalMap map;
};

inline FamilyAClosedForm family_a_closed_trivolution(const CycNumber& nu, const CycNumber& nut) {
    const int n = nu.conductor();
    const CycNumber one = CycNumber::one(n), two = CycNumber::from_int(n, 2);
    if (nut * nut != two * nu + one) throw domain_error("nut^2 != 2 nu + 1");
    auto k = [&](long v) { return CycNumber::from_int(n, v); };
    auto c = [&](std::initializer_list<long> coeffs) {
        // polynomial in nu with the given coefficients, constant term first
        CycNumber acc = CycNumber::zero(n);
        CycNumber p = one;
        for (long v : coeffs) {
            acc += k(v) * p;
            p = p * nu;
        }
        return acc;
    };
    const MultiPoly x = MultiPoly::variable(n, Var::x);
    const MultiPoly y = MultiPoly::variable(n, Var::y);
    auto mono = [&](const CycNumber& coeff, unsigned dx, unsigned dy) {
        Monomial m;
        m[Var::x] = dx;
        m[Var::y] = dy;
        return MultiPoly::term(coeff, m);
    };
    const CycNumber tp1 = two * nu + one; // 2 nu + 1
    MultiPoly U1 = mono(nu * nut * tp1 * tp1, 5, 0) + mono(-c({4, 19, 28, 12}), 4, 1) +
                   mono(two * nu * nut * (nu - two * nu * nu + one), 3, 2) +
                   mono(two * c({4, 13, 13, 6}), 2, 3) + mono(-k(3) * nu * nut * tp1, 1, 4) +
                   mono(c({-4, -7, 2}), 0, 5);
    U1 = MultiPoly::constant(k(4)) * x * y * U1;
    MultiPoly V1 = mono(nu * c({1, 6, 12, 8}), 5, 0) + mono(nut * c({-4, -15, -12, 4}), 4, 1) +
                   mono(two * nut * c({-4, -3, 9, -2}), 2, 3) +
                   mono(-two * c({8, 35, 45, 16, 4}), 3, 2) + mono(c({16, 69, 84, 20}), 1, 4) +
                   mono(k(3) * nut * c({4, 7, -2}), 0, 5);
    V1 = MultiPoly::constant(k(4)) * x * y * V1;
    MultiPoly W = mono(nu * nu * tp1 * tp1, 4, 0) + mono(-two * c({8, 28, 25, 2}), 2, 2) +
                  mono((nu - k(4)) * (nu - k(4)), 0, 4);
    MultiPoly U2 = mono(tp1, 2, 0) + mono(-one, 0, 2);
    MultiPoly V2 = mono(tp1, 2, 0) + mono(-k(9), 0, 2);
    BirationalMap map = BirationalMap::from_affine(RationalFunction(U1, W * U2),
                                                   RationalFunction(V1, W * V2));
    return {std::move(U1), std::move(V1), std::move(W), std::move(U2), std::move(V2), std::move(map)};
}

// The soleil family (a) field for a given nu (cleared of the 4 - nu denominator).
inline Foliation family_a_foliation(const CycNumber& nu) {
    const int n = nu.conductor();
    const CycNumber one = CycNumber::one(n), two = CycNumber::from_int(n, 2);
    const CycNumber four = CycNumber::from_int(n, 4);
    if ((four - nu).is_zero()) throw domain_error("nu = 4 is outside the family");
    const MultiPoly x = MultiPoly::variable(n, Var::x);
    const MultiPoly y = MultiPoly::variable(n, Var::y);
    const CycNumber tp1 = two * nu + one;
    MultiPoly X1 = MultiPoly::constant(nu) * x *
                   (MultiPoly::constant(tp1) * x * x - MultiPoly::constant(CycNumber::from_int(n, 9)) * y * y);
    MultiPoly X2 = MultiPoly::constant(four - nu) *
                   (-(y * (MultiPoly::constant(tp1) * x * x - y * y)));
    return Foliation::from_field(std::move(X1), std::move(X2));
}

} // namespace geiser

#endif
