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

#ifndef GEISER_FOLIATION_HPP
#define GEISER_FOLIATION_HPP

#include "geiser/birational.hpp"

namespace geiser {

// omega = u dx + v dy + w dz, homogeneous of degree nu + 1, coprime
// components, Euler identity x u + y v + z w = 0.
struct HomogeneousOneForm {
    MultiPoly u, v, w;

    HomogeneousOneForm(MultiPoly u_, MultiPoly v_, MultiPoly w_)
        : u(std::move(u_)), v(std::move(v_)), w(std::move(w_)) {
        const int n = u.conductor();
        if (u.is_zero() && v.is_zero() && w.is_zero()) throw domain_error("zero 1-form");
        int d = -1;
        for (const auto* p : {&u, &v, &w}) {
            if (p->depends_on(Var::t)) throw domain_error("1-form lives in x, y, z");
            if (!p->is_homogeneous()) throw domain_error("1-form coefficients must be homogeneous");
            if (!p->is_zero()) {
                if (d >= 0 && p->degree() != d) throw domain_error("1-form coefficients of unequal degree");
                d = p->degree();
            }
        }
        MultiPoly euler = MultiPoly::variable(n, Var::x) * u + MultiPoly::variable(n, Var::y) * v +
                          MultiPoly::variable(n, Var::z) * w;
        if (!euler.is_zero()) throw domain_error("Euler identity x u + y v + z w = 0 violated");
        if (!gcd(gcd(u, v), w).is_constant()) throw domain_error("1-form has a common component");
    }

    int conductor() const { return u.conductor(); }
    int coefficient_degree() const { return std::max({u.degree(), v.degree(), w.degree()}); }
};

// Polynomial vector field X1 d/dx + X2 d/dy in the chart z = 1.
struct AffineVectorField {
    MultiPoly X1, X2;

    AffineVectorField(MultiPoly X1_, MultiPoly X2_) : X1(std::move(X1_)), X2(std::move(X2_)) {
        if (X1.is_zero() && X2.is_zero()) throw domain_error("zero vector field");
        for (const auto* p : {&X1, &X2})
            if (p->depends_on(Var::z) || p->depends_on(Var::t))
                throw domain_error("affine vector field lives in x, y");
    }

    int conductor() const { return X1.conductor(); }
    bool is_reduced() const { return gcd(X1, X2).is_constant(); }
    AffineVectorField reduced() const {
        MultiPoly g = gcd(X1, X2);
        if (g.is_constant()) return *this;
        return AffineVectorField(X1.exact_div(g), X2.exact_div(g));
    }
    // Collinear with the radial field x d/dx + y d/dy?
    bool is_radial_collinear() const {
        const int n = conductor();
        return (MultiPoly::variable(n, Var::x) * X2 - MultiPoly::variable(n, Var::y) * X1).is_zero();
    }
};

namespace detail {

// Homogeneous lift Z = E d/dx + F d/dy + G d/dz of degree nu describing the
// same foliation as the reduced affine field (omega = i_R i_Z dx^dy^dz).
struct HomogeneousLift {
    MultiPoly E, F, G;
    int nu;
};

inline HomogeneousLift lift_field(const AffineVectorField& X) {
    const int n = X.conductor();
    if (X.is_radial_collinear())
        throw domain_error("radial vector field: the foliation degenerates to the pencil of lines through the origin");
    const int d = std::max(X.X1.degree(), X.X2.degree());
    // Top-degree homogeneous parts.
    MultiPoly t1(n), t2(n);
    for (const auto& [m, c] : X.X1.terms())
        if (static_cast<int>(m.total()) == d) t1.add_term(m, c);
    for (const auto& [m, c] : X.X2.terms())
        if (static_cast<int>(m.total()) == d) t2.add_term(m, c);
    const MultiPoly vx = MultiPoly::variable(n, Var::x);
    const MultiPoly vy = MultiPoly::variable(n, Var::y);
    const bool radial_top = (vx * t2 - vy * t1).is_zero();
    if (!radial_top) {
        // nu = d; Z = homogenization of the field itself.
        return {X.X1.is_zero() ? X.X1 : X.X1.homogenize(Var::z, static_cast<unsigned>(d)),
                X.X2.is_zero() ? X.X2 : X.X2.homogenize(Var::z, static_cast<unsigned>(d)),
                MultiPoly::zero(n), d};
    }
    // Radial top: X = (X1' + x phi, X2' + y phi) with phi homogeneous of
    // degree d - 1; nu = d - 1 and Z picks up -phi d/dz.
    MultiPoly phi = t1.is_zero() ? t2.exact_div(vy) : t1.exact_div(vx);
    MultiPoly r1 = X.X1 - vx * phi;
    MultiPoly r2 = X.X2 - vy * phi;
    const unsigned nu = static_cast<unsigned>(d - 1);
    return {r1.is_zero() ? r1 : r1.homogenize(Var::z, nu),
            r2.is_zero() ? r2 : r2.homogenize(Var::z, nu), -phi, static_cast<int>(nu)};
}

} // namespace detail

// omega = i_R i_Z dx^dy^dz for the lift Z of the reduced field.
inline HomogeneousOneForm to_homogeneous_form(const AffineVectorField& field) {
    AffineVectorField X = field.reduced();
    auto Z = detail::lift_field(X);
    const int n = X.conductor();
    const MultiPoly vx = MultiPoly::variable(n, Var::x);
    const MultiPoly vy = MultiPoly::variable(n, Var::y);
    const MultiPoly vz = MultiPoly::variable(n, Var::z);
    MultiPoly u = Z.F * vz - Z.G * vy;
    MultiPoly v = Z.G * vx - Z.E * vz;
    MultiPoly w = Z.E * vy - Z.F * vx;
    MultiPoly g = gcd(gcd(u, v), w);
    if (!g.is_constant()) {
        u = u.exact_div(g);
        v = v.exact_div(g);
        w = w.exact_div(g);
    }
    return HomogeneousOneForm(std::move(u), std::move(v), std::move(w));
}

// Restriction to the chart z = 1: X1 = v(x,y,1), X2 = -u(x,y,1), reduced.
inline AffineVectorField to_affine_field(const HomogeneousOneForm& form) {
    MultiPoly X1 = form.v.dehomogenize(Var::z);
    MultiPoly X2 = -form.u.dehomogenize(Var::z);
    if (X1.is_zero() && X2.is_zero())
        throw domain_error("restriction to z = 1 vanishes: the line at infinity carries the whole form");
    return AffineVectorField(std::move(X1), std::move(X2)).reduced();
}

// A plane foliation, kept in both representations.  The affine field may be
// radial only when the foliation was built from a form (pencil of lines).
class Foliation {
public:
    static Foliation from_field(const AffineVectorField& field) {
        AffineVectorField X = field.reduced();
        HomogeneousOneForm form = to_homogeneous_form(X);
        return Foliation(std::move(X), std::move(form));
    }
    static Foliation from_field(MultiPoly X1, MultiPoly X2) {
        return from_field(AffineVectorField(std::move(X1), std::move(X2)));
    }
    static Foliation from_form(HomogeneousOneForm form) {
        AffineVectorField X = to_affine_field(form);
        if (!X.is_radial_collinear()) {
            // Round-trip consistency check: rebuilding the form from the
            // field must give back the same foliation.
            HomogeneousOneForm again = to_homogeneous_form(X);
            if (!(form.u * again.v - form.v * again.u).is_zero() ||
                !(form.u * again.w - form.w * again.u).is_zero() ||
                !(form.v * again.w - form.w * again.v).is_zero())
                throw domain_error("1-form and its affine restriction disagree");
        }
        return Foliation(std::move(X), std::move(form));
    }
    static Foliation from_form(MultiPoly u, MultiPoly v, MultiPoly w) {
        return from_form(HomogeneousOneForm(std::move(u), std::move(v), std::move(w)));
    }

    const AffineVectorField& field() const { return field_; }
    const HomogeneousOneForm& form() const { return form_; }
    int conductor() const { return form_.conductor(); }

    // Degree as the tangency count of a generic line.
    int degree() const { return form_.coefficient_degree() - 1; }

    Foliation embed(int target) const {
        return Foliation(AffineVectorField(field_.X1.embed(target), field_.X2.embed(target)),
                         HomogeneousOneForm(form_.u.embed(target), form_.v.embed(target),
                                            form_.w.embed(target)));
    }

private:
    Foliation(AffineVectorField field, HomogeneousOneForm form)
        : field_(std::move(field)), form_(std::move(form)) {}

    AffineVectorField field_;
    HomogeneousOneForm form_;
};

// ---------------------------------------------------------------------------
// Tangency polynomial Q(t) = Y1(t) X2 - Y2(t) X1 along the line m + t X(m).

struct TangencyData {
    MultiPoly Q;                  // in x, y, t; divisible by t
    MultiPoly P;                  // Q / t
    std::vector<MultiPoly> coeff; // coeff[k] = coefficient of t^k in P
    int nu;                       // foliation degree

    // For nu = 3: P = a t^2 + b t + c.
    const MultiPoly& a() const { return coeff.at(2); }
    const MultiPoly& b() const { return coeff.at(1); }
    const MultiPoly& c() const { return coeff.at(0); }
    // For nu = 2: P = a t + b.
    const MultiPoly& a2() const { return coeff.at(1); }
    const MultiPoly& b2() const { return coeff.at(0); }
};

inline TangencyData tangency_polynomial(const Foliation& F) {
    const AffineVectorField& X = F.field();
    if (X.is_radial_collinear()) throw domain_error("tangency polynomial needs a non-radial field");
    const int n = F.conductor();
    const MultiPoly tvar = MultiPoly::variable(n, Var::t);
    MultiPoly ax = MultiPoly::variable(n, Var::x) + tvar * X.X1;
    MultiPoly ay = MultiPoly::variable(n, Var::y) + tvar * X.X2;
    std::array<const MultiPoly*, 4> rep{&ax, &ay, nullptr, nullptr};
    SubstitutionEngine engine(n, rep);
    MultiPoly Y1 = engine(X.X1), Y2 = engine(X.X2);
    MultiPoly Q = Y1 * X.X2 - Y2 * X.X1;
    if (!Q.substitute(Var::t, CycNumber::zero(n)).is_zero())
        throw error("internal: tangency polynomial not divisible by t");
    if (Q.is_zero()) throw domain_error("tangency polynomial vanishes identically");
    MultiPoly P = Q.exact_div(tvar);
    const int nu = F.degree();
    if (P.degree(Var::t) != nu - 1)
        throw domain_error("tangency degree mismatch: deg_t(Q/t) = " + std::to_string(P.degree(Var::t)) +
                           " but the foliation has degree " + std::to_string(nu));
    TangencyData data{std::move(Q), std::move(P), {}, nu};
    auto coeffs = data.P.coefficients_in(Var::t);
    data.coeff = std::move(coeffs);
    if (nu == 3) {
        // Discriminant consistency: Delta(Q) = c^2 Delta(P) for Q = t P(t).
        const MultiPoly& a = data.coeff[2];
        const MultiPoly& b = data.coeff[1];
        const MultiPoly& c = data.coeff[0];
        MultiPoly delta_p = b * b - MultiPoly::constant(n, 4) * a * c;
        MultiPoly delta_q = b * b * c * c - MultiPoly::constant(n, 4) * a * c * c * c;
        if (delta_q != c * c * delta_p) throw error("internal: Delta(Q) != c^2 Delta(P)");
    }
    return data;
}

// Degree via the tangency count, cross-checked against the homogeneous
// representation.
inline int foliation_degree(const Foliation& F) {
    const int from_form = F.degree();
    if (!F.field().is_radial_collinear() && from_form >= 2) {
        TangencyData data = tangency_polynomial(F); // throws on mismatch
        if (data.nu != from_form) throw error("internal: degree cross-check failed");
    }
    return from_form;
}

// ---------------------------------------------------------------------------
// Inflection polynomial H = det [x E Z(E); y F Z(F); z G Z(G)].

inline MultiPoly inflection_polynomial(const Foliation& F) {
    const int n = F.conductor();
    auto Z = detail::lift_field(F.field().reduced());
    // Reject lifts collinear with the radial field.
    const MultiPoly vx = MultiPoly::variable(n, Var::x);
    const MultiPoly vy = MultiPoly::variable(n, Var::y);
    const MultiPoly vz = MultiPoly::variable(n, Var::z);
    if ((Z.E * vy - Z.F * vx).is_zero() && (Z.E * vz - Z.G * vx).is_zero() &&
        (Z.F * vz - Z.G * vy).is_zero())
        throw domain_error("lift collinear with the radial field");
    auto zder = [&](const MultiPoly& f) {
        return Z.E * f.derive(Var::x) + Z.F * f.derive(Var::y) + Z.G * f.derive(Var::z);
    };
    std::array<std::array<MultiPoly, 3>, 3> m{{{vx, Z.E, zder(Z.E)},
                                               {vy, Z.F, zder(Z.F)},
                                               {vz, Z.G, zder(Z.G)}}};
    MultiPoly h = det3(m);
    if (h.is_zero()) return h;
    return h.monic();
}

// ---------------------------------------------------------------------------
// Singular locus.

inline bool is_singular_point(const Foliation& F, const std::array<CycNumber, 3>& p) {
    if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero())
        throw domain_error("(0:0:0) is not a projective point");
    const int target = p[0].conductor();
    const HomogeneousOneForm& form = F.form();
    for (const MultiPoly* f : {&form.u, &form.v, &form.w}) {
        MultiPoly g = target == F.conductor() ? *f : f->embed(target);
        if (!g.evaluate_xyz(p[0], p[1], p[2]).is_zero()) return false;
    }
    return true;
}

// Resultant certificates whose roots contain all affine singular coordinates.
inline std::pair<MultiPoly, MultiPoly> singular_elimination(const Foliation& F) {
    const HomogeneousOneForm& form = F.form();
    MultiPoly ut = form.u.dehomogenize(Var::z);
    MultiPoly vt = form.v.dehomogenize(Var::z);
    MultiPoly ex = detail::resultant_allow_constant(ut, vt, Var::y);
    MultiPoly ey = detail::resultant_allow_constant(ut, vt, Var::x);
    if (ex.is_zero() || ey.is_zero())
        throw domain_error("non-isolated singularities in the chart z = 1");
    return {ex, ey};
}

// ---------------------------------------------------------------------------
// Isotropy: is the linear map g a symmetry of F?

inline bool is_symmetry(const Foliation& F, const BirationalMap& g) {
    if (g.degree() != 1) throw domain_error("is_symmetry expects a linear map");
    const int n = F.conductor();
    if (g.conductor() != n) throw conductor_mismatch("is_symmetry conductor mismatch");
    const HomogeneousOneForm& form = F.form();
    const auto& L = g.triple();
    std::array<const MultiPoly*, 4> rep{&L[0], &L[1], &L[2], nullptr};
    SubstitutionEngine engine(n, rep);
    std::array<MultiPoly, 3> omega{engine(form.u), engine(form.v), engine(form.w)};
    // Pullback: (g^* omega)_k = sum_i omega_i(g) d(L_i)/d(x_k).
    std::array<MultiPoly, 3> pulled{MultiPoly::zero(n), MultiPoly::zero(n), MultiPoly::zero(n)};
    const std::array<Var, 3> xyz{Var::x, Var::y, Var::z};
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            pulled[static_cast<std::size_t>(k)] +=
                omega[static_cast<std::size_t>(i)] * L[static_cast<std::size_t>(i)].derive(xyz[static_cast<std::size_t>(k)]);
    // Proportionality to the original form.
    std::array<const MultiPoly*, 3> orig{&form.u, &form.v, &form.w};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!(pulled[static_cast<std::size_t>(i)] * (*orig[static_cast<std::size_t>(j)]) -
                  pulled[static_cast<std::size_t>(j)] * (*orig[static_cast<std::size_t>(i)]))
                     .is_zero())
                return false;
    return true;
}

// Tangency curve between F and the pencil of lines through q: the locus
// where the direction of F passes through q, i.e. det [m  Z(m)  q] with Z a
// homogeneous lift of F.  Degree nu + 1.
inline MultiPoly pencil_tangency_curve(const Foliation& F, const std::array<CycNumber, 3>& q) {
    if (q[0].is_zero() && q[1].is_zero() && q[2].is_zero())
        throw domain_error("(0:0:0) is not a projective point");
    const int n = F.conductor();
    auto Z = detail::lift_field(F.field().reduced());
    std::array<std::array<MultiPoly, 3>, 3> m{
        {{MultiPoly::variable(n, Var::x), Z.E, MultiPoly::constant(q[0])},
         {MultiPoly::variable(n, Var::y), Z.F, MultiPoly::constant(q[1])},
         {MultiPoly::variable(n, Var::z), Z.G, MultiPoly::constant(q[2])}}};
    MultiPoly tang = det3(m);
    if (tang.is_zero()) throw domain_error("pencil tangency curve degenerates");
    return tang.monic();
}

// Is the projective line (a linear form in x, y, z) invariant under F?
inline bool is_invariant_line(const Foliation& F, const MultiPoly& line) {
    if (line.degree() != 1 || !line.is_homogeneous()) throw domain_error("expected a linear form");
    const int n = F.conductor();
    // Two points spanning the line, as columns of a parametrization
    // p(s, t) = s P + t Q; the line is invariant iff omega(p) . Q = 0.
    std::array<CycNumber, 3> coeff{line.coefficient(Monomial{{1, 0, 0, 0}}),
                                   line.coefficient(Monomial{{0, 1, 0, 0}}),
                                   line.coefficient(Monomial{{0, 0, 1, 0}})};
    int pivot = 0;
    while (pivot < 3 && coeff[static_cast<std::size_t>(pivot)].is_zero()) ++pivot;
    if (pivot == 3) throw domain_error("expected a linear form");
    // Two independent points on the line: coeff[pivot] e_l - coeff[l] e_pivot.
    std::array<std::array<CycNumber, 3>, 2> pts{{{CycNumber::zero(n), CycNumber::zero(n), CycNumber::zero(n)},
                                                 {CycNumber::zero(n), CycNumber::zero(n), CycNumber::zero(n)}}};
    int found = 0;
    for (int l = 0; l < 3; ++l) {
        if (l == pivot) continue;
        pts[static_cast<std::size_t>(found)][static_cast<std::size_t>(l)] = coeff[static_cast<std::size_t>(pivot)];
        pts[static_cast<std::size_t>(found)][static_cast<std::size_t>(pivot)] =
            pts[static_cast<std::size_t>(found)][static_cast<std::size_t>(pivot)] - coeff[static_cast<std::size_t>(l)];
        ++found;
    }
    // p(s, t) with s -> x, t -> y as parameters.
    const MultiPoly s = MultiPoly::variable(n, Var::x);
    const MultiPoly tt = MultiPoly::variable(n, Var::y);
    std::array<MultiPoly, 3> param{MultiPoly::zero(n), MultiPoly::zero(n), MultiPoly::zero(n)};
    for (int k = 0; k < 3; ++k)
        param[static_cast<std::size_t>(k)] =
            s * MultiPoly::constant(pts[0][static_cast<std::size_t>(k)]) +
            tt * MultiPoly::constant(pts[1][static_cast<std::size_t>(k)]);
    std::array<const MultiPoly*, 4> rep{&param[0], &param[1], &param[2], nullptr};
    SubstitutionEngine engine(n, rep);
    const HomogeneousOneForm& form = F.form();
    MultiPoly pairing(n);
    const std::array<const MultiPoly*, 3> omega{&form.u, &form.v, &form.w};
    for (int k = 0; k < 3; ++k)
        pairing += engine(*omega[static_cast<std::size_t>(k)]) * MultiPoly::constant(pts[1][static_cast<std::size_t>(k)]);
    return pairing.is_zero();
}

// ---------------------------------------------------------------------------
// Reverse construction: the foliation attached to an involution.

struct InvolutionFoliation {
    Foliation foliation;
    int degree;            // nu
    bool degree_even;      // the paper's parity property
    MultiPoly fix_curve;   // fixed_curve(I)
    int fix_degree;        // 0 when only isolated fixed points
    bool degree_bound_ok;  // nu <= deg I - deg Fix(I)
};

inline InvolutionFoliation foliation_from_involution(const BirationalMap& I) {
    if (is_identity(I)) throw domain_error("foliation of the identity involution");
    const int n = I.conductor();
    auto [I1, I2] = I.affine_pair();
    RationalFunction rx = RationalFunction::variable(n, Var::x) - I1;
    RationalFunction ry = RationalFunction::variable(n, Var::y) - I2;
    // Clear to the common denominator and reduce.
    MultiPoly L = lcm(rx.denominator(), ry.denominator());
    MultiPoly X1 = rx.numerator() * L.exact_div(rx.denominator());
    MultiPoly X2 = ry.numerator() * L.exact_div(ry.denominator());
    if (X1.is_zero() && X2.is_zero()) throw domain_error("foliation of the identity involution");
    Foliation F = Foliation::from_field(AffineVectorField(std::move(X1), std::move(X2)));
    MultiPoly fix = fixed_curve(I);
    const int fix_deg = fix.is_constant() ? 0 : fix.degree();
    InvolutionFoliation out{F,
                            F.degree(),
                            F.degree() % 2 == 0,
                            std::move(fix),
                            fix_deg,
                            F.degree() <= I.degree() - fix_deg};
    return out;
}

} // namespace geiser

#endif
