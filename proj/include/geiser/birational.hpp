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

#ifndef GEISER_BIRATIONAL_HPP
#define GEISER_BIRATIONAL_HPP

#include "geiser/ratfunc.hpp"

namespace geiser {

namespace detail {

// (c0 : c1 : c2) proportional to (x : y : z)?
inline bool proportional_to_identity(const std::array<MultiPoly, 3>& c) {
    const int n = c[0].conductor();
    const MultiPoly X = MultiPoly::variable(n, Var::x);
    const MultiPoly Y = MultiPoly::variable(n, Var::y);
    const MultiPoly Z = MultiPoly::variable(n, Var::z);
    return (c[0] * Y - c[1] * X).is_zero() && (c[0] * Z - c[2] * X).is_zero() &&
           (c[1] * Z - c[2] * Y).is_zero();
}

// Divide the three components by their full gcd.  The proportional-to-identity
// case is resolved by a certified exact division, which keeps the hot path of
// period checks (deg 8 squarings reach raw degree 64) away from the PRS.
inline std::array<MultiPoly, 3> reduce_triple(std::array<MultiPoly, 3> c) {
    const int n = c[0].conductor();
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero())
        throw domain_error("degenerate composition: all components vanish");
    Monomial shared;
    {
        bool first = true;
        for (const auto& p : c) {
            if (p.is_zero()) continue;
            Monomial m = p.monomial_content();
            if (first) {
                shared = m;
                first = false;
            } else {
                for (int i = 0; i < 4; ++i)
                    shared.e[static_cast<std::size_t>(i)] =
                        std::min(shared.e[static_cast<std::size_t>(i)], m.e[static_cast<std::size_t>(i)]);
            }
        }
    }
    if (!shared.is_one())
        for (auto& p : c)
            if (!p.is_zero()) p = p.divide_monomial(shared);
    if (proportional_to_identity(c)) {
        return {MultiPoly::variable(n, Var::x), MultiPoly::variable(n, Var::y),
                MultiPoly::variable(n, Var::z)};
    }
    MultiPoly g = gcd(gcd(c[0], c[1]), c[2]);
    if (!g.is_constant())
        for (auto& p : c) p = p.exact_div(g);
    return c;
}

// Scale the triple by one rational so every coordinate is an integer and the
// common integer content is 1.  Projectively a no-op; keeps the coefficient
// arithmetic of later compositions on integers.
inline void integer_normalize_triple(std::array<MultiPoly, 3>& c) {
    BigInt lcm_den = 1, gcd_num = 0;
    for (const auto& p : c)
        for (const auto& [m, coeff] : p.terms())
            for (const auto& q : coeff.coords()) {
                if (q == 0) continue;
                lcm_den = boost::multiprecision::lcm(lcm_den, den(q));
            }
    for (const auto& p : c)
        for (const auto& [m, coeff] : p.terms())
            for (const auto& q : coeff.coords()) {
                if (q == 0) continue;
                gcd_num = boost::multiprecision::gcd(gcd_num, num(q) * (lcm_den / den(q)));
            }
    if (gcd_num == 0) return;
    BigRational scale(lcm_den, gcd_num);
    if (scale == 1) return;
    const int n = c[0].conductor();
    for (auto& p : c) p = p * CycNumber::from_rational(n, scale);
}

} // namespace detail

// A rational self-map of the projective plane: a reduced triple of
// homogeneous polynomials of equal degree.  Everything downstream compares
// maps with projective_equal, never coefficient-wise.
class BirationalMap {
public:
    static BirationalMap from_triple(MultiPoly f0, MultiPoly f1, MultiPoly f2) {
        std::array<MultiPoly, 3> c{std::move(f0), std::move(f1), std::move(f2)};
        for (const auto& p : c) {
            if (p.conductor() != c[0].conductor()) throw conductor_mismatch("map conductor mismatch");
            if (p.depends_on(Var::t)) throw domain_error("map components must live in x, y, z");
            if (!p.is_homogeneous()) throw domain_error("map components must be homogeneous");
        }
        c = detail::reduce_triple(std::move(c));
        detail::integer_normalize_triple(c);
        int d = -1;
        for (const auto& p : c)
            if (!p.is_zero()) {
                if (d >= 0 && p.degree() != d) throw domain_error("map components of unequal degree");
                d = p.degree();
            }
        return BirationalMap(std::move(c), d);
    }

    static BirationalMap identity(int conductor) {
        return BirationalMap({MultiPoly::variable(conductor, Var::x),
                              MultiPoly::variable(conductor, Var::y),
                              MultiPoly::variable(conductor, Var::z)},
                             1);
    }

    // Affine pair (I1(x,y), I2(x,y)) in the chart z = 1.
    static BirationalMap from_affine(const RationalFunction& I1, const RationalFunction& I2) {
        const int n = I1.conductor();
        for (const auto* f : {&I1, &I2})
            if (f->numerator().depends_on(Var::z) || f->numerator().depends_on(Var::t) ||
                f->denominator().depends_on(Var::z) || f->denominator().depends_on(Var::t))
                throw domain_error("affine map components must live in x, y");
        MultiPoly L = lcm(I1.denominator(), I2.denominator());
        MultiPoly a0 = I1.numerator() * L.exact_div(I1.denominator());
        MultiPoly a1 = I2.numerator() * L.exact_div(I2.denominator());
        const unsigned target =
            static_cast<unsigned>(std::max({a0.degree(), a1.degree(), L.degree(), 0}));
        MultiPoly f0 = a0.is_zero() ? a0 : a0.homogenize(Var::z, target);
        MultiPoly f1 = a1.is_zero() ? a1 : a1.homogenize(Var::z, target);
        MultiPoly f2 = L.homogenize(Var::z, target);
        return from_triple(std::move(f0), std::move(f1), std::move(f2));
    }

    const std::array<MultiPoly, 3>& triple() const { return f_; }
    int degree() const { return degree_; }
    int conductor() const { return f_[0].conductor(); }

    std::pair<RationalFunction, RationalFunction> affine_pair() const {
        MultiPoly u0 = f_[0].dehomogenize(Var::z);
        MultiPoly u1 = f_[1].dehomogenize(Var::z);
        MultiPoly u2 = f_[2].dehomogenize(Var::z);
        if (u2.is_zero()) throw domain_error("map contracts the affine chart z = 1");
        return {RationalFunction(u0, u2), RationalFunction(u1, u2)};
    }

    std::array<CycNumber, 3> apply(const std::array<CycNumber, 3>& p) const {
        const int target = p[0].conductor();
        std::array<CycNumber, 3> out{CycNumber::zero(target), CycNumber::zero(target),
                                     CycNumber::zero(target)};
        for (int k = 0; k < 3; ++k) {
            MultiPoly f = f_[static_cast<std::size_t>(k)];
            if (target != conductor()) f = f.embed(target);
            out[static_cast<std::size_t>(k)] = f.evaluate_xyz(p[0], p[1], p[2]);
        }
        return out;
    }

    BirationalMap embed(int target) const {
        return from_triple(f_[0].embed(target), f_[1].embed(target), f_[2].embed(target));
    }

    std::string to_string() const {
        return "(" + f_[0].to_string() + " : " + f_[1].to_string() + " : " + f_[2].to_string() + ")";
    }

private:
    BirationalMap(std::array<MultiPoly, 3> f, int degree) : f_(std::move(f)), degree_(degree) {}

    std::array<MultiPoly, 3> f_;
    int degree_;
};

inline std::ostream& operator<<(std::ostream& os, const BirationalMap& f) { return os << f.to_string(); }

// Degree of the reduced triple.
inline int map_degree(const BirationalMap& f) { return f.degree(); }

// Equality up to a nonzero scalar / common factor: f_i g_j - f_j g_i = 0.
inline bool projective_equal(const BirationalMap& f, const BirationalMap& g) {
    const auto& a = f.triple();
    const auto& b = g.triple();
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!(a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] -
                  a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(i)])
                     .is_zero())
                return false;
    return true;
}

struct ComposeInfo {
    int raw_degree = 0;
    int reduced_degree = 0;
    bool common_factor_removed = false;
};

// Substitution g into f, then division by the gcd of the three components.
inline BirationalMap compose(const BirationalMap& f, const BirationalMap& g,
                             ComposeInfo* info = nullptr) {
    const auto& inner = g.triple();
    std::array<const MultiPoly*, 4> rep{&inner[0], &inner[1], &inner[2], nullptr};
    SubstitutionEngine engine(f.conductor(), rep);
    BirationalMap result = BirationalMap::from_triple(engine(f.triple()[0]), engine(f.triple()[1]),
                                                      engine(f.triple()[2]));
    if (info) {
        info->raw_degree = f.degree() * g.degree();
        info->reduced_degree = result.degree();
        info->common_factor_removed = info->reduced_degree < info->raw_degree;
    }
    return result;
}

namespace detail {

// Integer coefficient tables for fast pointwise evaluation of a map whose
// (normalized) triple has purely rational -- hence integer -- coefficients.
struct IntegerTriple {
    struct Term {
        BigInt c;
        unsigned ex, ey, ez;
    };
    std::array<std::vector<Term>, 3> comp;
    unsigned max_deg = 0;

    static std::optional<IntegerTriple> from(const BirationalMap& f) {
        IntegerTriple out;
        for (int k = 0; k < 3; ++k) {
            for (const auto& [m, c] : f.triple()[static_cast<std::size_t>(k)].terms()) {
                if (!c.is_rational()) return std::nullopt;
                const BigRational& q = c.rational_value();
                if (den(q) != 1) return std::nullopt;
                out.comp[static_cast<std::size_t>(k)].push_back(
                    {num(q), m[Var::x], m[Var::y], m[Var::z]});
                out.max_deg = std::max(out.max_deg, m.total());
            }
        }
        return out;
    }

    std::array<BigInt, 3> apply(const std::array<BigInt, 3>& p) const {
        std::array<std::vector<BigInt>, 3> pows;
        for (int v = 0; v < 3; ++v) {
            pows[static_cast<std::size_t>(v)].reserve(max_deg + 1);
            pows[static_cast<std::size_t>(v)].push_back(1);
            for (unsigned k = 1; k <= max_deg; ++k)
                pows[static_cast<std::size_t>(v)].push_back(pows[static_cast<std::size_t>(v)].back() *
                                                            p[static_cast<std::size_t>(v)]);
        }
        std::array<BigInt, 3> out{0, 0, 0};
        for (int k = 0; k < 3; ++k)
            for (const auto& t : comp[static_cast<std::size_t>(k)])
                out[static_cast<std::size_t>(k)] += t.c * pows[0][t.ex] * pows[1][t.ey] * pows[2][t.ez];
        return out;
    }
};

// Does f∘g equal the identity projectively?  Certified by exact evaluation on
// an integer grid: the cross products (f∘g)_i x_j - (f∘g)_j x_i are
// homogeneous of degree deg f * deg g + 1, and a homogeneous form vanishes
// identically iff its z = 1 restriction vanishes on a grid exceeding the
// per-variable degree bounds.  Composed values are computed pointwise, so the
// degree-64 products of period checks never materialize symbolically.
inline bool composes_to_identity(const BirationalMap& f, const BirationalMap& g) {
    const int n = f.conductor();
    const long bound = static_cast<long>(f.degree()) * g.degree() + 1;
    bool saw_nonzero = false;
    auto fi = IntegerTriple::from(f);
    auto gi = IntegerTriple::from(g);
    if (fi && gi) {
        for (long a = 0; a <= bound; ++a) {
            for (long b = 0; b <= bound; ++b) {
                auto w = fi->apply(gi->apply({BigInt(a), BigInt(b), BigInt(1)}));
                if (w[0] == 0 && w[1] == 0 && w[2] == 0) continue;
                saw_nonzero = true;
                if (w[0] * b != w[1] * a || w[0] != w[2] * a || w[1] != w[2] * b) return false;
            }
        }
    } else {
        const CycNumber one = CycNumber::one(n);
        for (long a = 0; a <= bound; ++a) {
            for (long b = 0; b <= bound; ++b) {
                std::array<CycNumber, 3> p{CycNumber::from_int(n, a), CycNumber::from_int(n, b), one};
                auto w = f.apply(g.apply(p));
                if (w[0].is_zero() && w[1].is_zero() && w[2].is_zero()) continue;
                saw_nonzero = true;
                if (!(w[0] * p[1] - w[1] * p[0]).is_zero() || !(w[0] * p[2] - w[2] * p[0]).is_zero() ||
                    !(w[1] * p[2] - w[2] * p[1]).is_zero())
                    return false;
            }
        }
    }
    if (!saw_nonzero)
        throw domain_error("degenerate composition: all components vanish");
    return true;
}

} // namespace detail

inline bool is_identity(const BirationalMap& f) {
    return projective_equal(f, BirationalMap::identity(f.conductor()));
}

// True iff f^n = id and no smaller positive power is the identity; n in {2, 3}.
inline bool verify_period(const BirationalMap& f, int n) {
    if (n != 2 && n != 3) throw domain_error("verify_period supports n in {2, 3}");
    if (is_identity(f)) return false;
    if (n == 2) return detail::composes_to_identity(f, f);
    BirationalMap f2 = compose(f, f);
    if (is_identity(f2)) return false; // period 2
    return detail::composes_to_identity(f2, f);
}

// Jacobian determinant of the reduced triple; its zero set is Exc(f).
inline MultiPoly jacobian_determinant(const BirationalMap& f) {
    const auto& c = f.triple();
    std::array<std::array<MultiPoly, 3>, 3> m{
        {{c[0].derive(Var::x), c[0].derive(Var::y), c[0].derive(Var::z)},
         {c[1].derive(Var::x), c[1].derive(Var::y), c[1].derive(Var::z)},
         {c[2].derive(Var::x), c[2].derive(Var::y), c[2].derive(Var::z)}}};
    MultiPoly det = det3(m);
    if (det.is_zero()) throw domain_error("degenerate map: jacobian determinant vanishes identically");
    return det;
}

struct ExceptionalDivisibility {
    bool divides = false;
    int multiplicity = 0;
};

// Does the candidate curve divide the jacobian determinant, and how often?
inline ExceptionalDivisibility exceptional_divisibility(const BirationalMap& f, const MultiPoly& curve) {
    if (curve.is_constant()) throw domain_error("exceptional candidate must be nonconstant");
    MultiPoly jac = jacobian_determinant(f);
    ExceptionalDivisibility out;
    while (true) {
        auto q = jac.try_exact_div(curve);
        if (!q) break;
        out.divides = true;
        ++out.multiplicity;
        jac = *q;
    }
    return out;
}

// The one-dimensional part of Fix(f): gcd of the numerators of I1 - x and
// I2 - y in the chart z = 1, homogenized.  Constant result = only isolated
// fixed points.
inline MultiPoly fixed_curve(const BirationalMap& f) {
    if (is_identity(f)) throw domain_error("fixed curve of the identity");
    const int n = f.conductor();
    auto [I1, I2] = f.affine_pair();
    MultiPoly a = I1.numerator() - MultiPoly::variable(n, Var::x) * I1.denominator();
    MultiPoly b = I2.numerator() - MultiPoly::variable(n, Var::y) * I2.denominator();
    if (a.is_zero() || b.is_zero()) {
        // One coordinate is fixed identically; the curve part is carried by
        // the other numerator.
        MultiPoly c = a.is_zero() ? b : a;
        if (c.is_zero()) throw domain_error("fixed curve of the identity");
        return c.homogenize(Var::z, static_cast<unsigned>(c.degree())).monic();
    }
    MultiPoly g = gcd(a, b);
    if (g.is_constant()) return MultiPoly::one(n);
    return g.homogenize(Var::z, static_cast<unsigned>(g.degree())).monic();
}

inline bool is_indeterminacy_point(const BirationalMap& f, const std::array<CycNumber, 3>& p) {
    if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero())
        throw domain_error("(0:0:0) is not a projective point");
    auto img = f.apply(p);
    return img[0].is_zero() && img[1].is_zero() && img[2].is_zero();
}

// Elimination certificates for Ind(f): pairwise resultants of the components
// in the chart z = 1 (eliminating y, then x) plus the gcd of the components
// restricted to the line z = 0.
struct IndeterminacyCertificate {
    std::vector<MultiPoly> pairwise_elim_x; // Res_y(fi~, fj~): polynomials in x
    std::vector<MultiPoly> pairwise_elim_y; // Res_x(fi~, fj~): polynomials in y
    MultiPoly elim_x;                       // gcd of the first list
    MultiPoly elim_y;                       // gcd of the second list
    MultiPoly at_infinity;                  // gcd of the f_i(x, y, 0)
};

namespace detail {

// Resultant with the classical conventions for arguments of degree zero in
// the eliminated variable (needed when a component does not involve it).
inline MultiPoly resultant_allow_constant(const MultiPoly& p, const MultiPoly& q, Var v) {
    const int dp = p.degree(v), dq = q.degree(v);
    if (dp <= 0 && dq <= 0) throw domain_error("no variable to eliminate");
    if (dp <= 0) return p.pow(static_cast<unsigned>(dq));
    if (dq <= 0) return q.pow(static_cast<unsigned>(dp));
    return resultant(p, q, v);
}

} // namespace detail

inline IndeterminacyCertificate indeterminacy_certificate(const BirationalMap& f) {
    const int n = f.conductor();
    IndeterminacyCertificate cert{{}, {}, MultiPoly::zero(n), MultiPoly::zero(n), MultiPoly::zero(n)};
    std::array<MultiPoly, 3> aff{f.triple()[0].dehomogenize(Var::z), f.triple()[1].dehomogenize(Var::z),
                                 f.triple()[2].dehomogenize(Var::z)};
    std::array<MultiPoly, 3> inf{f.triple()[0].substitute(Var::z, CycNumber::zero(n)),
                                 f.triple()[1].substitute(Var::z, CycNumber::zero(n)),
                                 f.triple()[2].substitute(Var::z, CycNumber::zero(n))};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const auto& a = aff[static_cast<std::size_t>(i)];
            const auto& b = aff[static_cast<std::size_t>(j)];
            cert.pairwise_elim_x.push_back(detail::resultant_allow_constant(a, b, Var::y));
            cert.pairwise_elim_y.push_back(detail::resultant_allow_constant(a, b, Var::x));
        }
    cert.elim_x = detail::gcd_list(cert.pairwise_elim_x, n);
    cert.elim_y = detail::gcd_list(cert.pairwise_elim_y, n);
    cert.at_infinity = gcd(gcd(inf[0], inf[1]), inf[2]);
    return cert;
}

// 3x3 matrix of a degree-1 map.
inline std::array<std::array<CycNumber, 3>, 3> linear_matrix(const BirationalMap& f) {
    if (f.degree() != 1) throw domain_error("map is not linear");
    const int n = f.conductor();
    std::array<std::array<CycNumber, 3>, 3> m{{{CycNumber::zero(n), CycNumber::zero(n), CycNumber::zero(n)},
                                               {CycNumber::zero(n), CycNumber::zero(n), CycNumber::zero(n)},
                                               {CycNumber::zero(n), CycNumber::zero(n), CycNumber::zero(n)}}};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            Monomial mono;
            mono[static_cast<Var>(k)] = 1;
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                f.triple()[static_cast<std::size_t>(i)].coefficient(mono);
        }
    return m;
}

inline BirationalMap from_matrix(int conductor, const std::array<std::array<CycNumber, 3>, 3>& m) {
    std::array<MultiPoly, 3> c{MultiPoly::zero(conductor), MultiPoly::zero(conductor),
                               MultiPoly::zero(conductor)};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            Monomial mono;
            mono[static_cast<Var>(k)] = 1;
            c[static_cast<std::size_t>(i)].add_term(mono, m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
        }
    return BirationalMap::from_triple(std::move(c[0]), std::move(c[1]), std::move(c[2]));
}

// Inverse of a degree-1 map via the adjugate.
inline BirationalMap linear_inverse(const BirationalMap& f) {
    auto m = linear_matrix(f);
    const int n = f.conductor();
    auto minor2 = [&](int r0, int r1, int c0, int c1) {
        return m[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c0)] * m[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)] -
               m[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c1)] * m[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c0)];
    };
    std::array<std::array<CycNumber, 3>, 3> adj{{{CycNumber::zero(n), CycNumber::zero(n), CycNumber::zero(n)},
                                                 {CycNumber::zero(n), CycNumber::zero(n), CycNumber::zero(n)},
                                                 {CycNumber::zero(n), CycNumber::zero(n), CycNumber::zero(n)}}};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            int r0 = (k + 1) % 3, r1 = (k + 2) % 3;
            int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = minor2(r0, r1, c0, c1);
        }
    CycNumber det = m[0][0] * adj[0][0] + m[0][1] * adj[1][0] + m[0][2] * adj[2][0];
    if (det.is_zero()) throw domain_error("linear map not invertible");
    return from_matrix(n, adj);
}

inline BirationalMap conjugate_by_linear(const BirationalMap& f, const BirationalMap& g) {
    return compose(compose(g, f), linear_inverse(g));
}

} // namespace geiser

#endif
