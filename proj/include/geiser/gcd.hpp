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

#ifndef GEISER_GCD_HPP
#define GEISER_GCD_HPP

#include "geiser/multipoly.hpp"

#include <optional>
#include <vector>

namespace geiser {

MultiPoly gcd(const MultiPoly& p, const MultiPoly& q);

namespace detail {

// Pseudo-remainder of a by b in v: lc_v(b)^(deg a - deg b + 1) * a mod b.
inline MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Var v) {
    const int da = a.degree(v), db = b.degree(v);
    if (db < 0) throw domain_error("pseudo-division by zero");
    if (da < db) return a;
    const MultiPoly lcb = b.coefficient_of(v, static_cast<unsigned>(db));
    MultiPoly rem = a;
    int scale_left = da - db + 1;
    while (!rem.is_zero() && rem.degree(v) >= db) {
        const int dr = rem.degree(v);
        MultiPoly lcr = rem.coefficient_of(v, static_cast<unsigned>(dr));
        MultiPoly shift = MultiPoly::variable(a.conductor(), v, static_cast<unsigned>(dr - db));
        rem = lcb * rem - lcr * shift * b;
        --scale_left;
    }
    if (scale_left > 0) rem = rem * lcb.pow(static_cast<unsigned>(scale_left));
    return rem;
}

inline std::vector<Var> variables_of(const MultiPoly& p, const MultiPoly& q) {
    std::vector<Var> vs;
    for (Var v : all_vars)
        if (p.depends_on(v) || q.depends_on(v)) vs.push_back(v);
    return vs;
}

inline MultiPoly gcd_list(const std::vector<MultiPoly>& polys, int conductor) {
    MultiPoly acc = MultiPoly::zero(conductor);
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        acc = acc.is_zero() ? p : gcd(acc, p);
        if (acc.is_constant() && !acc.is_zero()) return MultiPoly::one(conductor);
    }
    return acc;
}

// Content of p with respect to v (gcd of the v-coefficients).
inline MultiPoly content_in(const MultiPoly& p, Var v) {
    return gcd_list(p.coefficients_in(v), p.conductor());
}

// Deterministic evaluation points for the coprimality shortcut.
inline const std::vector<long>& eval_sequence() {
    static const std::vector<long> seq{1, -1, 2, -2, 3, -3, 5, -5, 7, 0};
    return seq;
}

// Certified test that the primitive parts are coprime: evaluate every
// variable but v at rationals keeping both leading coefficients alive; a
// constant gcd of the images forces gcd of the primitive parts to be 1.
inline bool eval_coprime_certificate(const MultiPoly& a, const MultiPoly& b, Var v) {
    const int n = a.conductor();
    const int da = a.degree(v), db = b.degree(v);
    const MultiPoly lca = a.coefficient_of(v, static_cast<unsigned>(da));
    const MultiPoly lcb = b.coefficient_of(v, static_cast<unsigned>(db));
    std::vector<Var> others;
    for (Var w : all_vars)
        if (w != v && (a.depends_on(w) || b.depends_on(w))) others.push_back(w);
    if (others.empty()) return false; // already univariate
    for (std::size_t attempt = 0; attempt < eval_sequence().size(); ++attempt) {
        MultiPoly ea = a, eb = b, ela = lca, elb = lcb;
        for (std::size_t i = 0; i < others.size(); ++i) {
            long value = eval_sequence()[(attempt + 3 * i) % eval_sequence().size()];
            CycNumber c = CycNumber::from_int(n, value);
            ea = ea.substitute(others[i], c);
            eb = eb.substitute(others[i], c);
            ela = ela.substitute(others[i], c);
            elb = elb.substitute(others[i], c);
        }
        if (ela.is_zero() || elb.is_zero()) continue; // unlucky point
        MultiPoly g = gcd(ea, eb);
        return g.is_constant() && !g.is_zero();
    }
    return false;
}

// Primitive PRS in v over the remaining variables.  Both arguments must be
// primitive with respect to v.
inline MultiPoly primitive_prs_gcd(MultiPoly a, MultiPoly b, Var v) {
    if (a.degree(v) < b.degree(v)) std::swap(a, b);
    while (true) {
        MultiPoly r = pseudo_remainder(a, b, v);
        if (r.is_zero()) break;
        if (r.degree(v) == 0) return MultiPoly::one(a.conductor());
        MultiPoly cont = content_in(r, v);
        r = r.exact_div(cont).integer_primitive();
        a = std::move(b);
        b = std::move(r);
    }
    return b;
}

// Univariate gcd over the field, via the primitive PRS on integer-primitive
// representatives (controls coordinate growth much better than monic Euclid).
inline MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b, Var v) {
    MultiPoly g = primitive_prs_gcd(a.integer_primitive(), b.integer_primitive(), v);
    if (g.is_constant()) return MultiPoly::one(a.conductor());
    return g.monic();
}

// Certified evaluation-interpolation gcd for the bivariate case (Brown).
// Inputs must be primitive with respect to v and genuinely bivariate in
// (v, w).  Evaluates w at rationals, takes univariate gcds, interpolates the
// leading-coefficient-scaled images and certifies the result by exact
// division; the PRS remains as the fallback for unlucky point sets.
inline std::optional<MultiPoly> bivariate_gcd_by_evaluation(const MultiPoly& p, const MultiPoly& q,
                                                            Var v, Var w) {
    const int n = p.conductor();
    const int dpv = p.degree(v), dqv = q.degree(v);
    const MultiPoly lcp = p.coefficient_of(v, static_cast<unsigned>(dpv));
    const MultiPoly lcq = q.coefficient_of(v, static_cast<unsigned>(dqv));
    const MultiPoly gamma = gcd(lcp, lcq); // univariate in w
    const int bound = gamma.degree() + std::min(p.degree(w), q.degree(w)) + 1;
    struct Sample {
        CycNumber at;
        MultiPoly image; // gamma(at) * monic univariate gcd
    };
    std::vector<Sample> samples;
    int best_degree = INT32_MAX;
    long next = 0;
    long tried = 0;
    const long max_tries = 8 * bound + 32;
    while (static_cast<int>(samples.size()) < bound + 1 && tried < max_tries) {
        long value = (next % 2 == 0) ? next / 2 : -(next / 2 + 1);
        ++next;
        ++tried;
        CycNumber at = CycNumber::from_int(n, value);
        if (lcp.substitute(w, at).is_zero() || lcq.substitute(w, at).is_zero()) continue;
        MultiPoly pe = p.substitute(w, at), qe = q.substitute(w, at);
        MultiPoly ge = univariate_gcd(pe, qe, v);
        const int dg = std::max(ge.degree(v), 0);
        if (dg == 0) return MultiPoly::one(n); // coprime primitive parts, certified
        if (dg > best_degree) continue; // unlucky point
        if (dg < best_degree) {
            samples.clear();
            best_degree = dg;
        }
        CycNumber scale = gamma.substitute(w, at).constant_value();
        samples.push_back({at, ge * scale});
    }
    if (static_cast<int>(samples.size()) < bound + 1) return std::nullopt;
    // Lagrange interpolation in w.
    MultiPoly H(n);
    for (std::size_t k = 0; k < samples.size(); ++k) {
        MultiPoly basis = MultiPoly::one(n);
        CycNumber denom = CycNumber::one(n);
        for (std::size_t j = 0; j < samples.size(); ++j) {
            if (j == k) continue;
            basis *= MultiPoly::variable(n, w) - MultiPoly::constant(samples[j].at);
            denom *= samples[k].at - samples[j].at;
        }
        H += basis * samples[k].image * denom.inverse();
    }
    if (H.is_zero()) return std::nullopt;
    MultiPoly contH = content_in(H, v);
    if (!contH.is_constant()) H = H.exact_div(contH);
    H = H.integer_primitive();
    if (H.divides(p) && H.divides(q)) return H;
    return std::nullopt;
}

inline MultiPoly gcd_homogeneous_fast_path(const MultiPoly& p, const MultiPoly& q) {
    // Both homogeneous with per-variable valuation 0 in at least one of them.
    // Dehomogenize the last shared variable, recurse, homogenize back.
    Var pivot = Var::x;
    for (Var v : all_vars)
        if (p.depends_on(v) || q.depends_on(v)) pivot = v;
    MultiPoly pa = p.dehomogenize(pivot), qa = q.dehomogenize(pivot);
    MultiPoly g = gcd(pa, qa);
    if (g.is_constant()) return g;
    return g.homogenize(pivot, static_cast<unsigned>(g.degree()));
}

} // namespace detail

// Greatest common divisor, normalized with grlex-leading coefficient 1.
// Primitive-PRS/subresultant style recursion on the fixed variable order
// x, y, z, t, with content extraction at each level.  gcd(p, 0) is the
// normalization of p.
inline MultiPoly gcd(const MultiPoly& p, const MultiPoly& q) {
    if (p.conductor() != q.conductor()) throw conductor_mismatch("gcd conductor mismatch");
    const int n = p.conductor();
    if (p.is_zero() && q.is_zero()) return MultiPoly::zero(n);
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    if (p.is_constant() || q.is_constant()) return MultiPoly::one(n);

    // Shared monomial factor.
    Monomial mp = p.monomial_content(), mq = q.monomial_content();
    Monomial shared;
    for (int i = 0; i < 4; ++i)
        shared.e[static_cast<std::size_t>(i)] = std::min(mp.e[static_cast<std::size_t>(i)], mq.e[static_cast<std::size_t>(i)]);
    if (!shared.is_one()) {
        MultiPoly g = gcd(p.divide_monomial(mp), q.divide_monomial(mq));
        return (g * MultiPoly::term(CycNumber::one(n), shared)).monic();
    }
    // Re-normalize monomial-content-free copies (mp/mq may be nontrivial even
    // when shared is trivial).
    MultiPoly a = mp.is_one() ? p : p.divide_monomial(mp);
    MultiPoly b = mq.is_one() ? q : q.divide_monomial(mq);

    auto vars = detail::variables_of(a, b);
    if (vars.empty()) return MultiPoly::one(n);

    if (vars.size() >= 2 && a.is_homogeneous() && b.is_homogeneous())
        return detail::gcd_homogeneous_fast_path(a, b).monic();

    const Var v = vars.front();
    if (vars.size() == 1) return detail::univariate_gcd(a, b, v);

    if (!a.depends_on(v) || !b.depends_on(v)) {
        // One argument is free of the main variable: gcd divides the contents.
        const MultiPoly& free_one = a.depends_on(v) ? b : a;
        const MultiPoly& other = a.depends_on(v) ? a : b;
        MultiPoly cont = detail::content_in(other, v);
        return gcd(free_one, cont).monic();
    }

    MultiPoly cont_a = detail::content_in(a, v);
    MultiPoly cont_b = detail::content_in(b, v);
    MultiPoly pp_a = a.exact_div(cont_a).integer_primitive();
    MultiPoly pp_b = b.exact_div(cont_b).integer_primitive();
    MultiPoly cg = gcd(cont_a, cont_b);

    MultiPoly gpp = MultiPoly::one(n);
    bool done = false;
    // Cheap certificates before the PRS.
    if (pp_a == pp_b || pp_a == -pp_b) {
        gpp = pp_a;
        done = true;
    }
    if (!done && pp_b.degree(v) <= pp_a.degree(v) && pp_b.divides(pp_a)) {
        gpp = pp_b;
        done = true;
    }
    if (!done && pp_a.degree(v) <= pp_b.degree(v) && pp_a.divides(pp_b)) {
        gpp = pp_a;
        done = true;
    }
    if (!done && vars.size() == 2) {
        // Bivariate: evaluation-interpolation first, PRS as fallback.
        if (auto g = detail::bivariate_gcd_by_evaluation(pp_a, pp_b, v, vars[1])) {
            gpp = *g;
            done = true;
        }
    }
    if (!done && vars.size() > 2 && detail::eval_coprime_certificate(pp_a, pp_b, v)) {
        done = true; // primitive parts coprime
    }
    if (!done) {
        gpp = detail::primitive_prs_gcd(pp_a, pp_b, v);
        MultiPoly cont_g = detail::content_in(gpp, v);
        if (!cont_g.is_constant()) gpp = gpp.exact_div(cont_g);
    }
    return (cg * gpp).monic();
}

inline MultiPoly lcm(const MultiPoly& p, const MultiPoly& q) {
    if (p.is_zero() || q.is_zero()) return MultiPoly::zero(p.conductor());
    return (p * q).exact_div(gcd(p, q)).monic();
}

// ---------------------------------------------------------------------------
// Square-free machinery.

struct SquareFreePart {
    MultiPoly factor; // monic, nonconstant
    int multiplicity;
};

namespace detail {

// Yun's algorithm with respect to v; input primitive in v with deg_v >= 1.
inline void yun(const MultiPoly& f, Var v, std::vector<SquareFreePart>& out) {
    MultiPoly df = f.derive(v);
    MultiPoly g = gcd(f, df); // monic
    if (g.is_constant()) {
        out.push_back({f.monic(), 1});
        return;
    }
    MultiPoly c = f.exact_div(g);
    MultiPoly d = df.exact_div(g) - c.derive(v);
    int i = 1;
    while (!(c.is_constant())) {
        MultiPoly a = gcd(c, d);
        if (!a.is_constant()) out.push_back({a.monic(), i});
        a = a.monic();
        c = c.exact_div(a);
        d = d.exact_div(a) - c.derive(v);
        ++i;
    }
}

inline void squarefree_rec(const MultiPoly& f, std::vector<SquareFreePart>& out) {
    if (f.is_constant()) return;
    Monomial mc = f.monomial_content();
    MultiPoly g = f;
    if (!mc.is_one()) {
        g = f.divide_monomial(mc);
        for (Var v : all_vars)
            if (mc[v] > 0)
                out.push_back({MultiPoly::variable(f.conductor(), v), static_cast<int>(mc[v])});
    }
    if (g.is_constant()) return;
    Var v = Var::x;
    for (Var vv : all_vars)
        if (g.depends_on(vv)) {
            v = vv;
            break;
        }
    MultiPoly cont = content_in(g, v);
    MultiPoly pp = g.exact_div(cont);
    if (!pp.is_constant()) yun(pp, v, out);
    squarefree_rec(cont, out);
}

} // namespace detail

// f = constant * prod factor_i^multiplicity_i with the factors monic,
// square-free and pairwise coprime (factors from different recursion levels
// are coprime; equal multiplicities may appear more than once).
inline std::vector<SquareFreePart> squarefree_decomposition(const MultiPoly& f) {
    if (f.is_zero()) throw domain_error("square-free decomposition of zero");
    std::vector<SquareFreePart> out;
    detail::squarefree_rec(f, out);
    return out;
}

// D = kappa * s^2 with s monic, when D is a square up to a constant of the
// field (equivalently: a square over C).  Empty when some square-free
// multiplicity is odd.
inline std::optional<std::pair<CycNumber, MultiPoly>> perfect_square_decompose(const MultiPoly& D) {
    if (D.is_zero()) throw domain_error("perfect_square_decompose of zero");
    const int n = D.conductor();
    if (D.is_constant()) return std::make_pair(D.constant_value(), MultiPoly::one(n));
    auto parts = squarefree_decomposition(D);
    MultiPoly s = MultiPoly::one(n);
    for (const auto& part : parts) {
        if (part.multiplicity % 2 != 0) return std::nullopt;
        s *= part.factor.pow(static_cast<unsigned>(part.multiplicity / 2));
    }
    MultiPoly q = D.exact_div(s * s);
    if (!q.is_constant()) throw error("internal: square decomposition inconsistent");
    return std::make_pair(q.constant_value(), s);
}

// ---------------------------------------------------------------------------
// Determinants and resultants.

// Exact cofactor-expansion determinant of a 3x3 polynomial matrix.
inline MultiPoly det3(const std::array<std::array<MultiPoly, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Resultant eliminating v, computed with the subresultant PRS; the sign is
// the Sylvester-determinant sign (p rows first).
inline MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Var v) {
    if (p.is_zero() || q.is_zero()) throw domain_error("resultant of zero polynomial");
    if (p.degree(v) <= 0 || q.degree(v) <= 0)
        throw domain_error("resultant argument constant in the eliminated variable");
    const int n = p.conductor();
    MultiPoly a = p, b = q;
    int sign = 1;
    if (a.degree(v) < b.degree(v)) {
        if ((a.degree(v) & 1) && (b.degree(v) & 1)) sign = -sign;
        std::swap(a, b);
    }
    MultiPoly g = MultiPoly::one(n), h = MultiPoly::one(n);
    while (true) {
        const int da = a.degree(v), db = b.degree(v);
        const int delta = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        MultiPoly r = detail::pseudo_remainder(a, b, v);
        a = b;
        if (r.is_zero()) return MultiPoly::zero(n);
        b = r.exact_div(g * h.pow(static_cast<unsigned>(delta)));
        g = a.coefficient_of(v, static_cast<unsigned>(a.degree(v)));
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = g.pow(static_cast<unsigned>(delta)).exact_div(h.pow(static_cast<unsigned>(delta - 1)));
        }
        if (b.degree(v) == 0) {
            const int dA = a.degree(v);
            MultiPoly res = b.pow(static_cast<unsigned>(dA));
            if (dA > 1) res = res.exact_div(h.pow(static_cast<unsigned>(dA - 1)));
            if (sign < 0) res = -res;
            return res;
        }
    }
}

} // namespace geiser

#endif
