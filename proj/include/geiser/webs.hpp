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

#ifndef GEISER_WEBS_HPP
#define GEISER_WEBS_HPP

#include "geiser/birational.hpp"
#include "geiser/linalg.hpp"

namespace geiser {

// Reduced composition f o T in the affine chart.
inline RationalFunction pullback(const RationalFunction& f, const BirationalMap& T) {
    auto [t1, t2] = T.affine_pair();
    std::array<const RationalFunction*, 4> rep{&t1, &t2, nullptr, nullptr};
    return f.substituted(rep);
}

namespace detail {

inline bool proportional_rf(const RationalFunction& f, const RationalFunction& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    MultiPoly a = f.numerator() * g.denominator();
    MultiPoly b = g.numerator() * f.denominator();
    return a.monic() == b.monic();
}

} // namespace detail

// Three pairwise non-proportional first integrals; usually f, f o T, f o T^2.
struct WebTriple {
    RationalFunction f0, f1, f2;

    WebTriple(RationalFunction a, RationalFunction b, RationalFunction c)
        : f0(std::move(a)), f1(std::move(b)), f2(std::move(c)) {
        if (detail::proportional_rf(f0, f1) || detail::proportional_rf(f0, f2) ||
            detail::proportional_rf(f1, f2))
            throw domain_error("web members must be pairwise non-proportional");
    }

    static WebTriple from_map(const RationalFunction& f0, const BirationalMap& T) {
        RationalFunction f1 = pullback(f0, T);
        RationalFunction f2 = pullback(f1, T);
        return WebTriple(f0, std::move(f1), std::move(f2));
    }

    int conductor() const { return f0.conductor(); }
};

// Nontrivial (a0, a1, a2) with a0 f0 + a1 f1 + a2 f2 = 0, solved exactly on
// the numerator coefficients over the common denominator; empty when only
// the trivial relation exists.  The result is normalized with its first
// nonzero coordinate equal to 1.
inline std::optional<std::array<CycNumber, 3>> abelian_relation(const WebTriple& w) {
    const int n = w.conductor();
    MultiPoly D = lcm(w.f0.denominator(), lcm(w.f1.denominator(), w.f2.denominator()));
    std::array<MultiPoly, 3> N{w.f0.numerator() * D.exact_div(w.f0.denominator()),
                               w.f1.numerator() * D.exact_div(w.f1.denominator()),
                               w.f2.numerator() * D.exact_div(w.f2.denominator())};
    // Rows = monomials in the union of supports, columns = the three a_i.
    std::map<Monomial, std::array<CycNumber, 3>, GrlexGreater> rows;
    for (int k = 0; k < 3; ++k)
        for (const auto& [m, c] : N[static_cast<std::size_t>(k)].terms()) {
            auto it = rows.find(m);
            if (it == rows.end())
                it = rows.emplace(m, std::array<CycNumber, 3>{CycNumber::zero(n), CycNumber::zero(n),
                                                              CycNumber::zero(n)})
                         .first;
            it->second[static_cast<std::size_t>(k)] = c;
        }
    CycMatrix matrix;
    for (const auto& [m, row] : rows) matrix.push_back({row[0], row[1], row[2]});
    auto kernel = kernel_vector(matrix, n);
    if (!kernel) return std::nullopt;
    std::array<CycNumber, 3> a{(*kernel)[0], (*kernel)[1], (*kernel)[2]};
    // The relation must hold exactly.
    MultiPoly check = MultiPoly::constant(a[0]) * N[0] + MultiPoly::constant(a[1]) * N[1] +
                      MultiPoly::constant(a[2]) * N[2];
    if (!check.is_zero()) throw error("internal: abelian relation fails to vanish");
    return a;
}

} // namespace geiser

#endif
