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

// Test-only reference implementations, independent of the library's
// production code paths.

#ifndef GEISER_TESTS_ORACLES_HPP
#define GEISER_TESTS_ORACLES_HPP

#include "geiser/multipoly.hpp"

#include <random>
#include <vector>

namespace geiser::oracle {

// Fraction-free Bareiss determinant of a square polynomial matrix.
inline MultiPoly bareiss_det(std::vector<std::vector<MultiPoly>> m, int conductor) {
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly::one(conductor);
    int sign = 1;
    MultiPoly prev = MultiPoly::one(conductor);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MultiPoly::zero(conductor);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev);
        prev = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// Resultant as the determinant of the Sylvester matrix (p rows first).
inline MultiPoly sylvester_resultant(const MultiPoly& p, const MultiPoly& q, Var v) {
    const int conductor = p.conductor();
    const int dp = p.degree(v), dq = q.degree(v);
    auto pc = p.coefficients_in(v);
    auto qc = q.coefficients_in(v);
    const std::size_t size = static_cast<std::size_t>(dp + dq);
    std::vector<std::vector<MultiPoly>> m(size, std::vector<MultiPoly>(size, MultiPoly::zero(conductor)));
    for (int row = 0; row < dq; ++row)
        for (int k = 0; k <= dp; ++k)
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + k)] = pc[static_cast<std::size_t>(dp - k)];
    for (int row = 0; row < dp; ++row)
        for (int k = 0; k <= dq; ++k)
            m[static_cast<std::size_t>(dq + row)][static_cast<std::size_t>(row + k)] = qc[static_cast<std::size_t>(dq - k)];
    return bareiss_det(std::move(m), conductor);
}

// Random small polynomials with rational coefficients.
inline MultiPoly random_poly(std::mt19937_64& rng, int conductor, std::vector<Var> vars, int max_degree,
                             int max_terms, bool cyclotomic_coeffs = false) {
    std::uniform_int_distribution<int> coef(-6, 6);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> var_index(0, vars.empty() ? 0 : vars.size() - 1);
    MultiPoly p(conductor);
    for (int i = 0; i < max_terms; ++i) {
        Monomial m;
        if (!vars.empty()) {
            int total = deg(rng);
            for (int d = 0; d < total; ++d) m[vars[var_index(rng)]] += 1;
        }
        CycNumber c = CycNumber::from_int(conductor, coef(rng));
        if (cyclotomic_coeffs && coef(rng) > 2)
            c += CycNumber::unit_j(conductor) * CycNumber::from_int(conductor, coef(rng));
        p.add_term(m, c);
    }
    return p;
}

} // namespace geiser::oracle

#endif
