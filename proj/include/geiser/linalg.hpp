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

#ifndef GEISER_LINALG_HPP
#define GEISER_LINALG_HPP

#include "geiser/cyclotomic.hpp"

#include <vector>

namespace geiser {

using CycVector = std::vector<CycNumber>;
using CycMatrix = std::vector<CycVector>;

// Gaussian elimination over Q(zeta_N).  Returns row echelon form in place and
// the list of pivot columns.
inline std::vector<std::size_t> row_reduce(CycMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        CycNumber inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            CycNumber factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Unique solution of A x = b; empty when A is singular.
inline std::optional<CycVector> solve_linear(const CycMatrix& a, const CycVector& b) {
    const std::size_t n = a.size();
    CycMatrix m = a;
    for (std::size_t i = 0; i < n; ++i) m[i].push_back(b[i]);
    auto pivots = row_reduce(m);
    if (pivots.size() != n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    CycVector x;
    x.reserve(n);
    for (std::size_t i = 0; i < n; ++i) x.push_back(m[i][n]);
    return x;
}

// A nontrivial kernel vector of A (columns = unknowns), normalized so its
// first nonzero coordinate is 1; empty when the kernel is trivial.
inline std::optional<CycVector> kernel_vector(const CycMatrix& a, int conductor) {
    if (a.empty()) return std::nullopt;
    CycMatrix m = a;
    const std::size_t cols = m[0].size();
    auto pivots = row_reduce(m);
    if (pivots.size() == cols) return std::nullopt;
    // First free column.
    std::size_t free_col = 0;
    {
        std::size_t k = 0;
        for (; free_col < cols; ++free_col) {
            if (k < pivots.size() && pivots[k] == free_col) {
                ++k;
                continue;
            }
            break;
        }
    }
    CycVector x(cols, CycNumber::zero(conductor));
    x[free_col] = CycNumber::one(conductor);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = -m[i][free_col];
    // Normalize: first nonzero coordinate = 1.
    for (auto& xi : x)
        if (!xi.is_zero()) {
            CycNumber inv = xi.inverse();
            for (auto& xj : x) xj = xj * inv;
            break;
        }
    return x;
}

inline CycNumber determinant(CycMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) throw domain_error("determinant of empty matrix");
    const int conductor = m[0][0].conductor();
    CycNumber det = CycNumber::one(conductor);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c].is_zero()) ++pivot;
        if (pivot == n) return CycNumber::zero(conductor);
        if (pivot != c) {
            std::swap(m[c], m[pivot]);
            det = -det;
        }
        det = det * m[c][c];
        CycNumber inv = m[c][c].inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            CycNumber factor = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] = m[i][j] - factor * m[c][j];
        }
    }
    return det;
}

} // namespace geiser

#endif
