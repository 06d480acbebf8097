/* Copyright 2026 The prok Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "prok/linalg.hpp"

#include <algorithm>

#include "prok/errors.hpp"

namespace prok {

FieldMatrix::FieldMatrix(BaseRing b, std::size_t r, std::size_t c)
    : base(std::move(b)), rows(r), cols(c),
      a(r, std::vector<mpq_class>(c, 0)) {
    if (!base.is_field())
        throw InvalidInputError("FieldMatrix requires a field base ring");
}

FieldMatrix FieldMatrix::identity(BaseRing b, std::size_t n) {
    FieldMatrix m(std::move(b), n, n);
    for (std::size_t i = 0; i < n; ++i) m.a[i][i] = 1;
    return m;
}

std::vector<std::size_t> field_rref(FieldMatrix& m) {
    const BaseRing& F = m.base;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m.a[piv][c] == 0) ++piv;
        if (piv == m.rows) continue;
        std::swap(m.a[piv], m.a[r]);
        mpq_class inv = F.inv(m.a[r][c]);
        for (std::size_t j = c; j < m.cols; ++j)
            m.a[r][j] = F.mul(m.a[r][j], inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.a[i][c] == 0) continue;
            mpq_class f = m.a[i][c];
            for (std::size_t j = c; j < m.cols; ++j)
                m.a[i][j] = F.sub(m.a[i][j], F.mul(f, m.a[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t field_rank(FieldMatrix m) { return field_rref(m).size(); }

std::optional<std::vector<mpq_class>> field_solve(
    const FieldMatrix& m, const std::vector<mpq_class>& b) {
    if (b.size() != m.rows) throw InvalidInputError("field_solve: size mismatch");
    FieldMatrix aug(m.base, m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        std::copy(m.a[i].begin(), m.a[i].end(), aug.a[i].begin());
        aug.a[i][m.cols] = b[i];
        aug.base.normalize(aug.a[i][m.cols]);
    }
    std::vector<std::size_t> pivots = field_rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    std::vector<mpq_class> x(m.cols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.a[r][m.cols];
    return x;
}

FieldMatrix field_nullspace(const FieldMatrix& m) {
    FieldMatrix work = m;
    std::vector<std::size_t> pivots = field_rref(work);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    FieldMatrix K(m.base, m.cols, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        K.a[fc][k] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            K.a[pivots[r]][k] = m.base.neg(work.a[r][fc]);
    }
    return K;
}

}  // namespace prok
