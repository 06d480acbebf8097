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
#ifndef PROK_LINALG_HPP
#define PROK_LINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "prok/base_ring.hpp"

namespace prok {

// Dense matrix over a coefficient field (QQ or F_p). Entries follow the
// canonical-representative invariants of the BaseRing.
struct FieldMatrix {
    BaseRing base;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<mpq_class>> a;

    FieldMatrix(BaseRing b, std::size_t r, std::size_t c);
    static FieldMatrix identity(BaseRing b, std::size_t n);

    mpq_class& at(std::size_t i, std::size_t j) { return a[i][j]; }
    const mpq_class& at(std::size_t i, std::size_t j) const { return a[i][j]; }
};

// In-place reduced row echelon form. Returns the pivot column indices in
// increasing order.
std::vector<std::size_t> field_rref(FieldMatrix& m);

std::size_t field_rank(FieldMatrix m);

// One solution of M x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<mpq_class>> field_solve(const FieldMatrix& m,
                                                  const std::vector<mpq_class>& b);

// Basis of {x : M x = 0}, returned as the columns of the result.
FieldMatrix field_nullspace(const FieldMatrix& m);

}  // namespace prok

#endif  // PROK_LINALG_HPP
