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
#include "prok/abgrp.hpp"

#include <algorithm>

#include "prok/errors.hpp"

namespace prok {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.a[i][i] = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& row : a)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t.a[j][i] = a[i][j];
    return t;
}

std::string IntMatrix::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows; ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t j = 0; j < cols; ++j) {
            if (j) s += ",";
            s += a[i][j].get_str();
        }
        s += "]";
    }
    return s + "]";
}

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw InvalidInputError("matrix size mismatch");
    IntMatrix r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x.a[i][k] == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                r.a[i][j] += x.a[i][k] * y.a[k][j];
        }
    return r;
}

std::vector<mpz_class> SmithResult::diagonal() const {
    std::vector<mpz_class> d;
    std::size_t n = std::min(S.rows, S.cols);
    for (std::size_t i = 0; i < n; ++i) d.push_back(S.a[i][i]);
    return d;
}

namespace {

struct SnfWorker {
    IntMatrix S, U, V;

    explicit SnfWorker(const IntMatrix& M)
        : S(M), U(IntMatrix::identity(M.rows)), V(IntMatrix::identity(M.cols)) {}

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(S.a[i], S.a[j]);
        std::swap(U.a[i], U.a[j]);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto& row : S.a) std::swap(row[i], row[j]);
        for (auto& row : V.a) std::swap(row[i], row[j]);
    }
    // row_i -= q * row_j
    void row_sub(std::size_t i, std::size_t j, const mpz_class& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < S.cols; ++k) S.a[i][k] -= q * S.a[j][k];
        for (std::size_t k = 0; k < U.cols; ++k) U.a[i][k] -= q * U.a[j][k];
    }
    // col_i -= q * col_j
    void col_sub(std::size_t i, std::size_t j, const mpz_class& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < S.rows; ++k) S.a[k][i] -= q * S.a[k][j];
        for (std::size_t k = 0; k < V.rows; ++k) V.a[k][i] -= q * V.a[k][j];
    }
    void negate_row(std::size_t i) {
        for (auto& x : S.a[i]) x = -x;
        for (auto& x : U.a[i]) x = -x;
    }

    // Find the entry of minimal nonzero absolute value in the trailing
    // block starting at (t, t).
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) {
        bool found = false;
        mpz_class best;
        for (std::size_t i = t; i < S.rows; ++i)
            for (std::size_t j = t; j < S.cols; ++j) {
                if (S.a[i][j] == 0) continue;
                mpz_class v = abs(S.a[i][j]);
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void run() {
        std::size_t n = std::min(S.rows, S.cols);
        for (std::size_t t = 0; t < n; ++t) {
            std::size_t pi, pj;
            if (!find_pivot(t, pi, pj)) break;
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool dirty = true;
            while (dirty) {
                dirty = false;
                // clear the column below the pivot
                for (std::size_t i = t + 1; i < S.rows; ++i) {
                    if (S.a[i][t] == 0) continue;
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), S.a[i][t].get_mpz_t(),
                               S.a[t][t].get_mpz_t());
                    row_sub(i, t, q);
                    if (S.a[i][t] != 0) {
                        // remainder smaller than pivot: promote it
                        swap_rows(t, i);
                        dirty = true;
                    }
                }
                // clear the row right of the pivot
                for (std::size_t j = t + 1; j < S.cols; ++j) {
                    if (S.a[t][j] == 0) continue;
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), S.a[t][j].get_mpz_t(),
                               S.a[t][t].get_mpz_t());
                    col_sub(j, t, q);
                    if (S.a[t][j] != 0) {
                        swap_cols(t, j);
                        dirty = true;
                    }
                }
            }

            if (S.a[t][t] < 0) negate_row(t);

            // enforce divisibility of the trailing block by the pivot
            bool redo = false;
            for (std::size_t i = t + 1; i < S.rows && !redo; ++i)
                for (std::size_t j = t + 1; j < S.cols && !redo; ++j) {
                    if (S.a[i][j] % S.a[t][t] != 0) {
                        // fold row i into the pivot row and restart this step
                        row_sub(t, i, mpz_class(-1));
                        redo = true;
                    }
                }
            if (redo) --t;
        }
    }
};

std::vector<mpz_class> mat_apply(const IntMatrix& M, const std::vector<mpz_class>& x) {
    if (M.cols != x.size()) throw InvalidInputError("matrix/vector size mismatch");
    std::vector<mpz_class> r(M.rows, 0);
    for (std::size_t i = 0; i < M.rows; ++i)
        for (std::size_t j = 0; j < M.cols; ++j) r[i] += M.a[i][j] * x[j];
    return r;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& M) {
    SnfWorker w(M);
    w.run();
    return SmithResult{std::move(w.S), std::move(w.U), std::move(w.V)};
}

std::optional<std::vector<mpz_class>> solve_integer(
    const IntMatrix& M, const std::vector<mpz_class>& b) {
    if (b.size() != M.rows) throw InvalidInputError("solve: size mismatch");
    SmithResult snf = smith_normal_form(M);
    std::vector<mpz_class> ub = mat_apply(snf.U, b);
    std::vector<mpz_class> y(M.cols, 0);
    std::size_t n = std::min(M.rows, M.cols);
    for (std::size_t i = 0; i < M.rows; ++i) {
        mpz_class d = i < n ? snf.S.a[i][i] : mpz_class(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            mpz_class q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), ub[i].get_mpz_t(),
                        d.get_mpz_t());
            if (r != 0) return std::nullopt;
            y[i] = q;
        }
    }
    return mat_apply(snf.V, y);
}

IntMatrix integer_nullspace(const IntMatrix& M) {
    SmithResult snf = smith_normal_form(M);
    std::size_t n = std::min(M.rows, M.cols);
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < M.cols; ++j) {
        mpz_class d = j < n ? snf.S.a[j][j] : mpz_class(0);
        if (d == 0) free_cols.push_back(j);
    }
    IntMatrix K(M.cols, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k)
        for (std::size_t i = 0; i < M.cols; ++i)
            K.a[i][k] = snf.V.a[i][free_cols[k]];
    return K;
}

IntMatrix invert_unimodular(const IntMatrix& M) {
    if (M.rows != M.cols) throw InvalidInputError("inverse of non-square matrix");
    std::size_t n = M.rows;
    // exact Gauss-Jordan over the rationals
    std::vector<std::vector<mpq_class>> w(n, std::vector<mpq_class>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = mpq_class(M.a[i][j]);
        w[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && w[piv][col] == 0) ++piv;
        if (piv == n) throw InvalidInputError("matrix not invertible");
        std::swap(w[piv], w[col]);
        mpq_class inv = 1 / w[col][col];
        for (auto& x : w[col]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || w[i][col] == 0) continue;
            mpq_class f = w[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) w[i][j] -= f * w[col][j];
        }
    }
    IntMatrix R(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class v = w[i][n + j];
            if (v.get_den() != 1)
                throw InvalidInputError("matrix inverse is not integral");
            R.a[i][j] = v.get_num();
        }
    return R;
}

FGAbelianGroup::FGAbelianGroup(std::size_t g, IntMatrix rel)
    : gens(g), relations(std::move(rel)) {
    if (relations.rows == 0) relations = IntMatrix(0, g);
    if (relations.cols != g)
        throw InvalidInputError("relation matrix has wrong generator count");
}

FGAbelianGroup FGAbelianGroup::free_group(std::size_t rank) {
    return FGAbelianGroup(rank, IntMatrix(0, rank));
}

FGAbelianGroup FGAbelianGroup::cyclic(const mpz_class& n) {
    IntMatrix rel(1, 1);
    rel.a[0][0] = n;
    return FGAbelianGroup(1, std::move(rel));
}

FGAbelianGroup FGAbelianGroup::zero() { return free_group(0); }

std::optional<mpz_class> GroupInvariants::order() const {
    if (rank > 0) return std::nullopt;
    mpz_class o = 1;
    for (const auto& d : torsion) o *= d;
    return o;
}

std::string GroupInvariants::to_string() const {
    if (is_trivial()) return "0";
    std::string s;
    for (const auto& d : torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + d.get_str();
    }
    if (rank > 0) {
        if (!s.empty()) s += " + ";
        s += rank == 1 ? "Z" : "Z^" + std::to_string(rank);
    }
    return s;
}

GroupInvariants invariants(const FGAbelianGroup& g) {
    SmithResult snf = smith_normal_form(g.relations);
    GroupInvariants inv;
    std::size_t nonzero = 0;
    for (const auto& d : snf.diagonal()) {
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) inv.torsion.push_back(d);
    }
    inv.rank = static_cast<unsigned>(g.gens - nonzero);
    return inv;
}

std::vector<mpz_class> GroupDecomposition::coords(
    const std::vector<mpz_class>& x) const {
    std::vector<mpz_class> full = [&] {
        std::vector<mpz_class> r(basis_change.rows, 0);
        for (std::size_t i = 0; i < basis_change.rows; ++i)
            for (std::size_t j = 0; j < basis_change.cols; ++j)
                r[i] += basis_change.a[i][j] * x[j];
        return r;
    }();
    std::vector<mpz_class> out;
    for (std::size_t idx : kept) {
        mpz_class v = full[idx];
        if (moduli[idx] != 0) {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), moduli[idx].get_mpz_t());
            v = r;
        }
        out.push_back(v);
    }
    return out;
}

bool GroupDecomposition::is_zero_element(const std::vector<mpz_class>& x) const {
    for (const auto& c : coords(x))
        if (c != 0) return false;
    return true;
}

GroupDecomposition decompose(const FGAbelianGroup& g) {
    SmithResult snf = smith_normal_form(g.relations);
    GroupDecomposition dec;
    dec.moduli.assign(g.gens, 0);
    auto diag = snf.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) dec.moduli[i] = diag[i];
    dec.basis_change = invert_unimodular(snf.V);
    for (std::size_t i = 0; i < g.gens; ++i) {
        if (dec.moduli[i] == 1) continue;
        dec.kept.push_back(i);
        if (dec.moduli[i] > 1)
            dec.inv.torsion.push_back(dec.moduli[i]);
        else
            dec.inv.rank += 1;
    }
    std::sort(dec.inv.torsion.begin(), dec.inv.torsion.end());
    return dec;
}

namespace {

// Lattice of relation rows as a matrix whose columns span it.
IntMatrix relation_columns(const FGAbelianGroup& g) {
    return g.relations.transposed();
}

bool in_relation_lattice(const FGAbelianGroup& g, const std::vector<mpz_class>& v) {
    if (g.relations.rows == 0) {
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }
    return solve_integer(relation_columns(g), v).has_value();
}

// Stack [A | B] horizontally.
IntMatrix hstack(const IntMatrix& A, const IntMatrix& B) {
    if (A.rows != B.rows) throw InvalidInputError("hstack size mismatch");
    IntMatrix R(A.rows, A.cols + B.cols);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) R.a[i][j] = A.a[i][j];
        for (std::size_t j = 0; j < B.cols; ++j) R.a[i][A.cols + j] = B.a[i][j];
    }
    return R;
}

// Generators (as columns) of {x : F x ∈ rowlattice(target.relations)}.
IntMatrix preimage_lattice(const IntMatrix& F, const FGAbelianGroup& target) {
    IntMatrix stacked = hstack(F, relation_columns(target));
    IntMatrix null = integer_nullspace(stacked);
    IntMatrix K(F.cols, null.cols);
    for (std::size_t j = 0; j < null.cols; ++j)
        for (std::size_t i = 0; i < F.cols; ++i) K.a[i][j] = null.a[i][j];
    return K;
}

}  // namespace

GroupMap::GroupMap(FGAbelianGroup src, FGAbelianGroup tgt, IntMatrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    if (matrix.rows != target.gens || matrix.cols != source.gens)
        throw InvalidInputError("group map matrix has wrong shape");
    for (std::size_t r = 0; r < source.relations.rows; ++r) {
        std::vector<mpz_class> rel(source.relations.a[r]);
        std::vector<mpz_class> img(target.gens, 0);
        for (std::size_t i = 0; i < target.gens; ++i)
            for (std::size_t j = 0; j < source.gens; ++j)
                img[i] += matrix.a[i][j] * rel[j];
        if (!in_relation_lattice(target, img))
            throw InvalidInputError(
                "group map does not respect source relation " + std::to_string(r));
    }
}

IntMatrix kernel_embedding(const GroupMap& f) {
    return preimage_lattice(f.matrix, f.target);
}

FGAbelianGroup kernel(const GroupMap& f) {
    IntMatrix K = preimage_lattice(f.matrix, f.target);
    // relations among the kernel generators as elements of the source
    IntMatrix stacked = hstack(K, relation_columns(f.source));
    IntMatrix null = integer_nullspace(stacked);
    IntMatrix rel(null.cols, K.cols);
    for (std::size_t r = 0; r < null.cols; ++r)
        for (std::size_t j = 0; j < K.cols; ++j) rel.a[r][j] = null.a[j][r];
    return FGAbelianGroup(K.cols, std::move(rel));
}

FGAbelianGroup cokernel(const GroupMap& f) {
    IntMatrix rel(f.target.relations.rows + f.source.gens, f.target.gens);
    for (std::size_t r = 0; r < f.target.relations.rows; ++r)
        rel.a[r] = f.target.relations.a[r];
    for (std::size_t j = 0; j < f.source.gens; ++j)
        for (std::size_t i = 0; i < f.target.gens; ++i)
            rel.a[f.target.relations.rows + j][i] = f.matrix.a[i][j];
    return FGAbelianGroup(f.target.gens, std::move(rel));
}

FGAbelianGroup image(const GroupMap& f) {
    IntMatrix K = preimage_lattice(f.matrix, f.target);
    IntMatrix rel(K.cols, f.source.gens);
    for (std::size_t r = 0; r < K.cols; ++r)
        for (std::size_t j = 0; j < f.source.gens; ++j) rel.a[r][j] = K.a[j][r];
    return FGAbelianGroup(f.source.gens, std::move(rel));
}

bool is_zero_map(const GroupMap& f) {
    for (std::size_t j = 0; j < f.source.gens; ++j) {
        std::vector<mpz_class> col(f.target.gens);
        for (std::size_t i = 0; i < f.target.gens; ++i) col[i] = f.matrix.a[i][j];
        if (!in_relation_lattice(f.target, col)) return false;
    }
    return true;
}

bool is_isomorphism(const GroupMap& f) {
    return invariants(kernel(f)).is_trivial() &&
           invariants(cokernel(f)).is_trivial();
}

}  // namespace prok
