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
#ifndef PROK_ABGRP_HPP
#define PROK_ABGRP_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace prok {

// Dense matrix over ZZ with arbitrary-precision entries.
struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<mpz_class>> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c)
        : rows(r), cols(c), a(r, std::vector<mpz_class>(c, 0)) {}

    static IntMatrix identity(std::size_t n);
    mpz_class& at(std::size_t i, std::size_t j) { return a[i][j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return a[i][j]; }
    bool is_zero() const;
    IntMatrix transposed() const;
    std::string to_string() const;
};

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);

// Smith normal form: S = U * M * V with U, V unimodular, S diagonal with
// non-negative entries d1 | d2 | ... .
struct SmithResult {
    IntMatrix S, U, V;
    std::vector<mpz_class> diagonal() const;
};

SmithResult smith_normal_form(const IntMatrix& M);

// Particular integer solution of M x = b, if one exists.
std::optional<std::vector<mpz_class>> solve_integer(const IntMatrix& M,
                                                    const std::vector<mpz_class>& b);

// Basis (as matrix columns) of the integer nullspace {x : M x = 0}.
IntMatrix integer_nullspace(const IntMatrix& M);

// Exact inverse of a unimodular integer matrix.
IntMatrix invert_unimodular(const IntMatrix& M);

// Finitely generated abelian group, presented by generators and relation
// rows: G = ZZ^gens / rowspan(relations).
struct FGAbelianGroup {
    std::size_t gens = 0;
    IntMatrix relations;  // relations.cols == gens

    FGAbelianGroup() = default;
    FGAbelianGroup(std::size_t g, IntMatrix rel);

    static FGAbelianGroup free_group(std::size_t rank);
    static FGAbelianGroup cyclic(const mpz_class& n);  // ZZ/n, n = 0 gives ZZ
    static FGAbelianGroup zero();
};

// Invariant-factor decomposition: rank + torsion (d1 | d2 | ..., di > 1).
struct GroupInvariants {
    unsigned rank = 0;
    std::vector<mpz_class> torsion;

    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    // Order of the torsion part; nullopt when rank > 0 (infinite).
    std::optional<mpz_class> order() const;
    bool operator==(const GroupInvariants& o) const {
        return rank == o.rank && torsion == o.torsion;
    }
    std::string to_string() const;
};

GroupInvariants invariants(const FGAbelianGroup& g);

// Canonical coordinates: splits G as ⊕ ZZ/d_i ⊕ ZZ^rank and maps
// generator-combination vectors to coordinates in that decomposition.
struct GroupDecomposition {
    GroupInvariants inv;
    // full diagonal of the relation SNF padded to `gens` entries
    std::vector<mpz_class> moduli;      // per new-basis coordinate (0 = free)
    IntMatrix basis_change;             // V^{-1}: new coords = V^{-1} * x
    std::vector<std::size_t> kept;      // coordinates with modulus != 1

    // Coordinates of x (length gens) in the kept coordinates, reduced mod
    // the respective modulus.
    std::vector<mpz_class> coords(const std::vector<mpz_class>& x) const;
    bool is_zero_element(const std::vector<mpz_class>& x) const;
};

GroupDecomposition decompose(const FGAbelianGroup& g);

// Homomorphism of finitely generated abelian groups: column j of `matrix`
// is the image of source generator j in target generators. Construction
// verifies that source relations map into the target relation lattice.
struct GroupMap {
    FGAbelianGroup source, target;
    IntMatrix matrix;  // target.gens x source.gens

    GroupMap(FGAbelianGroup src, FGAbelianGroup tgt, IntMatrix m);
};

FGAbelianGroup kernel(const GroupMap& f);
FGAbelianGroup cokernel(const GroupMap& f);
FGAbelianGroup image(const GroupMap& f);

// Columns generate {x : f(x) = 0 in target}; kernel(f) is presented on
// exactly these generators, in this column order.
IntMatrix kernel_embedding(const GroupMap& f);
bool is_zero_map(const GroupMap& f);
bool is_isomorphism(const GroupMap& f);

}  // namespace prok

#endif  // PROK_ABGRP_HPP
