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
#ifndef PROK_REALIZE_HPP
#define PROK_REALIZE_HPP

#include <string>
#include <utility>
#include <vector>

#include "prok/abgrp.hpp"
#include "prok/fpmod.hpp"
#include "prok/linalg.hpp"

namespace prok {

// A finitely presented module seen as a module over the base coefficient
// domain: a finite dimensional vector space (QQ, F_p), a finitely
// generated abelian group (ZZ), or a structural description when it is
// not base-finite. Coordinates live on the standard vectors
// (component, monomial) of the relation staircase.
struct RealizedModule {
    enum class Kind { zero, vector_space, group, structural };

    Kind kind = Kind::zero;
    BaseRing base;
    std::vector<std::pair<std::size_t, Monomial>> basis;
    std::vector<mpz_class> moduli;  // per basis entry; 0 = free (ZZ only)
    unsigned dimension = 0;         // vector_space
    FGAbelianGroup group;           // group kind, presented on `basis`
    GroupInvariants invariants;     // group kind
    std::string note;               // structural kind
    ModuleGB gb;                    // normal-form engine for coordinates

    bool is_zero() const { return kind == Kind::zero; }
    std::string to_string() const;
};

RealizedModule realize_module(const FPModule& M);

// Coordinates of an element on the realized basis. Throws
// CertificationError if the module is structural.
std::vector<mpq_class> realized_coords(const RealizedModule& R, const ModVec& v);

// A base-linear map between realized modules, carried as a field matrix
// or an abelian group map depending on the base.
struct RealizedMap {
    BaseRing base;
    std::optional<FieldMatrix> fm;  // field case
    std::optional<GroupMap> gm;     // ZZ case

    bool is_zero() const;
    bool is_surjective() const;
    bool is_injective() const;
    GroupInvariants cokernel_invariants() const;  // ZZ case only
};

// Build from explicit coordinate columns: column j = target coordinates
// of the j-th source basis element.
RealizedMap make_realized_map(const RealizedModule& src,
                              const RealizedModule& tgt,
                              const std::vector<std::vector<mpq_class>>& cols);

// Realize a module map on the realizations of its two sides.
RealizedMap realize_map(const ModuleMap& f, const RealizedModule& src,
                        const RealizedModule& tgt);

// Tensor of two realizations over the base domain, with the product
// basis; relation rows are inherited from both sides.
RealizedModule realize_tensor(const RealizedModule& X, const RealizedModule& Y);

}  // namespace prok

#endif  // PROK_REALIZE_HPP
