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
#ifndef PROK_FPMOD_HPP
#define PROK_FPMOD_HPP

#include <cstddef>
#include <vector>

#include "prok/fpring.hpp"
#include "prok/modgb.hpp"

namespace prok {

// Finitely presented module over a finitely presented ring: the cokernel
// of the matrix whose columns are `rel`, acting on R^gens. Entries are
// carried as polynomials in the ambient ring; the defining ideal of the
// ring acts as zero automatically.
struct FPModule {
    FPRingPtr ring;
    std::size_t gens = 0;
    std::vector<ModVec> rel;  // columns of length `gens`

    // Relation columns extended by defining-ideal multiples of every
    // generator: the presentation of the same module over the ambient
    // polynomial ring.
    std::vector<ModVec> aug_relations() const;
};

FPModule make_module(FPRingPtr ring, std::size_t gens, std::vector<ModVec> rel);
FPModule free_module(FPRingPtr ring, std::size_t n);
// R/J as a module over R.
FPModule quotient_module(const FPRingPtr& ring, const RingIdeal& J);
// The ideal I as a module over its ring, one generator per ideal
// generator, relations the syzygies among them.
FPModule ideal_as_module(const RingIdeal& I);
// M / (I * M), the base change of M to R/I carried over R.
FPModule module_mod_ideal(const FPModule& M, const RingIdeal& I);

// Groebner basis of the augmented relation module; the canonical-form
// engine for elements of M.
ModuleGB module_relations_gb(const FPModule& M, std::uint64_t budget = 0);
ModVec module_element_nf(const FPModule& M, const ModVec& v);
bool module_is_zero(const FPModule& M);

// A map of finitely presented modules, one column per source generator.
// Construction verifies that source relations land in target relations.
struct ModuleMap {
    FPModule source;
    FPModule target;
    std::vector<ModVec> matrix;  // columns of length target.gens
};

ModuleMap make_module_map(FPModule source, FPModule target,
                          std::vector<ModVec> matrix);

// g after f; the composite is re-validated at construction.
ModuleMap compose_module_maps(const ModuleMap& g, const ModuleMap& f);

FPModule map_kernel(const ModuleMap& f, std::vector<ModVec>* inclusion = nullptr);
FPModule map_cokernel(const ModuleMap& f);
FPModule map_image(const ModuleMap& f);
bool map_is_zero(const ModuleMap& f);

FPModule tensor_modules(const FPModule& M, const FPModule& N);
// M ⊗ over the source of f with the target of f: apply f to every entry
// of the presentation.
FPModule base_change(const FPModule& M, const RingHom& f);

// Kaehler differentials of the target of f relative to its source,
// presented on the differentials of the target variables: the Jacobian
// relations of an algebra presentation of the target over the source.
FPModule kaehler(const RingHom& f, std::uint64_t budget = 0);

// Is the sequence regular on R: each entry a nonzerodivisor modulo its
// predecessors, and the quotient by all of them nonzero?
bool is_regular_sequence(const FPRingPtr& ring,
                         const std::vector<RingElement>& seq);

// Syzygies over the quotient ring: generators of
// {c : sum_j c_j cols_j = 0 in R^rank}.
std::vector<ModVec> ring_syzygies(const FPRingPtr& ring, std::size_t rank,
                                  const std::vector<ModVec>& cols);

// Cofactors over the quotient ring, if the element lies in the span.
std::optional<std::vector<Polynomial>> ring_divide(const FPRingPtr& ring,
                                                   std::size_t rank,
                                                   const std::vector<ModVec>& cols,
                                                   const ModVec& v);

}  // namespace prok

#endif  // PROK_FPMOD_HPP
