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
#ifndef PROK_MODGB_HPP
#define PROK_MODGB_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "prok/ideal.hpp"
#include "prok/polynomial.hpp"

namespace prok {

// Element of a free module P^rank over a polynomial ring: one polynomial
// per component.
using ModVec = std::vector<Polynomial>;

ModVec mod_zero(const PolyRingPtr& ring, std::size_t rank);
ModVec mod_unit(const PolyRingPtr& ring, std::size_t rank, std::size_t comp);
bool mod_is_zero(const ModVec& v);
ModVec mod_add(const ModVec& a, const ModVec& b);
ModVec mod_sub(const ModVec& a, const ModVec& b);
ModVec mod_neg(const ModVec& a);
ModVec mod_scale(const ModVec& a, const Polynomial& f);
std::string mod_to_string(const ModVec& v);

// Groebner basis of a submodule of P^rank under the position-over-term
// order: lower component index dominates, ties broken by the given
// monomial order. Over ZZ this is a strong basis exactly as in the ring
// case, so normal forms are canonical coset representatives.
struct ModuleGB {
    PolyRingPtr ring;
    std::size_t rank = 0;
    MonomialOrder order;
    std::vector<ModVec> gens;
};

ModuleGB module_groebner(const PolyRingPtr& ring, std::size_t rank,
                         const std::vector<ModVec>& cols,
                         const MonomialOrder& order = MonomialOrder::degrevlex(),
                         std::uint64_t budget = 0);

ModVec module_nf(const ModVec& v, const ModuleGB& gb);
bool module_contains(const ModuleGB& gb, const ModVec& v);

// Generators of the syzygy module {c in P^m : sum_j c_j cols_j = 0},
// computed Schreyer-style through tag components.
std::vector<ModVec> module_syzygies(const PolyRingPtr& ring, std::size_t rank,
                                    const std::vector<ModVec>& cols,
                                    std::uint64_t budget = 0);

// Cofactors q with v = sum_j q_j cols_j, or nullopt when v is not in the
// span of the columns.
std::optional<std::vector<Polynomial>> module_divide(
    const PolyRingPtr& ring, std::size_t rank, const std::vector<ModVec>& cols,
    const ModVec& v, std::uint64_t budget = 0);

}  // namespace prok

#endif  // PROK_MODGB_HPP
