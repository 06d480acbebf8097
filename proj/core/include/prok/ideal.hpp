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
#ifndef PROK_IDEAL_HPP
#define PROK_IDEAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "prok/polynomial.hpp"

namespace prok {

// Default cap on basis-reduction steps per Gröbner computation.
// Overridable per call, globally, or via PROK_BUDGET_GROEBNER.
std::uint64_t default_groebner_budget();
void set_default_groebner_budget(std::uint64_t limit);

// Finitely generated ideal in a polynomial ring. Zero generators are
// dropped on construction; the generator list keeps user order.
struct Ideal {
    PolyRingPtr ring;
    std::vector<Polynomial> gens;

    Ideal() = default;
    Ideal(PolyRingPtr r, std::vector<Polynomial> g);

    bool is_zero_ideal() const { return gens.empty(); }
    std::string to_string() const;
};

// A reduced Gröbner basis together with the order it was computed for.
// Over a field the basis is monic and fully inter-reduced; over the
// integers it is a reduced strong basis with positive leading
// coefficients and tail coefficients remaindered into [0, lc) of the
// applicable reducers. Generator order is descending by leading monomial,
// making equal ideals print identically.
struct GroebnerBasis {
    PolyRingPtr ring;
    MonomialOrder order;
    std::vector<Polynomial> gens;

    bool contains(const Polynomial& f) const;
};

// Buchberger completion; over ZZ the strong variant with S- and
// gcd-polynomials. `budget` = 0 means the configured default. Exceeding
// the budget throws BudgetError.
GroebnerBasis groebner(const Ideal& ideal, const MonomialOrder& order,
                       std::uint64_t budget = 0);

// Canonical normal form of f modulo a completed basis. Remainders are
// unique per coset (coefficient-remaindered over ZZ), so this is the
// canonical-representative map for quotient rings.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Exact polynomial division; throws InvalidInputError if f does not
// divide h in the ring.
Polynomial poly_div_exact(const Polynomial& h, const Polynomial& f);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, std::uint64_t s);
Ideal ideal_intersect(const Ideal& a, const Ideal& b, std::uint64_t budget = 0);
// Ideal quotient a : b.
Ideal ideal_colon(const Ideal& a, const Ideal& b, std::uint64_t budget = 0);
bool ideal_is_subset(const Ideal& a, const Ideal& b, std::uint64_t budget = 0);
bool ideal_equal(const Ideal& a, const Ideal& b, std::uint64_t budget = 0);

// Generators of the elimination ideal I ∩ base[kept vars], returned in
// the smaller ring without the dropped variables.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop,
                std::uint64_t budget = 0);

}  // namespace prok

#endif  // PROK_IDEAL_HPP
