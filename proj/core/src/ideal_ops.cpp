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
#include <algorithm>

#include "prok/errors.hpp"
#include "prok/ideal.hpp"

namespace prok {

namespace {

void check_same_ring(const Ideal& a, const Ideal& b) {
    if (!(*a.ring == *b.ring))
        throw RingMismatchError("ideal operation across different rings");
}

// Fresh homogenization-style variable name; user identifiers cannot
// start with '~'.
const char* kTagVar = "~t";

}  // namespace

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    check_same_ring(a, b);
    std::vector<Polynomial> gens = a.gens;
    gens.insert(gens.end(), b.gens.begin(), b.gens.end());
    return Ideal(a.ring, std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    check_same_ring(a, b);
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens)
        for (const auto& g : b.gens) gens.push_back(f * g);
    return Ideal(a.ring, std::move(gens));
}

Ideal ideal_power(const Ideal& a, std::uint64_t s) {
    if (s == 0)
        return Ideal(a.ring, {Polynomial::constant(a.ring, 1)});
    Ideal r = a;
    for (std::uint64_t i = 1; i < s; ++i) r = ideal_product(r, a);
    return r;
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b, std::uint64_t budget) {
    check_same_ring(a, b);
    if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal(a.ring, {});

    // t-trick: intersect = elim_t( t*a + (1-t)*b ).
    std::vector<std::string> vars;
    vars.push_back(kTagVar);
    vars.insert(vars.end(), a.ring->vars.begin(), a.ring->vars.end());
    PolyRingPtr ext = make_poly_ring(a.ring->base, vars);
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;

    std::vector<Polynomial> gens;
    for (const auto& f : a.gens) gens.push_back(t * f.transport(ext));
    for (const auto& g : b.gens) gens.push_back(one_minus_t * g.transport(ext));

    std::vector<bool> block(ext->nvars(), false);
    block[0] = true;
    GroebnerBasis gb = groebner(Ideal(ext, std::move(gens)),
                                MonomialOrder::elimination(block), budget);
    std::vector<Polynomial> kept;
    for (const auto& p : gb.gens) {
        bool uses_t = false;
        for (const auto& [m, c] : p.terms())
            if (m[0] != 0) {
                uses_t = true;
                break;
            }
        if (uses_t) continue;
        kept.push_back(p.transport(a.ring));
    }
    return Ideal(a.ring, std::move(kept));
}

Ideal ideal_colon(const Ideal& a, const Ideal& b, std::uint64_t budget) {
    check_same_ring(a, b);
    if (b.is_zero_ideal())
        return Ideal(a.ring, {Polynomial::constant(a.ring, 1)});

    bool first = true;
    Ideal acc;
    for (const auto& f : b.gens) {
        // a : (f) = (1/f) * (a ∩ (f))
        Ideal cap = ideal_intersect(a, Ideal(a.ring, {f}), budget);
        std::vector<Polynomial> quots;
        for (const auto& h : cap.gens) quots.push_back(poly_div_exact(h, f));
        Ideal single(a.ring, std::move(quots));
        if (first) {
            acc = std::move(single);
            first = false;
        } else {
            acc = ideal_intersect(acc, single, budget);
        }
    }
    return acc;
}

bool ideal_is_subset(const Ideal& a, const Ideal& b, std::uint64_t budget) {
    check_same_ring(a, b);
    if (a.is_zero_ideal()) return true;
    GroebnerBasis gb = groebner(b, MonomialOrder::degrevlex(), budget);
    for (const auto& f : a.gens)
        if (!gb.contains(f)) return false;
    return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b, std::uint64_t budget) {
    return ideal_is_subset(a, b, budget) && ideal_is_subset(b, a, budget);
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop,
                std::uint64_t budget) {
    std::vector<bool> block(ideal.ring->nvars(), false);
    for (const auto& name : drop) {
        auto idx = ideal.ring->var_index(name);
        if (!idx)
            throw InvalidInputError("eliminate: unknown variable " + name);
        block[*idx] = true;
    }
    std::vector<std::string> kept_vars;
    for (std::size_t i = 0; i < ideal.ring->nvars(); ++i)
        if (!block[i]) kept_vars.push_back(ideal.ring->vars[i]);
    PolyRingPtr small = make_poly_ring(ideal.ring->base, kept_vars);

    GroebnerBasis gb =
        groebner(ideal, MonomialOrder::elimination(block), budget);
    std::vector<Polynomial> kept;
    for (const auto& p : gb.gens) {
        bool uses_dropped = false;
        for (const auto& [m, c] : p.terms()) {
            for (std::size_t i = 0; i < m.size(); ++i)
                if (block[i] && m[i] != 0) {
                    uses_dropped = true;
                    break;
                }
            if (uses_dropped) break;
        }
        if (!uses_dropped) kept.push_back(p.transport(small));
    }
    return Ideal(small, std::move(kept));
}

}  // namespace prok
