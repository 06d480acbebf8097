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
#ifndef PROK_MONOMIAL_HPP
#define PROK_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace prok {

// A monomial is an exponent vector; its length is the variable count of
// the ambient polynomial ring.
using Monomial = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Monomial& m) {
    std::uint64_t d = 0;
    for (auto e : m) d += e;
    return d;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// Quotient b / a; caller guarantees divisibility.
inline Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

// Term orders. Elimination orders are block orders: the variables flagged
// in `block` form the first (eliminated) block, compared degrevlex; ties
// fall through to degrevlex on the remaining block. A monomial free of
// block variables is therefore smaller than any monomial involving one.
struct MonomialOrder {
    enum class Kind { Lex, DegRevLex, Elimination };

    Kind kind = Kind::DegRevLex;
    std::vector<bool> block;  // Elimination only: true = first block

    static MonomialOrder lex() { return {Kind::Lex, {}}; }
    static MonomialOrder degrevlex() { return {Kind::DegRevLex, {}}; }
    static MonomialOrder elimination(std::vector<bool> first_block) {
        return {Kind::Elimination, std::move(first_block)};
    }

    // Returns <0, 0, >0 as a is smaller than, equal to, greater than b.
    int compare(const Monomial& a, const Monomial& b) const;
};

namespace detail {

inline int cmp_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

// degrevlex restricted to the indices where mask is `want` (or all
// indices when mask is empty).
inline int cmp_degrevlex_masked(const Monomial& a, const Monomial& b,
                                const std::vector<bool>& mask, bool want) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!mask.empty() && mask[i] != want) continue;
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (!mask.empty() && mask[i] != want) continue;
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace detail

inline int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
        case Kind::Lex:
            return detail::cmp_lex(a, b);
        case Kind::DegRevLex:
            return detail::cmp_degrevlex_masked(a, b, {}, true);
        case Kind::Elimination: {
            int c = detail::cmp_degrevlex_masked(a, b, block, true);
            if (c != 0) return c;
            return detail::cmp_degrevlex_masked(a, b, block, false);
        }
    }
    return 0;
}

}  // namespace prok

#endif  // PROK_MONOMIAL_HPP
