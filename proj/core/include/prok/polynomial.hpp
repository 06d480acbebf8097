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
#ifndef PROK_POLYNOMIAL_HPP
#define PROK_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "prok/base_ring.hpp"
#include "prok/monomial.hpp"

namespace prok {

// Descriptor of a polynomial ring: coefficient domain plus an ordered
// variable list. Variable order is declaration order and is part of the
// ring's identity.
struct PolyRing {
    BaseRing base;
    std::vector<std::string> vars;

    bool operator==(const PolyRing& o) const {
        return base == o.base && vars == o.vars;
    }
    std::size_t nvars() const { return vars.size(); }
    std::optional<std::size_t> var_index(const std::string& name) const;
    std::string to_string() const;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_poly_ring(BaseRing base, std::vector<std::string> vars);

// Immutable sparse polynomial. Terms are stored with lexicographic key
// order (storage order only; term orders for division live in
// MonomialOrder) and never contain zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(PolyRingPtr ring, std::map<Monomial, mpq_class> terms);

    static Polynomial zero(PolyRingPtr ring) { return Polynomial(ring); }
    static Polynomial constant(PolyRingPtr ring, const mpq_class& c);
    static Polynomial variable(PolyRingPtr ring, std::size_t index);
    static Polynomial term(PolyRingPtr ring, Monomial m, const mpq_class& c);

    const PolyRingPtr& ring() const { return ring_; }
    const std::map<Monomial, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    std::uint64_t degree() const;  // total degree, 0 for the zero polynomial

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const mpq_class& c) const;
    Polynomial mul_term(const Monomial& m, const mpq_class& c) const;
    Polynomial pow(std::uint64_t e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Leading term with respect to a given order.
    std::pair<Monomial, mpq_class> leading_term(const MonomialOrder& ord) const;

    // Formal partial derivative by variable index.
    Polynomial derivative(std::size_t var) const;

    // Ring change: map each variable to `images[i]`, a polynomial in the
    // target ring. Coefficients are pushed through target normalization.
    Polynomial substitute(const PolyRingPtr& target,
                          const std::vector<Polynomial>& images) const;

    // Reinterpret in `target` by variable name (every variable of this
    // ring must exist there, bases must match).
    Polynomial transport(const PolyRingPtr& target) const;

    // Canonical text form: terms in descending degrevlex, syntax like
    // "3*x^2*y - 1/2*y + 7".
    std::string to_string() const;

private:
    PolyRingPtr ring_;
    std::map<Monomial, mpq_class> terms_;

    void insert_term(const Monomial& m, const mpq_class& c);
    void check_same_ring(const Polynomial& o) const;
};

// Parse canonical polynomial syntax over the given ring. Accepts
// products, powers, parentheses, and rational coefficients, e.g.
// "3*x^2*y - 1/2*y + 7", "(x+y)^2*z - 4". Throws ParseError with
// 1-based line/column on malformed input.
Polynomial parse_polynomial(const PolyRingPtr& ring, const std::string& text);

}  // namespace prok

#endif  // PROK_POLYNOMIAL_HPP
