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
#ifndef PROK_BASE_RING_HPP
#define PROK_BASE_RING_HPP

#include <gmpxx.h>

#include <string>

namespace prok {

// Coefficient domain for polynomials: the integers, the rationals, or a
// prime field F_p. All arithmetic is exact and arbitrary precision.
//
// Coefficients are carried as mpq_class everywhere with the invariants
//   ZZ: denominator == 1
//   Fp: denominator == 1 and 0 <= numerator < p
// enforced by normalize().
struct BaseRing {
    enum class Kind { ZZ, QQ, Fp };

    Kind kind = Kind::QQ;
    mpz_class p;  // modulus, only meaningful for Fp

    static BaseRing ZZ() { return BaseRing{Kind::ZZ, 0}; }
    static BaseRing QQ() { return BaseRing{Kind::QQ, 0}; }
    static BaseRing Fp(const mpz_class& p);

    bool is_field() const { return kind != Kind::ZZ; }
    bool operator==(const BaseRing& o) const {
        return kind == o.kind && (kind != Kind::Fp || p == o.p);
    }
    bool operator!=(const BaseRing& o) const { return !(*this == o); }

    std::string name() const;

    // Reduce a raw rational into the canonical representative for this
    // domain. Throws InvalidInputError if a non-unit denominator appears
    // over ZZ or a denominator divisible by p appears over Fp.
    void normalize(mpq_class& c) const;

    mpq_class add(const mpq_class& a, const mpq_class& b) const;
    mpq_class sub(const mpq_class& a, const mpq_class& b) const;
    mpq_class mul(const mpq_class& a, const mpq_class& b) const;
    mpq_class neg(const mpq_class& a) const;
    // Multiplicative inverse; fields only.
    mpq_class inv(const mpq_class& a) const;
    // Exact division; throws if the quotient leaves the domain.
    mpq_class div_exact(const mpq_class& a, const mpq_class& b) const;
    // Does b divide a in this domain? (Always true for nonzero b over a
    // field.)
    bool divides(const mpq_class& b, const mpq_class& a) const;
};

std::string coeff_to_string(const mpq_class& c);

}  // namespace prok

#endif  // PROK_BASE_RING_HPP
