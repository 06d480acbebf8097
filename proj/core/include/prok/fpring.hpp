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
#ifndef PROK_FPRING_HPP
#define PROK_FPRING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "prok/ideal.hpp"
#include "prok/polynomial.hpp"

namespace prok {

struct FPRing;
using FPRingPtr = std::shared_ptr<const FPRing>;

// A finitely presented ring P/I: an ambient polynomial ring together with
// a defining ideal and a fixed Groebner basis of it. Elements are carried
// as canonical normal forms, so equality is representative equality.
struct FPRing {
    PolyRingPtr poly;
    Ideal defining;
    GroebnerBasis gb;  // degrevlex basis of `defining`
    std::string label;

    const BaseRing& base() const { return poly->base; }
    std::size_t nvars() const { return poly->nvars(); }
    bool is_zero_ring() const;
    std::string to_string() const;
};

FPRingPtr make_fp_ring(PolyRingPtr poly, std::vector<Polynomial> defining,
                       std::string label = "", unsigned budget = 0);

// Same ambient polynomial ring and same reduced defining basis; labels
// do not participate.
bool operator==(const FPRing& a, const FPRing& b);
inline bool operator!=(const FPRing& a, const FPRing& b) { return !(a == b); }

// The polynomial ring itself, with no relations.
FPRingPtr make_free_ring(PolyRingPtr poly, std::string label = "");

class RingElement {
public:
    RingElement(FPRingPtr ring, const Polynomial& rep);

    const FPRingPtr& ring() const { return ring_; }
    const Polynomial& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator-() const;
    RingElement operator*(const RingElement& o) const;
    RingElement pow(unsigned e) const;
    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    std::string to_string() const { return rep_.to_string(); }

private:
    FPRingPtr ring_;
    Polynomial rep_;
};

RingElement ring_element(const FPRingPtr& ring, const std::string& expr);
RingElement ring_zero(const FPRingPtr& ring);
RingElement ring_one(const FPRingPtr& ring);

// An ideal of a finitely presented ring, given by generators.
struct RingIdeal {
    FPRingPtr ring;
    std::vector<RingElement> gens;

    // The preimage in the ambient polynomial ring: defining ideal plus
    // lifts of the generators.
    Ideal ambient() const;
};

RingIdeal make_ring_ideal(FPRingPtr ring, std::vector<RingElement> gens);
RingIdeal make_ring_ideal(const FPRingPtr& ring,
                          const std::vector<std::string>& exprs);
RingIdeal ring_ideal_power(const RingIdeal& I, unsigned s);
RingIdeal ring_ideal_product(const RingIdeal& I, const RingIdeal& J);
RingIdeal ring_ideal_sum(const RingIdeal& I, const RingIdeal& J);
RingIdeal ring_ideal_intersect(const RingIdeal& I, const RingIdeal& J);
bool ring_ideal_contains(const RingIdeal& I, const RingElement& x);
bool ring_ideal_is_zero(const RingIdeal& I);
bool ring_ideal_is_subset(const RingIdeal& I, const RingIdeal& J);
bool ring_ideal_equal(const RingIdeal& I, const RingIdeal& J);
// Least s <= bound with I^s = 0, if any.
std::optional<unsigned> nilpotency_index(const RingIdeal& I, unsigned bound);

// A ring homomorphism determined by images of the source variables.
// Construction verifies that the defining relations map to zero.
struct RingHom {
    FPRingPtr source;
    FPRingPtr target;
    std::vector<Polynomial> images;  // in target->poly, one per source var

    Polynomial apply_raw(const Polynomial& f) const;
    RingElement apply(const RingElement& x) const;
    RingElement apply(const Polynomial& f) const;
    RingIdeal apply(const RingIdeal& I) const;  // ideal generated by images
};

RingHom make_ring_hom(FPRingPtr source, FPRingPtr target,
                      std::vector<Polynomial> images);
RingHom identity_hom(const FPRingPtr& ring);
RingHom compose(const RingHom& g, const RingHom& f);  // g after f

// Kernel of the composite P_source -> source -> target, as an ideal of
// the source's ambient polynomial ring. Contains the source's defining
// ideal; the quotient by it is the kernel in the source ring.
Ideal hom_kernel(const RingHom& f, unsigned budget = 0);

// Base-module shape of a finitely presented ring: the monomials that
// carry coordinates in canonical normal forms, with their additive
// moduli (0 = a free summand, only possible over ZZ and QQ).
struct ArtinianBasis {
    std::vector<Monomial> monomials;
    std::vector<mpz_class> moduli;
    bool finite_cardinality = false;
    std::optional<mpz_class> cardinality;
};

// The base-module basis when the ring is module-finite over its base;
// nullopt otherwise.
std::optional<ArtinianBasis> artinian_basis(const FPRingPtr& ring);

// Budgets for degree-bounded span searches: candidate target monomials up
// to `target_degree`, coefficient monomials from the source up to
// `source_degree`.
struct SpanBudget {
    unsigned target_degree = 6;
    unsigned source_degree = 8;
};

// Is b in the image of f? Searches for a preimage with monomials of
// degree at most source_degree; a returned polynomial is a certified
// preimage. nullopt means none was found within the budget.
std::optional<Polynomial> subring_image_membership(const RingHom& f,
                                                   const RingElement& b,
                                                   unsigned source_degree);

// Is b in the image of the restriction of f to the ideal I? A returned
// preimage lies in I.
std::optional<Polynomial> ideal_image_membership(const RingHom& f,
                                                 const RingIdeal& I,
                                                 const RingElement& b,
                                                 unsigned source_degree);

// Certificate that the target of f is generated as a source-module by
// finitely many monomials: multiplication by every target variable keeps
// the span of `generators` with coefficients of degree <= source_degree.
struct ModuleFiniteWitness {
    std::vector<Monomial> generators;  // monomials of the target
    unsigned source_degree = 0;
};

std::optional<ModuleFiniteWitness> is_module_finite(const RingHom& f,
                                                    const SpanBudget& budget);

// Same certificate for caller-supplied generators. A failed bounded
// search is inconclusive, never a refutation.
struct ModuleFiniteCheck {
    enum class Verdict { yes, inconclusive };
    Verdict verdict = Verdict::inconclusive;
    std::vector<RingElement> generators;
    unsigned source_degree = 0;
    std::string detail;  // the first product that escaped the span
};

ModuleFiniteCheck module_finite_check(const RingHom& f,
                                      const std::vector<RingElement>& gens,
                                      const SpanBudget& budget);

// Exact linear algebra over the base ring on polynomial supports: solve
// v = sum_j c_j spanning_j, and generators of the relation lattice among
// the spanning vectors.
std::optional<std::vector<mpq_class>> base_span_solve(
    const BaseRing& base, const std::vector<Polynomial>& spanning,
    const Polynomial& v);
std::vector<std::vector<mpq_class>> base_span_relations(
    const BaseRing& base, const std::vector<Polynomial>& spanning);

// All monomials of the ring in `nvars` variables with total degree <= d,
// in a fixed deterministic order (degree, then lex).
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned d);

}  // namespace prok

#endif  // PROK_FPRING_HPP
