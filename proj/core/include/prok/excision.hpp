// Copyright 2026 The prok Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROK_EXCISION_HPP_
#define PROK_EXCISION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prok/abgrp.hpp"
#include "prok/fpmod.hpp"
#include "prok/fpring.hpp"
#include "prok/realize.hpp"

namespace prok {

// Certificate that a target variable times the image of an ideal generator
// stays inside the image of the ideal: f(preimage) == var * f(gen), with
// preimage a member of the ideal.  Closure under variables implies closure
// under the whole target ring, so a full table of these witnesses certifies
// that the ideal maps onto an ideal of the target.
struct ClosureWitness {
    std::size_t ideal_gen = 0;
    std::size_t target_var = 0;
    Polynomial preimage;
};

// A ring map f : A -> B together with an ideal I of A that f carries
// isomorphically onto an ideal of B.  Instances exist only in validated
// form: ker(f) meets I trivially, and the closure table below certifies
// the ideal condition.  Optional module generators witness B as a
// finitely generated A-module; operations that need them say so.
struct ExcisionSituation {
    RingHom f;
    RingIdeal I;
    std::vector<RingElement> module_gens;
    std::vector<RingElement> kernel_gens;  // generators of ker(f), in A
    std::vector<ClosureWitness> closure;
    unsigned witness_degree = 0;
    std::string label;

    const FPRingPtr& A() const { return f.source; }
    const FPRingPtr& B() const { return f.target; }
};

// Reason a candidate situation was rejected, with the offending element.
struct ExcisionRejection {
    enum class Kind { kernel_overlap, not_an_ideal };
    Kind kind = Kind::kernel_overlap;
    std::string witness;
};

struct ValidationOutcome {
    std::optional<ExcisionSituation> situation;
    std::optional<ExcisionRejection> rejection;
    bool valid() const { return situation.has_value(); }
};

// Checks both axioms and returns either a validated situation or a
// rejection carrying a witness.  Never throws on a well-formed input.
ValidationOutcome try_validate_excision(const RingHom& f, const RingIdeal& I,
                                        std::vector<RingElement> module_gens = {},
                                        const SpanBudget& budget = {});

// Throwing form: CertificationError naming the failed axiom.
ExcisionSituation validate_excision(const RingHom& f, const RingIdeal& I,
                                    std::vector<RingElement> module_gens = {},
                                    const SpanBudget& budget = {});

// Replaces I by I^s.  Closure witnesses for the power are assembled from
// the level-one table, and kernel disjointness is inherited from I.
ExcisionSituation power_situation(const ExcisionSituation& E, unsigned s);

// The conductor square of the situation.  Cartesianness is certified by
// the kernel criterion: ker(A -> A/I (+) B) = ker(f) /\ I = 0.
struct MilnorSquare {
    FPRingPtr A, B, A_mod_I, B_mod_IB;
    RingHom top;     // A -> B
    RingHom left;    // A -> A/I
    RingHom right;   // B -> B/IB
    RingHom bottom;  // A/I -> B/IB
    bool cartesian = false;
};

MilnorSquare milnor_square(const ExcisionSituation& E);

// Generators for the annihilator of B/f(A) as an ideal of A, found by a
// nullspace computation over the span of f(A) up to the budget degrees
// and then re-certified one by one: every generator times every module
// generator is shown to come from A.  The result is a certified
// under-approximation; enlarging the budget can only grow it.
struct ConductorResult {
    RingIdeal ideal;
    bool certified = false;
    unsigned target_degree = 0;
    unsigned source_degree = 0;
};

ConductorResult conductor(const RingHom& f,
                          const std::vector<RingElement>& module_gens,
                          const SpanBudget& budget = {});

// The degree-one birelative obstruction module: Kaehler differentials of
// B over A, tensored with I*B / I^2*B, together with its realization
// over the base ring.
struct GWModule {
    FPModule omega;               // over B
    FPModule conductor_quotient;  // I*B / I^2*B, components parallel to I.gens
    FPModule tensor;
    RealizedModule realization;
};

GWModule gw_birelative_k1(const ExcisionSituation& E, std::uint64_t budget = 0);

// B / f(A) realized over the base.  The quotient is reached through the
// module-finite ring B/IB: its staircase carries the coordinates, and the
// span of f(A) inside it is grown degree by degree until it stabilizes,
// which certifies completeness.
struct QuotientByImage {
    RealizedModule real;  // basis entries are (0, staircase monomial)
    std::vector<std::vector<mpq_class>> image_span;  // coords over full_staircase
    std::vector<Monomial> full_staircase;
    unsigned span_degree = 0;
};

QuotientByImage quotient_by_image(const ExcisionSituation& E,
                                  const SpanBudget& budget = {});

// The boundary map (B/f(A)) (x) (I/I^2)  ->  Omega^1_{B/A} (x) (I*B/I^2*B)
// sending b (x) x to db (x) x, with certified well-definedness (group-map
// validation over ZZ, explicit span kill over a field) and a surjectivity
// verdict.
struct SwanSequence {
    QuotientByImage left;      // B/f(A)
    RealizedModule right;      // I/I^2 over A
    RealizedModule source;     // tensor of the two over the base
    GWModule gw;
    RealizedMap map;
    bool surjective = false;
};

SwanSequence swan_sequence(const ExcisionSituation& E, std::uint64_t budget = 0,
                           const SpanBudget& span = {});

// The relative elementary matrix attached to b in B and x in I:
//   [ 1 - a1   x    ]         f(a1) = b f(x),  f(a2) = b^2 f(x),
//   [ -a2      1 + a1 ]       both preimages in I.
// Its determinant is exactly one (this is re-checked, not assumed) and
// it is congruent to the identity modulo I.
struct MennickeMatrix {
    RingElement a11, a12, a21, a22;
    bool determinant_one = false;
    bool congruent_to_identity = false;
};

MennickeMatrix mennicke(const ExcisionSituation& E, const RingElement& b,
                        const RingElement& x, const SpanBudget& budget = {});

// Low-degree K-theory by rule.  Degrees <= 0 report the excision
// isomorphism as a cited rule.  Degree 1 computes the relative unit
// group 1 + I when the ring is module-finite over its base with I
// nilpotent: structurally in characteristic zero (truncated logarithm),
// by enumeration over a finite base.  The birelative obstruction module
// is attached in degree 1 when its realization is available.
struct KLowReport {
    int degree = 1;
    bool bass_rule = false;  // degrees <= 0: cited, nothing to compute

    enum class K1Kind { not_applicable, trivial, finite, char_zero };
    K1Kind k1_kind = K1Kind::not_applicable;
    GroupInvariants k1;        // finite case
    unsigned k1_dimension = 0; // characteristic-zero case: dim of I
    std::optional<RealizedModule> birelative;
    std::vector<std::string> notes;
};

KLowReport k_low_rules(const ExcisionSituation& E, int degree,
                       std::uint64_t budget = 0);

}  // namespace prok

#endif  // PROK_EXCISION_HPP_
