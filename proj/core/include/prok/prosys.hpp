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
#ifndef PROK_PROSYS_HPP
#define PROK_PROSYS_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "prok/excision.hpp"
#include "prok/realize.hpp"

namespace prok {

// An inverse system of realized modules indexed by positive integers.
// Levels and transitions are produced lazily and memoized; transition(s, r)
// is the structure map M_r -> M_s for r >= s, and transition(s, s) is the
// identity. Copies share the cache.
//
// Two optional callbacks tune certification:
//  - witness_hint(s, r_max): a candidate r whose transition into level s is
//    expected to vanish. The certifier verifies the claim before using it
//    and falls back to plain search when verification fails.
//  - stable_at(r): true when the system is provably constant from level r
//    on (levels and transitions no longer change up to canonical
//    isomorphism). A nonzero transition out of a stable level refutes
//    pro-vanishing; without this callback the certifier can only report an
//    exhausted budget, never a refutation.
class ProSystem {
 public:
    ProSystem() = default;
    ProSystem(std::string kind,
              std::function<RealizedModule(unsigned)> level_fn,
              std::function<RealizedMap(unsigned, unsigned)> transition_fn,
              std::function<std::optional<unsigned>(unsigned, unsigned)> witness_hint = {},
              std::function<bool(unsigned)> stability_fn = {});

    const std::string& kind() const;
    const RealizedModule& level(unsigned s) const;
    const RealizedMap& transition(unsigned s, unsigned r) const;

    bool has_hint() const;
    std::optional<unsigned> hint(unsigned s, unsigned r_max) const;
    bool has_stability() const;
    bool stable_at(unsigned r) const;

    // Name of the bound behind the hint, recorded in certificates whose
    // every witness came from a verified hint.
    const std::string& hint_method() const;
    void set_hint_method(std::string method);

 private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// A levelwise map between two pro-systems over the same index set. The
// component at level s goes level(s) of source to level(s) of target;
// commutation with the transitions is checked where certification needs
// it, not at construction time.
class ProMap {
 public:
    ProMap() = default;
    ProMap(ProSystem source, ProSystem target,
           std::function<RealizedMap(unsigned)> component_fn);

    const ProSystem& source() const;
    const ProSystem& target() const;
    const RealizedMap& at(unsigned s) const;

 private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// Outcome of a bounded pro-vanishing search. "certified" carries, for each
// level s <= levels, the least accepted r with transition(s, r) = 0 (the
// hint value when a verified hint supplied it, which may exceed the least
// possible r). "refuted" names the level whose transitions provably never
// die. "budget_exhausted" reports the surviving classes at the boundary.
struct ProZeroCertificate {
    enum class Status { certified, refuted, budget_exhausted };

    Status status = Status::budget_exhausted;
    std::string system;
    unsigned levels = 0;
    unsigned r_max = 0;
    std::map<unsigned, unsigned> witness;
    std::string method;
    unsigned failed_level = 0;
    std::string detail;

    bool ok() const { return status == Status::certified; }
};

ProZeroCertificate pro_zero_certify(const ProSystem& sys, unsigned levels,
                                    unsigned r_max);

// Re-check a certificate against the system it claims to describe: every
// recorded witness transition must still realize to the zero map.
bool revalidate(const ProSystem& sys, const ProZeroCertificate& cert);

// Pro-isomorphism via pro-vanishing of the levelwise kernel and cokernel
// systems. Throws CertificationError if the components of f fail to
// intertwine the transitions on the evaluated range.
struct ProIsoCertificate {
    ProZeroCertificate kernel_cert;
    ProZeroCertificate cokernel_cert;
    ProZeroCertificate::Status status = ProZeroCertificate::Status::budget_exhausted;

    bool ok() const { return status == ProZeroCertificate::Status::certified; }
};

ProIsoCertificate pro_iso_certify(const ProMap& f, unsigned levels, unsigned r_max);

ProSystem kernel_system(const ProMap& f);
ProSystem cokernel_system(const ProMap& f);

// f(s) . T_X(s, r) == T_Y(s, r) . f(r) as realized maps.
bool pro_map_commutes(const ProMap& f, unsigned s, unsigned r);

// transition(s, q) == transition(s, r) . transition(r, q) for s <= r <= q,
// and transition(s, s) is the identity.
bool check_functoriality(const ProSystem& sys, unsigned s, unsigned r, unsigned q);

// {Omega^1_{B/A} tensor_B I^s B / I^{2s} B} with transitions induced by the
// inclusions of ideal powers. Vanishes identically when the situation is
// structural (B = A/ker f), which the stability callback exploits.
ProSystem gw_pro_system(const ExcisionSituation& E, std::uint64_t budget = 0);

// {Tor_n^A(A/I^s, A/I^s)} with transitions induced by the two quotient
// projections, composed one slot at a time.
ProSystem tor_pro_system(const FPRingPtr& ring, const RingIdeal& I, unsigned n,
                         std::uint64_t budget = 0);

// One level of a user-supplied unitalization system: a presentation of the
// ring Z x| I^s together with its augmentation ideal.
struct UnitalizationLevel {
    FPRingPtr ring;
    RingIdeal augmentation;
};

// Tor_n over the supplied presentations, levelwise. No transition data is
// derivable from bare presentations, so transitions exist only between
// zero levels; certification beyond "every level vanishes" throws.
ProSystem unitalization_tor_system(std::vector<UnitalizationLevel> levels, unsigned n);

ProSystem custom_pro_system(std::string kind,
                            std::function<RealizedModule(unsigned)> level_fn,
                            std::function<RealizedMap(unsigned, unsigned)> transition_fn);

// The pro-map {(B/f(A)) tensor I^s/I^{2s}} -> {GW level s} whose component
// at s is the Swan map of the s-th power situation. Source and target are
// built from shared per-level state so the realizations agree on the nose.
ProMap swan_gw_map(const ExcisionSituation& E, std::uint64_t budget = 0);

// A descending chain of ideals in a fixed ring, indexed by s >= 1.
// Descent is certified lazily on the consecutive pairs a consumer touches.
struct IdealChain {
    std::function<RingIdeal(unsigned)> at;
};

// s -> I^(multiplier * s).
IdealChain power_chain(const RingIdeal& I, unsigned multiplier = 1);

// Mutual cofinality bounds: for each s <= levels the least r <= r_max with
// first(r) contained in second(s), and symmetrically.
struct IntertwineResult {
    bool certified = false;
    std::map<unsigned, unsigned> first_in_second;
    std::map<unsigned, unsigned> second_in_first;
    unsigned failed_level = 0;
    std::string detail;
};

IntertwineResult intertwine_check(const IdealChain& first, const IdealChain& second,
                                  unsigned levels, unsigned r_max);

// Least s with I^s intersect K = (0), for K killed by a power of I. The
// minimality witness is a nonzero element of I^(s-1) intersect K when
// s >= 2. Throws CertificationError if no power of I up to the bound kills
// K, BudgetError if the intersection never empties within the bound.
struct ArtinReesWitness {
    unsigned s = 0;
    unsigned torsion_exponent = 0;
    bool minimal_certified = false;
    std::string witness;
};

ArtinReesWitness artin_rees_witness(const FPRingPtr& ring, const RingIdeal& I,
                                    const RingIdeal& K, unsigned bound);

// Least n >= 1 with sub * J^n = J^(n+1), for sub a subideal of J. The
// degenerate case sub = J returns 1 and is flagged. n = 0 is never
// returned: the search certifies stabilization, not the inclusion
// J = sub + higher terms that n = 0 would assert.
struct ReductionIndex {
    unsigned index = 0;
    bool degenerate_equal = false;
};

ReductionIndex reduction_index(const RingIdeal& sub, const RingIdeal& J,
                               unsigned bound);

// One layer of the implication chain behind pro excision, evaluated
// bottom-up. verdict is one of "true", "false", "certified",
// "not-certified", "cited", "not-supplied"; provenance is "computed",
// "structural", or "cited-rule".
struct CriteriaLayer {
    std::string name;
    std::string verdict;
    std::string provenance;
    std::string details;
    std::vector<ProZeroCertificate> certificates;
};

struct CriteriaReport {
    std::vector<CriteriaLayer> layers;
    unsigned tor_depth = 0;
    unsigned level_bound = 0;
    unsigned transition_bound = 0;
};

CriteriaReport criteria_report(const ExcisionSituation& E, unsigned tor_depth,
                               unsigned levels = 2, unsigned r_max = 12,
                               const std::vector<UnitalizationLevel>* unitalization = nullptr);

}  // namespace prok

#endif  // PROK_PROSYS_HPP
