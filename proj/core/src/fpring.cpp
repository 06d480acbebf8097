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
#include "prok/fpring.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "prok/abgrp.hpp"
#include "prok/errors.hpp"
#include "prok/linalg.hpp"

namespace prok {

namespace {

void check_element_ring(const FPRingPtr& ring, const Polynomial& rep) {
    if (!rep.ring() || *rep.ring() != *ring->poly)
        throw RingMismatchError("element does not live in the ambient ring of " +
                                ring->to_string());
}

}  // namespace

bool FPRing::is_zero_ring() const {
    return normal_form(Polynomial::constant(poly, 1), gb).is_zero();
}

std::string FPRing::to_string() const {
    if (!label.empty()) return label;
    std::string s = poly->to_string();
    if (!defining.is_zero_ideal()) s += " / " + defining.to_string();
    return s;
}

FPRingPtr make_fp_ring(PolyRingPtr poly, std::vector<Polynomial> defining,
                       std::string label, unsigned budget) {
    Ideal ideal(poly, std::move(defining));
    GroebnerBasis gb = groebner(ideal, MonomialOrder::degrevlex(), budget);
    auto ring = std::make_shared<FPRing>();
    ring->poly = std::move(poly);
    ring->defining = std::move(ideal);
    ring->gb = std::move(gb);
    ring->label = std::move(label);
    return ring;
}

FPRingPtr make_free_ring(PolyRingPtr poly, std::string label) {
    return make_fp_ring(std::move(poly), {}, std::move(label));
}

bool operator==(const FPRing& a, const FPRing& b) {
    if (!(*a.poly == *b.poly)) return false;
    for (const auto& g : a.gb.gens)
        if (!b.gb.contains(g)) return false;
    for (const auto& g : b.gb.gens)
        if (!a.gb.contains(g)) return false;
    return true;
}

RingElement::RingElement(FPRingPtr ring, const Polynomial& rep)
    : ring_(std::move(ring)) {
    check_element_ring(ring_, rep);
    rep_ = normal_form(rep, ring_->gb);
}

RingElement RingElement::operator+(const RingElement& o) const {
    return RingElement(ring_, rep_ + o.rep_);
}
RingElement RingElement::operator-(const RingElement& o) const {
    return RingElement(ring_, rep_ - o.rep_);
}
RingElement RingElement::operator-() const { return RingElement(ring_, -rep_); }
RingElement RingElement::operator*(const RingElement& o) const {
    return RingElement(ring_, rep_ * o.rep_);
}
RingElement RingElement::pow(unsigned e) const {
    RingElement acc = ring_one(ring_);
    RingElement sq = *this;
    for (unsigned k = e; k > 0; k >>= 1) {
        if (k & 1u) acc = acc * sq;
        if (k > 1) sq = sq * sq;
    }
    return acc;
}
bool RingElement::operator==(const RingElement& o) const {
    return rep_ == o.rep_;
}

RingElement ring_element(const FPRingPtr& ring, const std::string& expr) {
    return RingElement(ring, parse_polynomial(ring->poly, expr));
}
RingElement ring_zero(const FPRingPtr& ring) {
    return RingElement(ring, Polynomial::zero(ring->poly));
}
RingElement ring_one(const FPRingPtr& ring) {
    return RingElement(ring, Polynomial::constant(ring->poly, 1));
}

Ideal RingIdeal::ambient() const {
    std::vector<Polynomial> gs = ring->defining.gens;
    for (const auto& g : gens) gs.push_back(g.rep());
    return Ideal(ring->poly, std::move(gs));
}

RingIdeal make_ring_ideal(FPRingPtr ring, std::vector<RingElement> gens) {
    std::vector<RingElement> kept;
    for (auto& g : gens) {
        if (g.ring() != ring && *g.ring() != *ring)
            throw RingMismatchError("ideal generator from a different ring");
        if (!g.is_zero()) kept.push_back(std::move(g));
    }
    return RingIdeal{std::move(ring), std::move(kept)};
}

RingIdeal make_ring_ideal(const FPRingPtr& ring,
                          const std::vector<std::string>& exprs) {
    std::vector<RingElement> gens;
    for (const auto& e : exprs) gens.push_back(ring_element(ring, e));
    return make_ring_ideal(ring, std::move(gens));
}

RingIdeal ring_ideal_power(const RingIdeal& I, unsigned s) {
    if (s == 0) return make_ring_ideal(I.ring, {ring_one(I.ring)});
    RingIdeal acc = I;
    for (unsigned k = 1; k < s; ++k) acc = ring_ideal_product(acc, I);
    return acc;
}

RingIdeal ring_ideal_product(const RingIdeal& I, const RingIdeal& J) {
    // Raw pairwise products repeat and pile up exponentially under
    // iterated powers; zero and duplicate normal forms carry nothing.
    std::vector<RingElement> gens;
    for (const auto& a : I.gens)
        for (const auto& b : J.gens) {
            RingElement p = a * b;
            if (p.is_zero()) continue;
            bool dup = false;
            for (const auto& g : gens)
                if (g == p) {
                    dup = true;
                    break;
                }
            if (!dup) gens.push_back(std::move(p));
        }
    return make_ring_ideal(I.ring, std::move(gens));
}

RingIdeal ring_ideal_sum(const RingIdeal& I, const RingIdeal& J) {
    std::vector<RingElement> gens = I.gens;
    gens.insert(gens.end(), J.gens.begin(), J.gens.end());
    return make_ring_ideal(I.ring, std::move(gens));
}

RingIdeal ring_ideal_intersect(const RingIdeal& I, const RingIdeal& J) {
    Ideal meet = ideal_intersect(I.ambient(), J.ambient());
    std::vector<RingElement> gens;
    for (const auto& g : meet.gens) gens.emplace_back(I.ring, g);
    return make_ring_ideal(I.ring, std::move(gens));
}

bool ring_ideal_contains(const RingIdeal& I, const RingElement& x) {
    GroebnerBasis gb =
        groebner(I.ambient(), MonomialOrder::degrevlex());
    return gb.contains(x.rep());
}

bool ring_ideal_is_zero(const RingIdeal& I) {
    for (const auto& g : I.gens)
        if (!g.is_zero()) return false;
    return true;
}

bool ring_ideal_is_subset(const RingIdeal& I, const RingIdeal& J) {
    return ideal_is_subset(I.ambient(), J.ambient());
}

bool ring_ideal_equal(const RingIdeal& I, const RingIdeal& J) {
    return ideal_equal(I.ambient(), J.ambient());
}

std::optional<unsigned> nilpotency_index(const RingIdeal& I, unsigned bound) {
    for (unsigned s = 1; s <= bound; ++s)
        if (ring_ideal_is_zero(ring_ideal_power(I, s))) return s;
    return std::nullopt;
}

Polynomial RingHom::apply_raw(const Polynomial& f) const {
    return f.substitute(target->poly, images);
}
RingElement RingHom::apply(const RingElement& x) const {
    return RingElement(target, apply_raw(x.rep()));
}
RingElement RingHom::apply(const Polynomial& f) const {
    return RingElement(target, apply_raw(f));
}
RingIdeal RingHom::apply(const RingIdeal& I) const {
    std::vector<RingElement> gens;
    for (const auto& g : I.gens) gens.push_back(apply(g));
    return make_ring_ideal(target, std::move(gens));
}

RingHom make_ring_hom(FPRingPtr source, FPRingPtr target,
                      std::vector<Polynomial> images) {
    if (source->base() != target->base())
        throw RingMismatchError("homomorphism across different base rings");
    if (images.size() != source->nvars())
        throw InvalidInputError("homomorphism needs one image per variable");
    for (const auto& im : images)
        if (!im.ring() || *im.ring() != *target->poly)
            throw RingMismatchError("image polynomial not in the target ring");
    RingHom f{std::move(source), std::move(target), std::move(images)};
    for (const auto& g : f.source->defining.gens) {
        if (!f.apply(g).is_zero())
            throw InvalidInputError("map does not respect the relation " +
                                    g.to_string());
    }
    return f;
}

RingHom identity_hom(const FPRingPtr& ring) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        images.push_back(Polynomial::variable(ring->poly, i));
    return make_ring_hom(ring, ring, std::move(images));
}

RingHom compose(const RingHom& g, const RingHom& f) {
    if (*f.target != *g.source)
        throw RingMismatchError("composition across mismatched rings");
    std::vector<Polynomial> images;
    for (const auto& im : f.images) images.push_back(g.apply_raw(im));
    return make_ring_hom(f.source, g.target, std::move(images));
}

Ideal hom_kernel(const RingHom& f, unsigned budget) {
    const PolyRingPtr& sp = f.source->poly;
    const PolyRingPtr& tp = f.target->poly;
    std::size_t nt = tp->nvars();
    std::size_t ns = sp->nvars();

    std::vector<std::string> names;
    for (const auto& v : tp->vars) names.push_back("~b:" + v);
    for (const auto& v : sp->vars) names.push_back("~a:" + v);
    PolyRingPtr comb = make_poly_ring(sp->base, names);

    std::vector<Polynomial> tvars;
    for (std::size_t j = 0; j < nt; ++j)
        tvars.push_back(Polynomial::variable(comb, j));
    auto lift_target = [&](const Polynomial& g) {
        return g.substitute(comb, tvars);
    };

    std::vector<Polynomial> gens;
    for (const auto& g : f.target->defining.gens) gens.push_back(lift_target(g));
    for (std::size_t i = 0; i < ns; ++i)
        gens.push_back(Polynomial::variable(comb, nt + i) -
                       lift_target(f.images[i]));

    std::vector<std::string> drop(names.begin(), names.begin() + nt);
    Ideal contracted = eliminate(Ideal(comb, std::move(gens)), drop, budget);

    std::vector<Polynomial> svars;
    for (std::size_t i = 0; i < ns; ++i)
        svars.push_back(Polynomial::variable(sp, i));
    std::vector<Polynomial> out;
    for (const auto& g : contracted.gens) out.push_back(g.substitute(sp, svars));
    return Ideal(sp, std::move(out));
}

namespace {

// Leading monomials of the basis that reduce coefficients completely:
// over a field every element, over ZZ those with leading coefficient 1.
std::vector<Monomial> unit_blockers(const FPRing& ring) {
    std::vector<Monomial> out;
    for (const auto& g : ring.gb.gens) {
        auto [m, c] = g.leading_term(ring.gb.order);
        if (ring.base().is_field() || c == 1) out.push_back(m);
    }
    return out;
}

bool blocked(const std::vector<Monomial>& blockers, const Monomial& m) {
    for (const auto& b : blockers)
        if (mono_divides(b, m)) return true;
    return false;
}

// Is the complement of the monomial ideal generated by `blockers` finite?
// True exactly when every variable has a blocker supported on it alone.
bool staircase_finite(std::size_t nvars, const std::vector<Monomial>& blockers) {
    for (std::size_t i = 0; i < nvars; ++i) {
        bool pure = false;
        for (const auto& b : blockers) {
            bool only_i = true;
            for (std::size_t j = 0; j < b.size(); ++j)
                if (j != i && b[j] != 0) only_i = false;
            if (only_i) {
                pure = true;
                break;
            }
        }
        if (!pure) return false;
    }
    return true;
}

std::vector<Monomial> enumerate_staircase(std::size_t nvars,
                                          const std::vector<Monomial>& blockers) {
    std::vector<Monomial> out;
    std::set<Monomial> seen;
    std::vector<Monomial> frontier{Monomial(nvars, 0)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        Monomial m = frontier.back();
        frontier.pop_back();
        if (blocked(blockers, m)) continue;
        out.push_back(m);
        for (std::size_t i = 0; i < nvars; ++i) {
            Monomial next = m;
            ++next[i];
            if (seen.insert(next).second) frontier.push_back(next);
        }
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        if (total_degree(a) != total_degree(b))
            return total_degree(a) < total_degree(b);
        return a < b;
    });
    return out;
}

}  // namespace

std::optional<ArtinianBasis> artinian_basis(const FPRingPtr& ring) {
    std::vector<Monomial> blockers = unit_blockers(*ring);
    std::size_t n = ring->nvars();
    if (!staircase_finite(n, blockers)) return std::nullopt;

    ArtinianBasis out;
    out.monomials = enumerate_staircase(n, blockers);

    const BaseRing& base = ring->base();
    bool finite = true;
    mpz_class card = 1;
    for (const auto& m : out.monomials) {
        mpz_class modulus = 0;
        if (base.kind == BaseRing::Kind::Fp) {
            modulus = base.p;
        } else if (base.kind == BaseRing::Kind::ZZ) {
            bool any = false;
            for (const auto& g : ring->gb.gens) {
                auto [lm, lc] = g.leading_term(ring->gb.order);
                if (!mono_divides(lm, m)) continue;
                mpz_class a = abs(mpz_class(lc.get_num()));
                if (!any || a < modulus) modulus = a;
                any = true;
            }
            if (!any) modulus = 0;
        }
        out.moduli.push_back(modulus);
        if (modulus == 0)
            finite = false;
        else
            card *= modulus;
    }
    out.finite_cardinality = finite;
    if (finite) out.cardinality = card;
    return out;
}

namespace {

void exact_degree_monomials(std::size_t nvars, unsigned d, std::size_t var,
                            Monomial& cur, std::vector<Monomial>& out) {
    if (var + 1 == nvars) {
        cur[var] = d;
        out.push_back(cur);
        cur[var] = 0;
        return;
    }
    for (unsigned e = d;; --e) {
        cur[var] = e;
        exact_degree_monomials(nvars, d - e, var + 1, cur, out);
        cur[var] = 0;
        if (e == 0) break;
    }
}

}  // namespace

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned d) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        out.push_back(Monomial{});
        return out;
    }
    Monomial cur(nvars, 0);
    for (unsigned k = 0; k <= d; ++k)
        exact_degree_monomials(nvars, k, 0, cur, out);
    return out;
}

namespace {

struct CoordSpace {
    std::map<Monomial, std::size_t> index;

    void add_support(const Polynomial& f) {
        for (const auto& [m, c] : f.terms()) index.emplace(m, 0);
    }
    void freeze() {
        std::size_t k = 0;
        for (auto& [m, i] : index) i = k++;
    }
    std::size_t dim() const { return index.size(); }
    std::vector<mpq_class> coords(const Polynomial& f) const {
        std::vector<mpq_class> v(index.size(), 0);
        for (const auto& [m, c] : f.terms()) v[index.at(m)] = c;
        return v;
    }
};

}  // namespace

std::optional<std::vector<mpq_class>> base_span_solve(
    const BaseRing& base, const std::vector<Polynomial>& spanning,
    const Polynomial& v) {
    CoordSpace space;
    for (const auto& w : spanning) space.add_support(w);
    space.add_support(v);
    space.freeze();

    if (base.kind == BaseRing::Kind::ZZ) {
        IntMatrix M(space.dim(), spanning.size());
        for (std::size_t j = 0; j < spanning.size(); ++j) {
            auto col = space.coords(spanning[j]);
            for (std::size_t i = 0; i < space.dim(); ++i)
                M.a[i][j] = col[i].get_num();
        }
        std::vector<mpz_class> b(space.dim());
        auto bc = space.coords(v);
        for (std::size_t i = 0; i < space.dim(); ++i) b[i] = bc[i].get_num();
        auto sol = solve_integer(M, b);
        if (!sol) return std::nullopt;
        return std::vector<mpq_class>(sol->begin(), sol->end());
    }

    FieldMatrix M(base, space.dim(), spanning.size());
    for (std::size_t j = 0; j < spanning.size(); ++j) {
        auto col = space.coords(spanning[j]);
        for (std::size_t i = 0; i < space.dim(); ++i) M.a[i][j] = col[i];
    }
    return field_solve(M, space.coords(v));
}

std::vector<std::vector<mpq_class>> base_span_relations(
    const BaseRing& base, const std::vector<Polynomial>& spanning) {
    CoordSpace space;
    for (const auto& w : spanning) space.add_support(w);
    space.freeze();

    std::vector<std::vector<mpq_class>> out;
    if (base.kind == BaseRing::Kind::ZZ) {
        IntMatrix M(space.dim(), spanning.size());
        for (std::size_t j = 0; j < spanning.size(); ++j) {
            auto col = space.coords(spanning[j]);
            for (std::size_t i = 0; i < space.dim(); ++i)
                M.a[i][j] = col[i].get_num();
        }
        IntMatrix K = integer_nullspace(M);
        for (std::size_t k = 0; k < K.cols; ++k) {
            std::vector<mpq_class> rel(spanning.size());
            for (std::size_t j = 0; j < spanning.size(); ++j)
                rel[j] = mpq_class(K.a[j][k]);
            out.push_back(std::move(rel));
        }
        return out;
    }

    FieldMatrix M(base, space.dim(), spanning.size());
    for (std::size_t j = 0; j < spanning.size(); ++j) {
        auto col = space.coords(spanning[j]);
        for (std::size_t i = 0; i < space.dim(); ++i) M.a[i][j] = col[i];
    }
    FieldMatrix K = field_nullspace(M);
    for (std::size_t k = 0; k < K.cols; ++k) {
        std::vector<mpq_class> rel(spanning.size());
        for (std::size_t j = 0; j < spanning.size(); ++j) rel[j] = K.a[j][k];
        out.push_back(std::move(rel));
    }
    return out;
}

std::optional<Polynomial> subring_image_membership(const RingHom& f,
                                                   const RingElement& b,
                                                   unsigned source_degree) {
    std::vector<Monomial> cands =
        monomials_up_to(f.source->nvars(), source_degree);
    std::vector<Polynomial> spanning;
    for (const auto& m : cands)
        spanning.push_back(
            f.apply(Polynomial::term(f.source->poly, m, 1)).rep());
    auto sol = base_span_solve(f.source->base(), spanning, b.rep());
    if (!sol) return std::nullopt;
    Polynomial pre = Polynomial::zero(f.source->poly);
    for (std::size_t j = 0; j < cands.size(); ++j) {
        if ((*sol)[j] == 0) continue;
        pre = pre + Polynomial::term(f.source->poly, cands[j], (*sol)[j]);
    }
    return pre;
}

std::optional<Polynomial> ideal_image_membership(const RingHom& f,
                                                 const RingIdeal& I,
                                                 const RingElement& b,
                                                 unsigned source_degree) {
    std::vector<Monomial> cands =
        monomials_up_to(f.source->nvars(), source_degree);
    std::vector<Polynomial> lifts;
    std::vector<Polynomial> spanning;
    for (const auto& g : I.gens)
        for (const auto& m : cands) {
            Polynomial lift =
                g.rep().mul_term(m, 1);
            Polynomial w = f.apply(lift).rep();
            lifts.push_back(std::move(lift));
            spanning.push_back(std::move(w));
        }
    auto sol = base_span_solve(f.source->base(), spanning, b.rep());
    if (!sol) return std::nullopt;
    Polynomial pre = Polynomial::zero(f.source->poly);
    for (std::size_t j = 0; j < lifts.size(); ++j) {
        if ((*sol)[j] == 0) continue;
        pre = pre + lifts[j].scaled((*sol)[j]);
    }
    return pre;
}

std::optional<ModuleFiniteWitness> is_module_finite(const RingHom& f,
                                                    const SpanBudget& budget) {
    const FPRingPtr& B = f.target;
    std::vector<Monomial> blockers = unit_blockers(*B);
    std::vector<Monomial> reduced;
    for (const auto& m : monomials_up_to(B->nvars(), budget.target_degree))
        if (!blocked(blockers, m)) reduced.push_back(m);

    std::vector<Monomial> coeffs =
        monomials_up_to(f.source->nvars(), budget.source_degree);
    std::vector<Polynomial> coeff_images;
    for (const auto& c : coeffs)
        coeff_images.push_back(
            f.apply(Polynomial::term(f.source->poly, c, 1)).rep());

    for (unsigned d = 0; d <= budget.target_degree; ++d) {
        std::vector<Monomial> gens;
        for (const auto& m : reduced)
            if (total_degree(m) <= d) gens.push_back(m);

        std::vector<Polynomial> spanning;
        for (const auto& ci : coeff_images)
            for (const auto& m : gens)
                spanning.push_back(
                    RingElement(B, ci.mul_term(m, 1)).rep());

        auto in_span = [&](const Polynomial& v) {
            return base_span_solve(B->base(), spanning, v).has_value();
        };

        bool ok = in_span(RingElement(B, Polynomial::constant(B->poly, 1)).rep());
        for (std::size_t j = 0; ok && j < B->nvars(); ++j)
            for (const auto& m : gens) {
                Polynomial prod =
                    RingElement(B, Polynomial::term(B->poly, m, 1) *
                                       Polynomial::variable(B->poly, j))
                        .rep();
                if (!in_span(prod)) {
                    ok = false;
                    break;
                }
            }
        if (ok)
            return ModuleFiniteWitness{std::move(gens), budget.source_degree};
    }
    return std::nullopt;
}

ModuleFiniteCheck module_finite_check(const RingHom& f,
                                      const std::vector<RingElement>& gens,
                                      const SpanBudget& budget) {
    const FPRingPtr& B = f.target;
    ModuleFiniteCheck out;
    out.generators = gens;
    out.source_degree = budget.source_degree;

    std::vector<Polynomial> spanning;
    for (const auto& c : monomials_up_to(f.source->nvars(), budget.source_degree)) {
        Polynomial ci = f.apply(Polynomial::term(f.source->poly, c, 1)).rep();
        for (const auto& g : gens)
            spanning.push_back(RingElement(B, ci * g.rep()).rep());
    }
    auto in_span = [&](const Polynomial& v) {
        return base_span_solve(B->base(), spanning, v).has_value();
    };

    if (!in_span(RingElement(B, Polynomial::constant(B->poly, 1)).rep())) {
        out.detail = "1 is not in the span of the supplied generators";
        return out;
    }
    for (std::size_t j = 0; j < B->nvars(); ++j)
        for (const auto& g : gens) {
            Polynomial prod =
                RingElement(B, g.rep() * Polynomial::variable(B->poly, j)).rep();
            if (!in_span(prod)) {
                out.detail = B->poly->vars[j] + " * (" + g.to_string() +
                             ") escaped the span";
                return out;
            }
        }
    out.verdict = ModuleFiniteCheck::Verdict::yes;
    return out;
}

}  // namespace prok
