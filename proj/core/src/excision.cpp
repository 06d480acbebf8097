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

#include "prok/excision.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "prok/errors.hpp"
#include "prok/linalg.hpp"
#include "prok/resolution.hpp"

namespace prok {
namespace {

mpz_class to_z(const mpq_class& q) {
    if (q.get_den() != 1)
        throw CertificationError("non-integral coordinate over ZZ");
    return q.get_num();
}

// Coordinates of a polynomial over an indexed monomial set; the support
// must be contained in it.
std::vector<mpq_class> coords_over(const std::map<Monomial, std::size_t>& index,
                                   const Polynomial& f) {
    std::vector<mpq_class> out(index.size(), 0);
    for (const auto& [m, c] : f.terms()) {
        auto it = index.find(m);
        if (it == index.end())
            throw CertificationError("support escapes the staircase");
        out[it->second] = c;
    }
    return out;
}

std::vector<Monomial> exact_degree(std::size_t nvars, unsigned d) {
    std::vector<Monomial> out;
    for (const auto& m : monomials_up_to(nvars, d))
        if (total_degree(m) == d) out.push_back(m);
    return out;
}

}  // namespace

ValidationOutcome try_validate_excision(const RingHom& f, const RingIdeal& I,
                                        std::vector<RingElement> module_gens,
                                        const SpanBudget& budget) {
    if (I.ring != f.source)
        throw InvalidInputError("the ideal does not live in the source ring");
    for (const auto& g : module_gens)
        if (g.ring() != f.target)
            throw InvalidInputError("module generators must live in the target ring");

    ValidationOutcome out;

    // Axiom 1: the ideal misses the kernel entirely, so it maps
    // isomorphically onto its image.
    std::vector<RingElement> kgens;
    for (const auto& g : hom_kernel(f).gens) {
        RingElement k(f.source, g);
        if (!k.is_zero()) kgens.push_back(k);
    }
    if (!kgens.empty()) {
        RingIdeal meet = ring_ideal_intersect(make_ring_ideal(f.source, kgens), I);
        for (const auto& w : meet.gens) {
            if (w.is_zero()) continue;
            out.rejection = ExcisionRejection{
                ExcisionRejection::Kind::kernel_overlap,
                "kernel element inside the ideal: " + w.to_string()};
            return out;
        }
    }

    // Axiom 2: the image of the ideal is closed under multiplication by
    // every target variable, hence under the whole target ring.
    std::vector<ClosureWitness> closure;
    std::size_t nB = f.target->nvars();
    for (std::size_t i = 0; i < I.gens.size(); ++i) {
        Polynomial fi = f.apply_raw(I.gens[i].rep());
        for (std::size_t j = 0; j < nB; ++j) {
            RingElement prod(f.target,
                             Polynomial::variable(f.target->poly, j) * fi);
            auto w = ideal_image_membership(f, I, prod, budget.source_degree);
            if (!w) {
                out.rejection = ExcisionRejection{
                    ExcisionRejection::Kind::not_an_ideal,
                    f.target->poly->vars[j] + " * f(" + I.gens[i].to_string() +
                        ") has no preimage in the ideal"};
                return out;
            }
            closure.push_back(ClosureWitness{i, j, *w});
        }
    }

    ExcisionSituation E;
    E.f = f;
    E.I = I;
    E.module_gens = std::move(module_gens);
    E.kernel_gens = std::move(kgens);
    E.closure = std::move(closure);
    E.witness_degree = budget.source_degree;
    out.situation = std::move(E);
    return out;
}

ExcisionSituation validate_excision(const RingHom& f, const RingIdeal& I,
                                    std::vector<RingElement> module_gens,
                                    const SpanBudget& budget) {
    ValidationOutcome out =
        try_validate_excision(f, I, std::move(module_gens), budget);
    if (!out.valid())
        throw CertificationError(
            (out.rejection->kind == ExcisionRejection::Kind::kernel_overlap
                 ? "excision axiom failed, kernel meets the ideal: "
                 : "excision axiom failed, image is not an ideal: ") +
            out.rejection->witness);
    return *std::move(out.situation);
}

ExcisionSituation power_situation(const ExcisionSituation& E, unsigned s) {
    if (s == 0) throw InvalidInputError("ideal power must be positive");
    if (s == 1) return E;

    const FPRingPtr& A = E.A();
    std::size_t g = E.I.gens.size();
    std::size_t nB = E.B()->nvars();

    std::map<std::pair<std::size_t, std::size_t>, const Polynomial*> table;
    for (const auto& w : E.closure) table[{w.ideal_gen, w.target_var}] = &w.preimage;

    // Multisets i_1 <= ... <= i_s of generator indices.
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t lo) -> void {
        if (cur.size() == s) {
            tuples.push_back(cur);
            return;
        }
        for (std::size_t i = lo; i < g; ++i) {
            cur.push_back(i);
            self(self, i);
            cur.pop_back();
        }
    };
    rec(rec, 0);

    std::vector<RingElement> gens;
    std::vector<std::vector<std::size_t>> facts;
    for (const auto& t : tuples) {
        RingElement p = ring_one(A);
        for (std::size_t i : t) p = p * E.I.gens[i];
        if (p.is_zero()) continue;
        gens.push_back(p);
        facts.push_back(t);
    }

    ExcisionSituation P;
    P.f = E.f;
    P.I = RingIdeal{A, gens};
    P.module_gens = E.module_gens;
    // ker(f) meets I^s inside I, which it meets trivially.
    P.kernel_gens = E.kernel_gens;
    P.witness_degree = E.witness_degree;
    P.label = E.label.empty() ? "" : E.label + "^" + std::to_string(s);

    // Closure witnesses assemble from the level-one table: a preimage of
    // z * f(x_{i_1}) times the remaining factors.  Each assembled witness
    // is re-checked against f.
    for (std::size_t c = 0; c < gens.size(); ++c) {
        Polynomial tail = Polynomial::constant(A->poly, 1);
        for (std::size_t k = 1; k < facts[c].size(); ++k)
            tail = tail * E.I.gens[facts[c][k]].rep();
        for (std::size_t j = 0; j < nB; ++j) {
            const Polynomial* head = table.at({facts[c][0], j});
            RingElement w(A, *head * tail);
            RingElement lhs = E.f.apply(w);
            RingElement rhs(E.B(), Polynomial::variable(E.B()->poly, j) *
                                       E.f.apply_raw(gens[c].rep()));
            if (lhs != rhs)
                throw CertificationError("assembled power witness failed re-check");
            P.closure.push_back(ClosureWitness{c, j, w.rep()});
        }
    }
    return P;
}

MilnorSquare milnor_square(const ExcisionSituation& E) {
    const FPRingPtr& A = E.A();
    const FPRingPtr& B = E.B();

    MilnorSquare sq;
    sq.A = A;
    sq.B = B;
    sq.A_mod_I = make_fp_ring(A->poly, E.I.ambient().gens,
                              A->label.empty() ? "" : A->label + "/I");
    RingIdeal IB = E.f.apply(E.I);
    sq.B_mod_IB = make_fp_ring(B->poly, IB.ambient().gens,
                               B->label.empty() ? "" : B->label + "/IB");

    std::vector<Polynomial> idA, idB;
    for (std::size_t i = 0; i < A->nvars(); ++i)
        idA.push_back(Polynomial::variable(A->poly, i));
    for (std::size_t i = 0; i < B->nvars(); ++i)
        idB.push_back(Polynomial::variable(B->poly, i));

    sq.top = E.f;
    sq.left = make_ring_hom(A, sq.A_mod_I, idA);
    sq.right = make_ring_hom(B, sq.B_mod_IB, idB);
    sq.bottom = make_ring_hom(sq.A_mod_I, sq.B_mod_IB, E.f.images);

    RingHom via_B = compose(sq.right, sq.top);
    RingHom via_Q = compose(sq.bottom, sq.left);
    for (std::size_t i = 0; i < A->nvars(); ++i)
        if (RingElement(sq.B_mod_IB, via_B.images[i]) !=
            RingElement(sq.B_mod_IB, via_Q.images[i]))
            throw CertificationError("conductor square failed to commute");

    // Cartesian iff ker(A -> A/I (+) B) = I /\ ker(f) = 0, which the
    // situation already certifies; re-derive rather than trust.
    if (E.kernel_gens.empty()) {
        sq.cartesian = true;
    } else {
        RingIdeal meet = ring_ideal_intersect(
            make_ring_ideal(A, E.kernel_gens), E.I);
        sq.cartesian = ring_ideal_is_zero(meet);
    }
    return sq;
}

ConductorResult conductor(const RingHom& f,
                          const std::vector<RingElement>& module_gens,
                          const SpanBudget& budget) {
    const FPRingPtr& A = f.source;
    const FPRingPtr& B = f.target;
    for (const auto& g : hom_kernel(f).gens)
        if (!RingElement(A, g).is_zero())
            throw InvalidInputError("conductor requires an injective map");
    if (module_gens.empty())
        throw InvalidInputError("conductor requires module generators for the target");
    ModuleFiniteCheck fin = module_finite_check(f, module_gens, budget);
    if (fin.verdict != ModuleFiniteCheck::Verdict::yes)
        throw CertificationError(
            "module generators not certified within the budget: " + fin.detail);

    std::vector<Monomial> cand = monomials_up_to(A->nvars(), budget.target_degree);
    std::vector<Monomial> span = monomials_up_to(A->nvars(), budget.source_degree);
    std::size_t T = cand.size(), U = span.size(), k = module_gens.size();

    // Normal forms entering the linear system.
    std::vector<Polynomial> span_nf;
    for (const auto& d : span)
        span_nf.push_back(
            RingElement(B, f.apply_raw(Polynomial::term(A->poly, d, 1))).rep());
    std::vector<std::vector<Polynomial>> cand_nf(k);
    for (std::size_t i = 0; i < k; ++i)
        for (const auto& c : cand)
            cand_nf[i].push_back(
                RingElement(B, f.apply_raw(Polynomial::term(A->poly, c, 1)) *
                                   module_gens[i].rep())
                    .rep());

    std::map<Monomial, std::size_t> index;
    for (const auto& p : span_nf)
        for (const auto& [m, q] : p.terms()) index.emplace(m, 0);
    for (const auto& row : cand_nf)
        for (const auto& p : row)
            for (const auto& [m, q] : p.terms()) index.emplace(m, 0);
    std::size_t D = 0;
    for (auto& [m, i] : index) i = D++;

    // Unknowns: candidate coefficients q_t, then one span block per
    // module generator.  Condition block i says f(a) * m_i lies in the
    // span of the f-images.
    std::size_t rows = k * D, cols = T + k * U;
    std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t t = 0; t < T; ++t) {
            auto v = coords_over(index, cand_nf[i][t]);
            for (std::size_t r = 0; r < D; ++r) m[i * D + r][t] = v[r];
        }
        for (std::size_t u = 0; u < U; ++u) {
            auto v = coords_over(index, span_nf[u]);
            for (std::size_t r = 0; r < D; ++r)
                m[i * D + r][T + i * U + u] = -v[r];
        }
    }

    std::vector<std::vector<mpq_class>> kernel_cols;
    if (A->base().kind == BaseRing::Kind::ZZ) {
        IntMatrix zm(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) zm.at(r, c) = to_z(m[r][c]);
        IntMatrix ns = integer_nullspace(zm);
        for (std::size_t c = 0; c < ns.cols; ++c) {
            std::vector<mpq_class> col;
            for (std::size_t r = 0; r < ns.rows; ++r)
                col.push_back(mpq_class(ns.at(r, c)));
            kernel_cols.push_back(std::move(col));
        }
    } else {
        FieldMatrix fm(A->base(), rows, cols);
        for (std::size_t r = 0; r < rows; ++r) fm.a[r] = m[r];
        FieldMatrix ns = field_nullspace(fm);
        for (std::size_t c = 0; c < ns.cols; ++c) {
            std::vector<mpq_class> col;
            for (std::size_t r = 0; r < ns.rows; ++r) col.push_back(ns.a[r][c]);
            kernel_cols.push_back(std::move(col));
        }
    }

    std::vector<RingElement> found;
    std::set<std::string> seen;
    for (const auto& col : kernel_cols) {
        Polynomial p = Polynomial::zero(A->poly);
        for (std::size_t t = 0; t < T; ++t)
            if (col[t] != 0)
                p = p + Polynomial::term(A->poly, cand[t], col[t]);
        RingElement a(A, p);
        if (a.is_zero()) continue;
        if (seen.insert(a.to_string()).second) found.push_back(a);
    }
    auto poly_degree = [](const RingElement& x) {
        std::uint64_t d = 0;
        for (const auto& [m, c] : x.rep().terms())
            d = std::max(d, total_degree(m));
        return d;
    };
    std::sort(found.begin(), found.end(),
              [&](const RingElement& x, const RingElement& y) {
                  if (poly_degree(x) != poly_degree(y))
                      return poly_degree(x) < poly_degree(y);
                  return x.to_string() < y.to_string();
              });

    // Keep a minimal generating family.
    std::vector<RingElement> kept;
    for (const auto& a : found) {
        if (!kept.empty() &&
            ring_ideal_contains(make_ring_ideal(A, kept), a))
            continue;
        kept.push_back(a);
    }

    // Re-certify each survivor from scratch: a preimage of f(c) * m_i
    // must exist and must land back in the computed ideal.
    ConductorResult res;
    res.ideal = make_ring_ideal(A, kept);
    res.target_degree = budget.target_degree;
    res.source_degree = budget.source_degree;
    for (const auto& c : kept) {
        for (std::size_t i = 0; i < k; ++i) {
            RingElement prod(B, f.apply_raw(c.rep()) * module_gens[i].rep());
            auto pre = subring_image_membership(f, prod, budget.source_degree);
            if (!pre)
                throw CertificationError(
                    "conductor candidate lost its certificate: " + c.to_string());
            if (!ring_ideal_contains(res.ideal, RingElement(A, *pre)))
                throw CertificationError(
                    "computed conductor is not closed under the target: " +
                    c.to_string());
        }
    }
    res.certified = true;
    return res;
}

GWModule gw_birelative_k1(const ExcisionSituation& E, std::uint64_t budget) {
    GWModule out;
    out.omega = kaehler(E.f, budget);

    // I*B with one generator per generator of I, zeros kept, so the
    // component indexing stays parallel to I.gens.
    std::vector<RingElement> ib;
    for (const auto& g : E.I.gens) ib.push_back(E.f.apply(g));
    RingIdeal IB{E.B(), ib};

    out.conductor_quotient = module_mod_ideal(ideal_as_module(IB), IB);
    out.tensor = tensor_modules(out.omega, out.conductor_quotient);
    out.realization = realize_module(out.tensor);
    return out;
}

QuotientByImage quotient_by_image(const ExcisionSituation& E,
                                  const SpanBudget& budget) {
    const FPRingPtr& A = E.A();
    const FPRingPtr& B = E.B();
    BaseRing base = B->base();

    std::vector<Polynomial> def = B->defining.gens;
    for (const auto& g : E.I.gens) def.push_back(E.f.apply_raw(g.rep()));
    FPRingPtr Bbar = make_fp_ring(B->poly, def);

    auto ab = artinian_basis(Bbar);
    if (!ab)
        throw CertificationError(
            "target modulo the ideal is not module-finite over the base; "
            "the cokernel of f has no realization");

    QuotientByImage out;
    out.full_staircase = ab->monomials;
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < ab->monomials.size(); ++i)
        index[ab->monomials[i]] = i;
    std::size_t n = ab->monomials.size();

    // Additive relations of Bbar over ZZ: modulus * monomial reduces to
    // its normal form.
    std::vector<Polynomial> relpolys;
    if (base.kind == BaseRing::Kind::ZZ) {
        for (std::size_t i = 0; i < n; ++i) {
            if (ab->moduli[i] == 0) continue;
            Polynomial t = Polynomial::term(B->poly, ab->monomials[i],
                                            mpq_class(ab->moduli[i]));
            relpolys.push_back(t - RingElement(Bbar, t).rep());
        }
    }

    // Grow the span of the f-images degree by degree; a degree adding
    // nothing certifies that no later degree can either.
    std::vector<Polynomial> spanning;
    auto image_nf = [&](const Monomial& g) {
        return RingElement(Bbar, E.f.apply_raw(Polynomial::term(A->poly, g, 1)))
            .rep();
    };
    spanning.push_back(image_nf(Monomial(A->nvars(), 0)));
    bool stable = false;
    for (unsigned d = 1; d <= budget.source_degree; ++d) {
        std::vector<Polynomial> fresh;
        for (const auto& g : exact_degree(A->nvars(), d))
            fresh.push_back(image_nf(g));
        std::vector<Polynomial> test = spanning;
        test.insert(test.end(), relpolys.begin(), relpolys.end());
        bool all_in = true;
        for (const auto& v : fresh)
            if (!base_span_solve(base, test, v)) {
                all_in = false;
                break;
            }
        if (all_in) {
            stable = true;
            out.span_degree = d - 1;
            break;
        }
        spanning.insert(spanning.end(), fresh.begin(), fresh.end());
    }
    if (!stable)
        throw CertificationError(
            "image span did not stabilize within the degree budget");

    for (const auto& p : spanning) out.image_span.push_back(coords_over(index, p));

    RealizedModule& R = out.real;
    R.base = base;
    if (base.kind != BaseRing::Kind::ZZ) {
        // Greedy staircase complement of the span.
        std::vector<std::vector<mpq_class>> colset = out.image_span;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<mpq_class> e(n, 0);
            e[i] = 1;
            FieldMatrix fm(base, n, colset.size());
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < colset.size(); ++c)
                    fm.a[r][c] = colset[c][r];
            if (field_solve(fm, e)) continue;
            R.basis.emplace_back(0, ab->monomials[i]);
            colset.push_back(std::move(e));
        }
        R.dimension = static_cast<unsigned>(R.basis.size());
        R.kind = R.dimension == 0 ? RealizedModule::Kind::zero
                                  : RealizedModule::Kind::vector_space;
        return out;
    }

    for (std::size_t i = 0; i < n; ++i) R.basis.emplace_back(0, ab->monomials[i]);
    R.moduli = ab->moduli;
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& p : relpolys) {
        auto v = coords_over(index, p);
        std::vector<mpz_class> row;
        for (const auto& q : v) row.push_back(to_z(q));
        rows.push_back(std::move(row));
    }
    for (const auto& v : out.image_span) {
        std::vector<mpz_class> row;
        for (const auto& q : v) row.push_back(to_z(q));
        rows.push_back(std::move(row));
    }
    IntMatrix rel(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r) rel.a[r] = rows[r];
    R.group = FGAbelianGroup(n, std::move(rel));
    R.invariants = invariants(R.group);
    R.kind = R.invariants.is_trivial() ? RealizedModule::Kind::zero
                                       : RealizedModule::Kind::group;
    return out;
}

namespace {

// d(m) (x) kappa * e_c as an element of Omega (x) (I*B/I^2*B).
ModVec swan_image(const ExcisionSituation& E, const GWModule& gw,
                  const Monomial& m, std::size_t c, const Monomial& kappa) {
    const FPRingPtr& B = E.B();
    std::size_t gI = gw.conductor_quotient.gens;
    ModVec w = mod_zero(B->poly, gw.tensor.gens);
    Polynomial fk = E.f.apply_raw(Polynomial::term(E.A()->poly, kappa, 1));
    Polynomial pm = Polynomial::term(B->poly, m, 1);
    for (std::size_t j = 0; j < B->nvars(); ++j) {
        Polynomial d = pm.derivative(j);
        if (d.is_zero()) continue;
        w[j * gI + c] = w[j * gI + c] + d * fk;
    }
    return w;
}

}  // namespace

SwanSequence swan_sequence(const ExcisionSituation& E, std::uint64_t budget,
                           const SpanBudget& span) {
    if (!(E.A()->base() == E.B()->base()))
        throw InvalidInputError("source and target must share a base ring");

    SwanSequence out;
    out.gw = gw_birelative_k1(E, budget);
    if (out.gw.realization.kind == RealizedModule::Kind::structural)
        throw CertificationError(
            "obstruction module is not base-finite: " + out.gw.realization.note);

    out.left = quotient_by_image(E, span);
    out.right = realize_module(module_mod_ideal(ideal_as_module(E.I), E.I));
    if (out.right.kind == RealizedModule::Kind::structural)
        throw CertificationError(
            "I/I^2 is not base-finite: " + out.right.note);
    out.source = realize_tensor(out.left.real, out.right);

    std::vector<std::vector<mpq_class>> cols;
    for (const auto& [slot_u, mono_u] : out.left.real.basis)
        for (const auto& [c, kappa] : out.right.basis) {
            ModVec w = swan_image(E, out.gw, mono_u, c, kappa);
            cols.push_back(realized_coords(out.gw.realization, w));
        }
    out.map = make_realized_map(out.source, out.gw.realization, cols);

    // Over a field the source carries no relation rows, so the values on
    // the span of f(A) are checked to vanish explicitly; over ZZ the
    // group-map construction already validated every relation row.
    if (E.B()->base().kind != BaseRing::Kind::ZZ) {
        for (const auto& sigma : out.left.image_span) {
            for (const auto& [c, kappa] : out.right.basis) {
                ModVec acc = mod_zero(E.B()->poly, out.gw.tensor.gens);
                for (std::size_t i = 0; i < sigma.size(); ++i) {
                    if (sigma[i] == 0) continue;
                    ModVec w = swan_image(E, out.gw, out.left.full_staircase[i],
                                          c, kappa);
                    acc = mod_add(acc,
                                  mod_scale(w, Polynomial::constant(
                                                   E.B()->poly, sigma[i])));
                }
                for (const auto& q : realized_coords(out.gw.realization, acc))
                    if (q != 0)
                        throw CertificationError(
                            "boundary map is not well defined on the image span");
            }
        }
    }

    out.surjective = out.map.is_surjective();
    return out;
}

MennickeMatrix mennicke(const ExcisionSituation& E, const RingElement& b,
                        const RingElement& x, const SpanBudget& budget) {
    const FPRingPtr& A = E.A();
    if (b.ring() != E.B()) throw InvalidInputError("b must live in the target");
    if (x.ring() != A) throw InvalidInputError("x must live in the source");
    if (!ring_ideal_contains(E.I, x))
        throw InvalidInputError("x must lie in the ideal");

    RingElement fx = E.f.apply(x);
    auto p1 = ideal_image_membership(E.f, E.I, b * fx, budget.source_degree);
    if (!p1) throw BudgetError("no preimage of b*f(x) within the degree budget");
    auto p2 = ideal_image_membership(E.f, E.I, b * b * fx, budget.source_degree);
    if (!p2)
        throw BudgetError("no preimage of b^2*f(x) within the degree budget");

    RingElement a1(A, *p1), a2(A, *p2);
    MennickeMatrix m{ring_one(A) - a1, x, -a2, ring_one(A) + a1};

    // det = 1 - a1^2 + x a2; its image under f is zero and it lies in
    // I^2, so it vanishes by the kernel axiom.  Checked, not assumed.
    RingElement det = m.a11 * m.a22 - m.a12 * m.a21;
    m.determinant_one = det == ring_one(A);
    if (!m.determinant_one)
        throw CertificationError("relative matrix determinant is not one");
    m.congruent_to_identity =
        ring_ideal_contains(E.I, m.a11 - ring_one(A)) &&
        ring_ideal_contains(E.I, m.a22 - ring_one(A)) &&
        ring_ideal_contains(E.I, m.a12) && ring_ideal_contains(E.I, m.a21);
    if (!m.congruent_to_identity)
        throw CertificationError("relative matrix is not congruent to one");
    return m;
}

namespace {

// All elements of the additive span of {NF(m * g)} inside a base-finite
// ring, by closure under addition.  Normal forms are canonical, so the
// string key identifies elements.
std::vector<RingElement> enumerate_ideal(const FPRingPtr& A,
                                         const RingIdeal& I,
                                         const ArtinianBasis& ab,
                                         std::size_t cap) {
    std::vector<RingElement> gens;
    for (const auto& m : ab.monomials)
        for (const auto& g : I.gens) {
            RingElement e(A, Polynomial::term(A->poly, m, 1) * g.rep());
            if (!e.is_zero()) gens.push_back(e);
        }
    std::vector<RingElement> elems{ring_zero(A)};
    std::set<std::string> seen{ring_zero(A).to_string()};
    std::size_t head = 0;
    while (head < elems.size()) {
        RingElement cur = elems[head++];
        for (const auto& g : gens) {
            RingElement nxt = cur + g;
            if (seen.insert(nxt.to_string()).second) {
                elems.push_back(nxt);
                if (elems.size() > cap)
                    throw BudgetError("ideal enumeration budget exceeded");
            }
        }
    }
    return elems;
}

// Invariant factors of a finite abelian group from element counting:
// N_k = #{u : u^(q^k) = 1} recovers the partition of each q-part.
GroupInvariants invariants_by_counting(const std::vector<RingElement>& U,
                                       const RingElement& one) {
    std::size_t N = U.size();
    std::vector<unsigned> primes;
    std::size_t rem = N;
    for (std::size_t q = 2; q * q <= rem; ++q)
        if (rem % q == 0) {
            primes.push_back(static_cast<unsigned>(q));
            while (rem % q == 0) rem /= q;
        }
    if (rem > 1) primes.push_back(static_cast<unsigned>(rem));

    std::map<unsigned, std::vector<unsigned>> parts;  // prime -> descending
    for (unsigned q : primes) {
        std::vector<unsigned> profile;  // m_k = #{parts >= k}
        std::size_t prev = 1;
        for (unsigned k = 1;; ++k) {
            unsigned long e = 1;
            for (unsigned t = 0; t < k; ++t) e *= q;
            std::size_t cnt = 0;
            for (const auto& u : U)
                if (u.pow(static_cast<unsigned>(e)) == one) ++cnt;
            if (cnt == prev) break;
            unsigned mk = 0;
            std::size_t ratio = cnt / prev;
            while (ratio > 1) {
                ratio /= q;
                ++mk;
            }
            profile.push_back(mk);
            prev = cnt;
        }
        std::size_t np = profile.empty() ? 0 : profile[0];
        std::vector<unsigned> lambda(np, 0);
        for (unsigned mk : profile)
            for (unsigned i = 0; i < mk; ++i) ++lambda[i];
        if (!lambda.empty()) parts[q] = lambda;
    }

    std::size_t width = 0;
    for (const auto& [q, l] : parts) width = std::max(width, l.size());
    std::vector<mpz_class> desc;
    for (std::size_t j = 0; j < width; ++j) {
        mpz_class d = 1;
        for (const auto& [q, l] : parts)
            if (j < l.size())
                for (unsigned t = 0; t < l[j]; ++t) d *= q;
        if (d > 1) desc.push_back(d);
    }
    GroupInvariants inv;
    inv.torsion.assign(desc.rbegin(), desc.rend());
    return inv;
}

}  // namespace

KLowReport k_low_rules(const ExcisionSituation& E, int degree,
                       std::uint64_t budget) {
    static_cast<void>(budget);
    KLowReport rep;
    rep.degree = degree;
    if (degree > 1)
        throw InvalidInputError("rules cover degrees at most one");
    if (degree <= 0) {
        rep.bass_rule = true;
        rep.notes.push_back(
            "negative and zeroth relative groups transport across the square "
            "by the delooping rule; nothing is computed");
        return rep;
    }

    GWModule gw = gw_birelative_k1(E);
    if (gw.realization.kind != RealizedModule::Kind::structural)
        rep.birelative = gw.realization;
    else
        rep.notes.push_back("obstruction module left structural: " +
                            gw.realization.note);

    const FPRingPtr& A = E.A();
    auto ab = artinian_basis(A);
    if (!ab) {
        rep.k1_kind = KLowReport::K1Kind::not_applicable;
        rep.notes.push_back(
            "source ring is not module-finite over its base; the intrinsic "
            "unit-group rule does not apply");
        return rep;
    }
    auto nil = nilpotency_index(E.I, 32);
    if (!nil) {
        rep.k1_kind = KLowReport::K1Kind::not_applicable;
        rep.notes.push_back(
            "ideal is not visibly nilpotent; the intrinsic unit-group rule "
            "does not apply");
        return rep;
    }

    bool trivial = true;
    for (const auto& g : E.I.gens)
        if (!g.is_zero()) trivial = false;
    if (trivial) {
        rep.k1_kind = KLowReport::K1Kind::trivial;
        return rep;
    }

    if (A->base().kind == BaseRing::Kind::QQ) {
        // 1 + I is uniquely divisible; the truncated logarithm matches it
        // with the additive group of I.
        std::map<Monomial, std::size_t> index;
        for (std::size_t i = 0; i < ab->monomials.size(); ++i)
            index[ab->monomials[i]] = i;
        std::vector<std::vector<mpq_class>> vecs;
        for (const auto& m : ab->monomials)
            for (const auto& g : E.I.gens) {
                RingElement e(A, Polynomial::term(A->poly, m, 1) * g.rep());
                if (!e.is_zero()) vecs.push_back(coords_over(index, e.rep()));
            }
        FieldMatrix fm(A->base(), index.size(), vecs.size());
        for (std::size_t r = 0; r < index.size(); ++r)
            for (std::size_t c = 0; c < vecs.size(); ++c)
                fm.a[r][c] = vecs[c][r];
        rep.k1_kind = KLowReport::K1Kind::char_zero;
        rep.k1_dimension = static_cast<unsigned>(field_rank(fm));
        rep.notes.push_back("truncated logarithm applied in characteristic zero");
        return rep;
    }

    constexpr std::size_t kEnumerationCap = 4096;
    std::vector<RingElement> ideal_elems =
        enumerate_ideal(A, E.I, *ab, kEnumerationCap);
    std::vector<RingElement> units;
    for (const auto& v : ideal_elems) units.push_back(ring_one(A) + v);
    rep.k1 = invariants_by_counting(units, ring_one(A));
    rep.k1_kind = rep.k1.is_trivial() ? KLowReport::K1Kind::trivial
                                      : KLowReport::K1Kind::finite;
    rep.notes.push_back("unit group enumerated, " +
                        std::to_string(units.size()) + " elements");
    return rep;
}

}  // namespace prok
