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
#include "prok/modgb.hpp"

#include <algorithm>
#include <optional>

#include "prok/errors.hpp"

namespace prok {

ModVec mod_zero(const PolyRingPtr& ring, std::size_t rank) {
    return ModVec(rank, Polynomial::zero(ring));
}

ModVec mod_unit(const PolyRingPtr& ring, std::size_t rank, std::size_t comp) {
    ModVec v = mod_zero(ring, rank);
    v[comp] = Polynomial::constant(ring, 1);
    return v;
}

bool mod_is_zero(const ModVec& v) {
    for (const auto& f : v)
        if (!f.is_zero()) return false;
    return true;
}

ModVec mod_add(const ModVec& a, const ModVec& b) {
    ModVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

ModVec mod_sub(const ModVec& a, const ModVec& b) {
    ModVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

ModVec mod_neg(const ModVec& a) {
    ModVec r = a;
    for (auto& f : r) f = -f;
    return r;
}

ModVec mod_scale(const ModVec& a, const Polynomial& f) {
    ModVec r = a;
    for (auto& g : r) g = g * f;
    return r;
}

std::string mod_to_string(const ModVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].to_string();
    }
    return s + ")";
}

namespace {

ModVec mod_scale_term(const ModVec& a, const Monomial& m, const mpq_class& c) {
    ModVec r = a;
    for (auto& g : r) g = g.mul_term(m, c);
    return r;
}

struct MTerm {
    std::size_t comp;
    Monomial m;
    mpq_class c;
};

// Leading term under position-over-term: the first nonzero component
// wins, the monomial order breaks ties inside it.
std::optional<MTerm> leading(const ModVec& v, const MonomialOrder& ord) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        auto [m, c] = v[i].leading_term(ord);
        return MTerm{i, std::move(m), std::move(c)};
    }
    return std::nullopt;
}

struct MReducer {
    ModVec v;
    std::size_t comp;
    Monomial lm;
    mpq_class lc;
};

// Mutable scratch for the reduction loops. Polynomial is immutable and
// keeps terms in storage order, so updating one through its operators
// costs a full map rebuild per step and a scan per leading-term query.
// The scratch keeps each component sorted by the active monomial order,
// largest first: the lead is begin() and every update is logarithmic.
struct OrdDesc {
    const MonomialOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return ord->compare(a, b) > 0;
    }
};
using WorkMap = std::map<Monomial, mpq_class, OrdDesc>;
using Work = std::vector<WorkMap>;

MReducer make_mreducer(ModVec v, const MonomialOrder& ord) {
    auto lt = leading(v, ord);
    return MReducer{std::move(v), lt->comp, std::move(lt->m), std::move(lt->c)};
}

struct MEngine {
    // Owned copies: callers may hand in temporaries.
    PolyRingPtr ring;
    std::size_t rank;
    MonomialOrder ord;
    std::uint64_t budget;
    std::uint64_t used = 0;
    bool integer;

    MEngine(PolyRingPtr r, std::size_t k, MonomialOrder o, std::uint64_t b)
        : ring(std::move(r)), rank(k), ord(std::move(o)), budget(b),
          integer(ring->base.kind == BaseRing::Kind::ZZ) {}

    void charge() {
        if (++used > budget)
            throw BudgetError("module groebner budget of " +
                              std::to_string(budget) +
                              " reduction steps exhausted");
    }

    const MReducer* pick(const std::vector<MReducer>& basis, std::size_t comp,
                         const Monomial& m, std::size_t skip = SIZE_MAX) {
        const MReducer* best = nullptr;
        for (std::size_t ri = 0; ri < basis.size(); ++ri) {
            if (ri == skip) continue;
            const auto& r = basis[ri];
            if (r.comp != comp || !mono_divides(r.lm, m)) continue;
            if (!best) {
                best = &r;
                continue;
            }
            mpq_class ra = abs(r.lc), ba = abs(best->lc);
            if (ra < ba || (ra == ba && ord.compare(r.lm, best->lm) > 0))
                best = &r;
        }
        return best;
    }

    Work to_work(const ModVec& v) const {
        Work w;
        w.reserve(v.size());
        for (const auto& f : v) {
            WorkMap t{OrdDesc{&ord}};
            for (const auto& [m, c] : f.terms()) t.emplace(m, c);
            w.push_back(std::move(t));
        }
        return w;
    }

    ModVec from_work(const Work& w) const {
        ModVec v;
        v.reserve(w.size());
        for (const auto& t : w)
            v.emplace_back(ring,
                           std::map<Monomial, mpq_class>(t.begin(), t.end()));
        return v;
    }

    std::optional<MTerm> work_leading(const Work& w) const {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i].empty()) continue;
            const auto& [m, c] = *w[i].begin();
            return MTerm{i, m, c};
        }
        return std::nullopt;
    }

    // w += q * shift * v, entries renormalized and zeros dropped.
    void work_add_scaled(Work& w, const ModVec& v, const Monomial& shift,
                         const mpq_class& q) const {
        for (std::size_t i = 0; i < v.size(); ++i) {
            for (const auto& [m, c] : v[i].terms()) {
                auto [it, fresh] =
                    w[i].try_emplace(mono_mul(m, shift), mpq_class(0));
                it->second += q * c;
                ring->base.normalize(it->second);
                if (it->second == 0) w[i].erase(it);
            }
        }
    }

    // Core normal-form loop on the scratch, mirroring the ring-level
    // reducer: over ZZ coefficients are remaindered into [0, lc) of the
    // smallest applicable leading coefficient. Under position-over-term
    // the leading component never moves backward, so the scan cursor
    // resumes where it left off.
    Work reduce_work(Work f, const std::vector<MReducer>& basis,
                     std::size_t skip = SIZE_MAX) {
        Work out(f.size(), WorkMap{OrdDesc{&ord}});
        std::size_t comp = 0;
        for (;;) {
            while (comp < f.size() && f[comp].empty()) ++comp;
            if (comp == f.size()) break;
            // copies: the scratch mutates under work_add_scaled below
            Monomial m = f[comp].begin()->first;
            mpq_class c = f[comp].begin()->second;
            const MReducer* best = pick(basis, comp, m, skip);
            if (!best) {
                // Irreducible lead: out receives strictly decreasing
                // leads per component, so the end hint is exact.
                out[comp].emplace_hint(out[comp].end(), m, c);
                f[comp].erase(f[comp].begin());
                continue;
            }
            charge();
            Monomial shift = mono_div(m, best->lm);
            if (!integer) {
                mpq_class q = ring->base.div_exact(c, best->lc);
                work_add_scaled(f, best->v, shift, -q);
            } else {
                mpz_class q, rem;
                mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(),
                            c.get_num().get_mpz_t(),
                            best->lc.get_num().get_mpz_t());
                if (q != 0)
                    work_add_scaled(f, best->v, shift, mpq_class(-q));
                if (rem != 0) {
                    // rem is below every applicable leading coefficient,
                    // so it is irreducible and moves out directly.
                    out[comp].emplace_hint(out[comp].end(), m,
                                           mpq_class(rem));
                    f[comp].erase(f[comp].find(m));
                }
            }
        }
        return out;
    }

    ModVec reduce(const ModVec& f0, const std::vector<MReducer>& basis,
                  std::size_t skip = SIZE_MAX) {
        return from_work(reduce_work(to_work(f0), basis, skip));
    }

    ModVec normalize_sign(ModVec v) {
        auto lt = leading(v, ord);
        if (!lt) return v;
        if (!integer) return mod_scale_term(v, Monomial(ring->nvars(), 0),
                                            ring->base.inv(lt->c));
        if (lt->c < 0) return mod_neg(v);
        return v;
    }

    struct Pair {
        std::size_t i, j;
        bool gcd_kind;
        Monomial lcm;
    };

    bool pair_less(const Pair& a, const Pair& b) const {
        std::uint64_t da = total_degree(a.lcm), db = total_degree(b.lcm);
        if (da != db) return da < db;
        int c = ord.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        if (a.i != b.i) return a.i < b.i;
        return a.gcd_kind < b.gcd_kind;
    }

    // Pairs only form inside a common leading component. The coprimality
    // shortcut is not sound for modules, so every pair is kept.
    void add_pairs(std::vector<Pair>& queue, const std::vector<MReducer>& basis,
                   std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            const auto& a = basis[i];
            const auto& b = basis[j];
            if (a.comp != b.comp) continue;
            Monomial l = mono_lcm(a.lm, b.lm);
            queue.push_back(Pair{i, j, false, l});
            if (integer) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), a.lc.get_num().get_mpz_t(),
                        b.lc.get_num().get_mpz_t());
                if (g != abs(a.lc) && g != abs(b.lc))
                    queue.push_back(Pair{i, j, true, std::move(l)});
            }
        }
    }

    std::vector<MReducer> complete(const std::vector<ModVec>& input) {
        std::vector<MReducer> basis;
        for (const auto& v : input) {
            if (mod_is_zero(v)) continue;
            basis.push_back(make_mreducer(normalize_sign(v), ord));
        }
        std::vector<Pair> queue;
        for (std::size_t j = 1; j < basis.size(); ++j)
            add_pairs(queue, basis, j);

        while (!queue.empty()) {
            auto it = std::min_element(
                queue.begin(), queue.end(),
                [this](const Pair& a, const Pair& b) { return pair_less(a, b); });
            Pair pr = *it;
            queue.erase(it);

            const MReducer& a = basis[pr.i];
            const MReducer& b = basis[pr.j];
            Monomial sa = mono_div(pr.lcm, a.lm);
            Monomial sb = mono_div(pr.lcm, b.lm);
            Work sp(a.v.size(), WorkMap{OrdDesc{&ord}});
            if (!pr.gcd_kind) {
                if (!integer) {
                    work_add_scaled(sp, a.v, sa, ring->base.inv(a.lc));
                    work_add_scaled(sp, b.v, sb, -ring->base.inv(b.lc));
                } else {
                    mpz_class l;
                    mpz_lcm(l.get_mpz_t(), a.lc.get_num().get_mpz_t(),
                            b.lc.get_num().get_mpz_t());
                    work_add_scaled(sp, a.v, sa, mpq_class(l) / a.lc);
                    work_add_scaled(sp, b.v, sb, -(mpq_class(l) / b.lc));
                }
            } else {
                mpz_class g, u, w;
                mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), w.get_mpz_t(),
                           a.lc.get_num().get_mpz_t(),
                           b.lc.get_num().get_mpz_t());
                work_add_scaled(sp, a.v, sa, mpq_class(u));
                work_add_scaled(sp, b.v, sb, mpq_class(w));
            }
            charge();
            Work nfw = reduce_work(std::move(sp), basis);
            bool zero = true;
            for (const auto& t : nfw)
                if (!t.empty()) zero = false;
            if (zero) continue;
            basis.push_back(
                make_mreducer(normalize_sign(from_work(nfw)), ord));
            add_pairs(queue, basis, basis.size() - 1);
        }
        return basis;
    }

    bool lt_divides(const MReducer& a, const MReducer& b) const {
        if (a.comp != b.comp || !mono_divides(a.lm, b.lm)) return false;
        return !integer || ring->base.divides(a.lc, b.lc);
    }

    std::vector<ModVec> canonicalize(std::vector<MReducer> basis) {
        std::stable_sort(basis.begin(), basis.end(),
                         [&](const MReducer& x, const MReducer& y) {
                             if (x.comp != y.comp) return x.comp < y.comp;
                             int c = ord.compare(x.lm, y.lm);
                             if (c != 0) return c < 0;
                             return abs(x.lc) > abs(y.lc);
                         });
        std::vector<bool> removed(basis.size(), false);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j || removed[j]) continue;
                if (lt_divides(basis[j], basis[i]) &&
                    !(lt_divides(basis[i], basis[j]) && j > i)) {
                    removed[i] = true;
                    break;
                }
            }
        }
        std::vector<MReducer> minimal;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!removed[i]) minimal.push_back(std::move(basis[i]));

        std::vector<ModVec> out;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            ModVec lead = mod_zero(ring, minimal[i].v.size());
            lead[minimal[i].comp] =
                Polynomial::term(ring, minimal[i].lm, minimal[i].lc);
            ModVec tail = mod_sub(minimal[i].v, lead);
            out.push_back(normalize_sign(
                mod_add(lead, reduce(tail, minimal, i))));
        }
        std::sort(out.begin(), out.end(), [&](const ModVec& x, const ModVec& y) {
            auto lx = leading(x, ord), ly = leading(y, ord);
            if (lx->comp != ly->comp) return lx->comp < ly->comp;
            int c = ord.compare(lx->m, ly->m);
            if (c != 0) return c > 0;
            return abs(lx->c) < abs(ly->c);
        });
        return out;
    }
};

std::vector<ModVec> extend_with_tags(const PolyRingPtr& ring, std::size_t rank,
                                     const std::vector<ModVec>& cols) {
    std::vector<ModVec> ext;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        ModVec v = cols[j];
        v.resize(rank + cols.size(), Polynomial::zero(ring));
        v[rank + j] = Polynomial::constant(ring, 1);
        ext.push_back(std::move(v));
    }
    return ext;
}

}  // namespace

ModuleGB module_groebner(const PolyRingPtr& ring, std::size_t rank,
                         const std::vector<ModVec>& cols,
                         const MonomialOrder& order, std::uint64_t budget) {
    if (budget == 0) budget = default_groebner_budget();
    for (const auto& v : cols)
        if (v.size() != rank)
            throw InvalidInputError("module generator has wrong rank");
    MEngine eng(ring, rank, order, budget);
    ModuleGB gb;
    gb.ring = ring;
    gb.rank = rank;
    gb.order = order;
    gb.gens = eng.canonicalize(eng.complete(cols));
    return gb;
}

ModVec module_nf(const ModVec& v, const ModuleGB& gb) {
    if (v.size() != gb.rank)
        throw InvalidInputError("module_nf: element has wrong rank");
    MEngine eng(gb.ring, gb.rank, gb.order, default_groebner_budget());
    std::vector<MReducer> basis;
    basis.reserve(gb.gens.size());
    for (const auto& g : gb.gens) basis.push_back(make_mreducer(g, gb.order));
    return eng.reduce(v, basis);
}

bool module_contains(const ModuleGB& gb, const ModVec& v) {
    return mod_is_zero(module_nf(v, gb));
}

std::vector<ModVec> module_syzygies(const PolyRingPtr& ring, std::size_t rank,
                                    const std::vector<ModVec>& cols,
                                    std::uint64_t budget) {
    if (budget == 0) budget = default_groebner_budget();
    std::size_t m = cols.size();
    MEngine eng(ring, rank + m, MonomialOrder::degrevlex(), budget);
    auto basis = eng.canonicalize(
        eng.complete(extend_with_tags(ring, rank, cols)));
    std::vector<ModVec> out;
    for (const auto& g : basis) {
        bool real = false;
        for (std::size_t i = 0; i < rank; ++i)
            if (!g[i].is_zero()) real = true;
        if (real) continue;
        out.emplace_back(g.begin() + static_cast<std::ptrdiff_t>(rank), g.end());
    }
    return out;
}

std::optional<std::vector<Polynomial>> module_divide(
    const PolyRingPtr& ring, std::size_t rank, const std::vector<ModVec>& cols,
    const ModVec& v, std::uint64_t budget) {
    if (budget == 0) budget = default_groebner_budget();
    if (v.size() != rank)
        throw InvalidInputError("module_divide: element has wrong rank");
    std::size_t m = cols.size();
    MonomialOrder ord = MonomialOrder::degrevlex();
    MEngine eng(ring, rank + m, ord, budget);
    auto basis = eng.canonicalize(eng.complete(extend_with_tags(ring, rank, cols)));
    std::vector<MReducer> reducers;
    for (const auto& g : basis) reducers.push_back(make_mreducer(g, ord));

    ModVec padded = v;
    padded.resize(rank + m, Polynomial::zero(ring));
    Work cur = eng.to_work(padded);
    while (auto lt = eng.work_leading(cur)) {
        // position-over-term: once the lead is a tag the carried part is 0
        if (lt->comp >= rank) break;
        const MReducer* best = eng.pick(reducers, lt->comp, lt->m);
        if (!best) return std::nullopt;
        eng.charge();
        Monomial shift = mono_div(lt->m, best->lm);
        if (ring->base.is_field()) {
            mpq_class q = ring->base.div_exact(lt->c, best->lc);
            eng.work_add_scaled(cur, best->v, shift, -q);
        } else {
            mpz_class q, rem;
            mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(),
                        lt->c.get_num().get_mpz_t(),
                        best->lc.get_num().get_mpz_t());
            if (rem != 0) return std::nullopt;
            eng.work_add_scaled(cur, best->v, shift, mpq_class(-q));
        }
    }
    ModVec res = eng.from_work(cur);
    for (std::size_t i = 0; i < rank; ++i)
        if (!res[i].is_zero()) return std::nullopt;
    std::vector<Polynomial> cof(m, Polynomial::zero(ring));
    for (std::size_t j = 0; j < m; ++j) cof[j] = -res[rank + j];
    return cof;
}

}  // namespace prok
