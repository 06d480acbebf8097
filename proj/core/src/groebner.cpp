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
#include <atomic>
#include <cstdlib>
#include <optional>
#include <vector>

#include "prok/errors.hpp"
#include "prok/ideal.hpp"

namespace prok {

namespace {

std::atomic<std::uint64_t> g_groebner_budget{0};  // 0 = uninitialized

std::uint64_t read_env_budget() {
    if (const char* env = std::getenv("PROK_BUDGET_GROEBNER")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 100000;
}

}  // namespace

std::uint64_t default_groebner_budget() {
    std::uint64_t v = g_groebner_budget.load();
    if (v == 0) {
        v = read_env_budget();
        g_groebner_budget.store(v);
    }
    return v;
}

void set_default_groebner_budget(std::uint64_t limit) {
    g_groebner_budget.store(limit == 0 ? read_env_budget() : limit);
}

Ideal::Ideal(PolyRingPtr r, std::vector<Polynomial> g) : ring(std::move(r)) {
    for (auto& p : g) {
        if (p.ring() && !(*p.ring() == *ring))
            throw RingMismatchError("ideal generator from a different ring");
        if (!p.is_zero()) gens.push_back(std::move(p));
    }
}

std::string Ideal::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) s += ", ";
        s += gens[i].to_string();
    }
    if (gens.empty()) s += "0";
    return s + ")";
}

namespace {

struct Reducer {
    Polynomial p;
    Monomial lm;
    mpq_class lc;
};

Reducer make_reducer(Polynomial p, const MonomialOrder& ord) {
    auto [m, c] = p.leading_term(ord);
    return Reducer{std::move(p), std::move(m), std::move(c)};
}

struct Engine {
    // Owned copies: callers may hand in temporaries.
    PolyRingPtr ring;
    MonomialOrder ord;
    std::uint64_t budget;
    std::uint64_t used = 0;
    bool integer;  // ZZ coefficients: strong-basis rules apply

    Engine(PolyRingPtr r, MonomialOrder o, std::uint64_t b)
        : ring(std::move(r)), ord(std::move(o)), budget(b),
          integer(ring->base.kind == BaseRing::Kind::ZZ) {}

    void charge() {
        if (++used > budget)
            throw BudgetError("groebner budget of " + std::to_string(budget) +
                              " reduction steps exhausted");
    }

    // Deterministic reducer choice for the term (m, c): the applicable
    // reducer with smallest |lc|, ties by larger leading monomial, then
    // by basis index.
    const Reducer* pick(const std::vector<Reducer>& basis, const Monomial& m,
                        std::size_t skip = SIZE_MAX) {
        const Reducer* best = nullptr;
        for (std::size_t ri = 0; ri < basis.size(); ++ri) {
            if (ri == skip) continue;
            const auto& r = basis[ri];
            if (!mono_divides(r.lm, m)) continue;
            if (!best) {
                best = &r;
                continue;
            }
            mpq_class ra = abs(r.lc), ba = abs(best->lc);
            if (ra < ba ||
                (ra == ba && ord.compare(r.lm, best->lm) > 0))
                best = &r;
        }
        return best;
    }

    // Mutable reduction scratch: terms sorted by the active order,
    // largest first, so the lead is begin() and updates are logarithmic
    // instead of a full Polynomial rebuild per step.
    struct OrdDesc {
        const MonomialOrder* ord;
        bool operator()(const Monomial& a, const Monomial& b) const {
            return ord->compare(a, b) > 0;
        }
    };
    using WorkMap = std::map<Monomial, mpq_class, OrdDesc>;

    WorkMap to_work(const Polynomial& f) const {
        WorkMap t{OrdDesc{&ord}};
        for (const auto& [m, c] : f.terms()) t.emplace(m, c);
        return t;
    }

    // w += q * shift * p, entries renormalized and zeros dropped.
    void work_add_scaled(WorkMap& w, const Polynomial& p, const Monomial& shift,
                         const mpq_class& q) const {
        for (const auto& [m, c] : p.terms()) {
            auto [it, fresh] = w.try_emplace(mono_mul(m, shift), mpq_class(0));
            it->second += q * c;
            ring->base.normalize(it->second);
            if (it->second == 0) w.erase(it);
        }
    }

    // Canonical normal form of f against `basis`. Every monomial of the
    // result is irreducible: over a field no leading monomial divides it;
    // over ZZ its coefficient is remaindered into [0, d) where d is the
    // smallest applicable leading coefficient.
    Polynomial reduce(const Polynomial& f0, const std::vector<Reducer>& basis,
                      std::size_t skip = SIZE_MAX) {
        WorkMap f = to_work(f0);
        std::map<Monomial, mpq_class> out;
        while (!f.empty()) {
            // copies: the scratch mutates under work_add_scaled below
            Monomial m = f.begin()->first;
            mpq_class c = f.begin()->second;
            const Reducer* best = pick(basis, m, skip);
            if (!best) {
                out.emplace(m, c);
                f.erase(f.begin());
                continue;
            }
            charge();
            Monomial shift = mono_div(m, best->lm);
            if (!integer) {
                mpq_class q = ring->base.div_exact(c, best->lc);
                work_add_scaled(f, best->p, shift, -q);
            } else {
                mpz_class q, rem;
                mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(),
                            c.get_num().get_mpz_t(),
                            best->lc.get_num().get_mpz_t());
                if (q != 0)
                    work_add_scaled(f, best->p, shift, mpq_class(-q));
                if (rem != 0) {
                    // remainder below the minimal applicable lc: the term
                    // is irreducible, move it out
                    out.emplace(m, mpq_class(rem));
                    f.erase(f.find(m));
                }
            }
        }
        return Polynomial(ring, std::move(out));
    }

    Polynomial normalize_sign(Polynomial p) {
        if (p.is_zero()) return p;
        auto [m, c] = p.leading_term(ord);
        if (!integer) return p.scaled(ring->base.inv(c));
        if (c < 0) return -p;
        return p;
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

    void add_pairs(std::vector<Pair>& queue, const std::vector<Reducer>& basis,
                   std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            const auto& a = basis[i];
            const auto& b = basis[j];
            Monomial l = mono_lcm(a.lm, b.lm);
            if (!integer) {
                if (mono_coprime(a.lm, b.lm)) continue;  // product criterion
                queue.push_back(Pair{i, j, false, std::move(l)});
            } else {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), a.lc.get_num().get_mpz_t(),
                        b.lc.get_num().get_mpz_t());
                bool co = mono_coprime(a.lm, b.lm) && g == 1;
                if (!co) queue.push_back(Pair{i, j, false, l});
                // gcd polynomial needed only if neither lc divides the other
                if (g != abs(a.lc) && g != abs(b.lc))
                    queue.push_back(Pair{i, j, true, l});
            }
        }
    }

    std::vector<Reducer> complete(const std::vector<Polynomial>& input) {
        std::vector<Reducer> basis;
        for (const auto& p : input) {
            if (p.is_zero()) continue;
            basis.push_back(make_reducer(normalize_sign(p), ord));
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

            const Reducer& a = basis[pr.i];
            const Reducer& b = basis[pr.j];
            Monomial sa = mono_div(pr.lcm, a.lm);
            Monomial sb = mono_div(pr.lcm, b.lm);
            Polynomial sp;
            if (!pr.gcd_kind) {
                if (!integer) {
                    sp = a.p.mul_term(sa, ring->base.inv(a.lc)) -
                         b.p.mul_term(sb, ring->base.inv(b.lc));
                } else {
                    mpz_class l;
                    mpz_lcm(l.get_mpz_t(), a.lc.get_num().get_mpz_t(),
                            b.lc.get_num().get_mpz_t());
                    sp = a.p.mul_term(sa, mpq_class(l) / a.lc) -
                         b.p.mul_term(sb, mpq_class(l) / b.lc);
                }
            } else {
                mpz_class g, u, v;
                mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(),
                           a.lc.get_num().get_mpz_t(),
                           b.lc.get_num().get_mpz_t());
                sp = a.p.mul_term(sa, mpq_class(u)) +
                     b.p.mul_term(sb, mpq_class(v));
            }
            charge();
            Polynomial nf = reduce(std::move(sp), basis);
            if (nf.is_zero()) continue;
            basis.push_back(make_reducer(normalize_sign(std::move(nf)), ord));
            add_pairs(queue, basis, basis.size() - 1);
        }
        return basis;
    }

    // Whether the leading term of `a` strongly divides the leading term
    // of `b` (monomial divides; over ZZ the coefficient must divide too).
    bool lt_divides(const Reducer& a, const Reducer& b) const {
        if (!mono_divides(a.lm, b.lm)) return false;
        return !integer || ring->base.divides(a.lc, b.lc);
    }

    // Minimalize + tail-reduce + sign-normalize into the canonical
    // reduced basis.
    std::vector<Polynomial> canonicalize(std::vector<Reducer> basis) {
        // deterministic pass order: ascending leading monomial, larger
        // |lc| first so that dominated elements go before their dominators
        std::stable_sort(basis.begin(), basis.end(),
                         [&](const Reducer& x, const Reducer& y) {
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
        std::vector<Reducer> minimal;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!removed[i]) minimal.push_back(std::move(basis[i]));

        std::vector<Polynomial> out;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            Polynomial lead = Polynomial::term(ring, minimal[i].lm, minimal[i].lc);
            Polynomial tail = minimal[i].p - lead;
            out.push_back(normalize_sign(lead + reduce(tail, minimal, i)));
        }
        std::sort(out.begin(), out.end(),
                  [&](const Polynomial& x, const Polynomial& y) {
                      auto lx = x.leading_term(ord), ly = y.leading_term(ord);
                      int c = ord.compare(lx.first, ly.first);
                      if (c != 0) return c > 0;
                      return abs(lx.second) < abs(ly.second);
                  });
        return out;
    }
};

}  // namespace

GroebnerBasis groebner(const Ideal& ideal, const MonomialOrder& order,
                       std::uint64_t budget) {
    if (budget == 0) budget = default_groebner_budget();
    Engine eng(ideal.ring, order, budget);
    auto completed = eng.complete(ideal.gens);
    GroebnerBasis gb;
    gb.ring = ideal.ring;
    gb.order = order;
    gb.gens = eng.canonicalize(std::move(completed));
    return gb;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (f.ring() && !(*f.ring() == *gb.ring))
        throw RingMismatchError("normal_form: polynomial from a different ring");
    Engine eng(gb.ring, gb.order, default_groebner_budget());
    std::vector<Reducer> basis;
    basis.reserve(gb.gens.size());
    for (const auto& p : gb.gens) basis.push_back(make_reducer(p, gb.order));
    return eng.reduce(f, basis);
}

bool GroebnerBasis::contains(const Polynomial& f) const {
    return normal_form(f, *this).is_zero();
}

Polynomial poly_div_exact(const Polynomial& h, const Polynomial& f) {
    if (f.is_zero()) throw InvalidInputError("division by zero polynomial");
    MonomialOrder ord = MonomialOrder::degrevlex();
    const auto& ring = h.ring();
    auto [fm, fc] = f.leading_term(ord);
    Polynomial rem = h;
    Polynomial quot = Polynomial::zero(ring);
    while (!rem.is_zero()) {
        auto [m, c] = rem.leading_term(ord);
        if (!mono_divides(fm, m))
            throw InvalidInputError("inexact polynomial division");
        mpq_class q = ring->base.div_exact(c, fc);
        Polynomial t = Polynomial::term(ring, mono_div(m, fm), q);
        quot = quot + t;
        rem = rem - t * f;
    }
    return quot;
}

}  // namespace prok
