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
#include "prok/prosys.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "prok/errors.hpp"
#include "prok/resolution.hpp"

namespace prok {

struct ProSystem::Impl {
    std::string kind;
    std::function<RealizedModule(unsigned)> level_fn;
    std::function<RealizedMap(unsigned, unsigned)> transition_fn;
    std::function<std::optional<unsigned>(unsigned, unsigned)> hint_fn;
    std::function<bool(unsigned)> stability_fn;
    std::string hint_method = "carrier-chain";
    std::map<unsigned, RealizedModule> levels;
    std::map<std::pair<unsigned, unsigned>, RealizedMap> transitions;
};

ProSystem::ProSystem(std::string kind,
                     std::function<RealizedModule(unsigned)> level_fn,
                     std::function<RealizedMap(unsigned, unsigned)> transition_fn,
                     std::function<std::optional<unsigned>(unsigned, unsigned)> witness_hint,
                     std::function<bool(unsigned)> stability_fn)
    : impl_(std::make_shared<Impl>()) {
    impl_->kind = std::move(kind);
    impl_->level_fn = std::move(level_fn);
    impl_->transition_fn = std::move(transition_fn);
    impl_->hint_fn = std::move(witness_hint);
    impl_->stability_fn = std::move(stability_fn);
}

const std::string& ProSystem::kind() const { return impl_->kind; }

const RealizedModule& ProSystem::level(unsigned s) const {
    if (s == 0) throw InvalidInputError("pro-system levels start at 1");
    auto it = impl_->levels.find(s);
    if (it == impl_->levels.end())
        it = impl_->levels.emplace(s, impl_->level_fn(s)).first;
    return it->second;
}

const RealizedMap& ProSystem::transition(unsigned s, unsigned r) const {
    if (s == 0 || r < s)
        throw InvalidInputError("transition indices need 1 <= s <= r");
    auto key = std::make_pair(s, r);
    auto it = impl_->transitions.find(key);
    if (it == impl_->transitions.end())
        it = impl_->transitions.emplace(key, impl_->transition_fn(s, r)).first;
    return it->second;
}

bool ProSystem::has_hint() const { return static_cast<bool>(impl_->hint_fn); }

const std::string& ProSystem::hint_method() const { return impl_->hint_method; }

void ProSystem::set_hint_method(std::string method) {
    impl_->hint_method = std::move(method);
}

std::optional<unsigned> ProSystem::hint(unsigned s, unsigned r_max) const {
    if (!impl_->hint_fn) return std::nullopt;
    return impl_->hint_fn(s, r_max);
}

bool ProSystem::has_stability() const {
    return static_cast<bool>(impl_->stability_fn);
}

bool ProSystem::stable_at(unsigned r) const {
    return impl_->stability_fn && impl_->stability_fn(r);
}

struct ProMap::Impl {
    ProSystem source;
    ProSystem target;
    std::function<RealizedMap(unsigned)> component_fn;
    std::map<unsigned, RealizedMap> components;
};

ProMap::ProMap(ProSystem source, ProSystem target,
               std::function<RealizedMap(unsigned)> component_fn)
    : impl_(std::make_shared<Impl>()) {
    impl_->source = std::move(source);
    impl_->target = std::move(target);
    impl_->component_fn = std::move(component_fn);
}

const ProSystem& ProMap::source() const { return impl_->source; }
const ProSystem& ProMap::target() const { return impl_->target; }

const RealizedMap& ProMap::at(unsigned s) const {
    if (s == 0) throw InvalidInputError("pro-map components start at 1");
    auto it = impl_->components.find(s);
    if (it == impl_->components.end())
        it = impl_->components.emplace(s, impl_->component_fn(s)).first;
    return it->second;
}

namespace {

FieldMatrix field_mul(const FieldMatrix& x, const FieldMatrix& y) {
    if (x.cols != y.rows) throw InvalidInputError("field matrix shape mismatch");
    FieldMatrix out(x.base, x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < y.cols; ++j) {
            mpq_class acc = 0;
            for (std::size_t k = 0; k < x.cols; ++k) acc += x.a[i][k] * y.a[k][j];
            out.base.normalize(acc);
            out.a[i][j] = acc;
        }
    return out;
}

bool field_equal(const FieldMatrix& x, const FieldMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j)
            if (x.a[i][j] != y.a[i][j]) return false;
    return true;
}

IntMatrix int_diff(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix d(x.rows, x.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) d.a[i][j] = x.a[i][j] - y.a[i][j];
    return d;
}

std::string describe_survivors(const RealizedMap& t) {
    std::ostringstream os;
    if (t.gm) {
        os << "image " << invariants(image(*t.gm)).to_string();
    } else {
        os << "image of rank " << field_rank(*t.fm);
    }
    return os.str();
}

std::vector<std::vector<mpq_class>> identity_cols(std::size_t n) {
    std::vector<std::vector<mpq_class>> cols(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) cols[i][i] = 1;
    return cols;
}

RealizedModule synth_group_level(const BaseRing& base, FGAbelianGroup g) {
    RealizedModule out;
    out.base = base;
    for (std::size_t i = 0; i < g.gens; ++i) {
        out.basis.emplace_back(i, Monomial{});
        out.moduli.emplace_back(0);
    }
    out.group = std::move(g);
    out.invariants = invariants(out.group);
    out.kind = out.invariants.is_trivial() ? RealizedModule::Kind::zero
                                           : RealizedModule::Kind::group;
    return out;
}

RealizedModule synth_space_level(const BaseRing& base, std::size_t dim) {
    RealizedModule out;
    out.base = base;
    out.dimension = static_cast<unsigned>(dim);
    for (std::size_t i = 0; i < dim; ++i) out.basis.emplace_back(i, Monomial{});
    out.kind = dim == 0 ? RealizedModule::Kind::zero
                        : RealizedModule::Kind::vector_space;
    return out;
}

// Ascending multisets of factor indices with their products, mirroring the
// generator enumeration of the s-th power situation: level one keeps the
// generators verbatim, higher levels drop zero products.
struct PowerFacts {
    std::vector<std::vector<std::size_t>> facts;
    std::vector<RingElement> prods;
};

PowerFacts power_factorizations(const RingIdeal& I, unsigned s) {
    PowerFacts out;
    std::size_t g = I.gens.size();
    if (s == 1) {
        for (std::size_t i = 0; i < g; ++i) {
            out.facts.push_back({i});
            out.prods.push_back(I.gens[i]);
        }
        return out;
    }
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t lo) -> void {
        if (cur.size() == s) {
            RingElement p = ring_one(I.ring);
            for (std::size_t i : cur) p = p * I.gens[i];
            if (!p.is_zero()) {
                out.facts.push_back(cur);
                out.prods.push_back(p);
            }
            return;
        }
        for (std::size_t i = lo; i < g; ++i) {
            cur.push_back(i);
            self(self, i);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::map<std::vector<std::size_t>, std::size_t> head_index(const PowerFacts& pf) {
    std::map<std::vector<std::size_t>, std::size_t> out;
    for (std::size_t c = 0; c < pf.facts.size(); ++c) out[pf.facts[c]] = c;
    return out;
}

// Tail product of the factors beyond the first s, in the ambient
// polynomial ring of the ideal's ring.
Polynomial tail_product(const RingIdeal& I, const std::vector<std::size_t>& fact,
                        unsigned s) {
    Polynomial tail = Polynomial::constant(I.ring->poly, 1);
    for (std::size_t k = s; k < fact.size(); ++k)
        tail = tail * I.gens[fact[k]].rep();
    return tail;
}

}  // namespace

ProZeroCertificate pro_zero_certify(const ProSystem& sys, unsigned levels,
                                    unsigned r_max) {
    if (levels == 0 || r_max == 0)
        throw InvalidInputError("pro-zero budgets must be positive");
    ProZeroCertificate cert;
    cert.system = sys.kind();
    cert.levels = levels;
    cert.r_max = r_max;
    bool all_hinted = sys.has_hint();

    for (unsigned s = 1; s <= levels; ++s) {
        std::optional<unsigned> found;

        // A resource budget running out mid-search is reported as an
        // exhausted certificate, never as a silent truncation.
        try {
            if (sys.has_hint()) {
                std::optional<unsigned> cand = sys.hint(s, r_max);
                if (cand && *cand >= s && *cand <= r_max &&
                    sys.transition(s, *cand).is_zero())
                    found = *cand;
            }
            if (!found) {
                all_hinted = false;
                for (unsigned r = s; r <= r_max; ++r) {
                    const RealizedMap& t = sys.transition(s, r);
                    if (t.is_zero()) {
                        found = r;
                        break;
                    }
                    if (sys.stable_at(r)) {
                        cert.status = ProZeroCertificate::Status::refuted;
                        cert.failed_level = s;
                        cert.method = "search";
                        cert.detail = "transition from stable level " +
                                      std::to_string(r) + " into level " +
                                      std::to_string(s) + " is nonzero";
                        return cert;
                    }
                }
            }
        } catch (const BudgetError& e) {
            cert.status = ProZeroCertificate::Status::budget_exhausted;
            cert.failed_level = s;
            cert.method = "search";
            cert.detail = e.what();
            return cert;
        }
        if (!found) {
            cert.status = ProZeroCertificate::Status::budget_exhausted;
            cert.failed_level = s;
            cert.method = "search";
            try {
                cert.detail = "surviving classes at r_max: " +
                              describe_survivors(sys.transition(s, r_max));
            } catch (const BudgetError& e) {
                cert.detail = e.what();
            }
            return cert;
        }
        cert.witness[s] = *found;
    }
    cert.status = ProZeroCertificate::Status::certified;
    cert.method = all_hinted ? sys.hint_method() : "search";
    return cert;
}

bool revalidate(const ProSystem& sys, const ProZeroCertificate& cert) {
    if (cert.status != ProZeroCertificate::Status::certified) return false;
    for (unsigned s = 1; s <= cert.levels; ++s) {
        auto it = cert.witness.find(s);
        if (it == cert.witness.end()) return false;
        if (it->second < s || it->second > cert.r_max) return false;
        if (!sys.transition(s, it->second).is_zero()) return false;
    }
    return true;
}

bool pro_map_commutes(const ProMap& f, unsigned s, unsigned r) {
    const RealizedMap& fs = f.at(s);
    const RealizedMap& fr = f.at(r);
    const RealizedMap& tx = f.source().transition(s, r);
    const RealizedMap& ty = f.target().transition(s, r);
    const RealizedModule& src = f.source().level(r);
    const RealizedModule& tgt = f.target().level(s);
    if (src.base.kind != BaseRing::Kind::ZZ) {
        return field_equal(field_mul(*fs.fm, *tx.fm), field_mul(*ty.fm, *fr.fm));
    }
    IntMatrix a = mat_mul(fs.gm->matrix, tx.gm->matrix);
    IntMatrix b = mat_mul(ty.gm->matrix, fr.gm->matrix);
    GroupMap d(src.group, tgt.group, int_diff(a, b));
    return is_zero_map(d);
}

bool check_functoriality(const ProSystem& sys, unsigned s, unsigned r, unsigned q) {
    if (!(1 <= s && s <= r && r <= q))
        throw InvalidInputError("functoriality check needs s <= r <= q");
    const RealizedModule& ls = sys.level(s);
    const RealizedMap& tss = sys.transition(s, s);
    std::size_t n = ls.basis.size();
    if (ls.base.kind != BaseRing::Kind::ZZ) {
        if (!field_equal(*tss.fm, FieldMatrix::identity(ls.base, n))) return false;
    } else {
        GroupMap d(ls.group, ls.group,
                   int_diff(tss.gm->matrix, IntMatrix::identity(n)));
        if (!is_zero_map(d)) return false;
    }
    const RealizedMap& tsq = sys.transition(s, q);
    const RealizedMap& tsr = sys.transition(s, r);
    const RealizedMap& trq = sys.transition(r, q);
    const RealizedModule& lq = sys.level(q);
    if (ls.base.kind != BaseRing::Kind::ZZ) {
        return field_equal(*tsq.fm, field_mul(*tsr.fm, *trq.fm));
    }
    IntMatrix comp = mat_mul(tsr.gm->matrix, trq.gm->matrix);
    GroupMap d(lq.group, ls.group, int_diff(tsq.gm->matrix, comp));
    return is_zero_map(d);
}

namespace {

constexpr const char* kIntertwineMsg =
    "pro-map does not intertwine the transitions";

struct KernelState {
    ProMap f;
    std::map<unsigned, RealizedModule> lvls;
    std::map<unsigned, IntMatrix> emb;        // ZZ: kernel generators
    std::map<unsigned, FieldMatrix> nullsp;   // field: nullspace columns

    const RealizedModule& lvl(unsigned s) {
        auto it = lvls.find(s);
        if (it != lvls.end()) return it->second;
        const RealizedMap& c = f.at(s);
        const BaseRing& base = f.source().level(s).base;
        RealizedModule r;
        if (base.kind == BaseRing::Kind::ZZ) {
            emb.emplace(s, kernel_embedding(*c.gm));
            r = synth_group_level(base, kernel(*c.gm));
        } else {
            auto ns = nullsp.emplace(s, field_nullspace(*c.fm)).first;
            r = synth_space_level(base, ns->second.cols);
        }
        return lvls.emplace(s, std::move(r)).first->second;
    }
};

struct CokernelState {
    ProMap f;
    std::map<unsigned, RealizedModule> lvls;
    // field: reduced rows spanning the image, their pivot columns, and the
    // complementary coordinates that carry the quotient.
    std::map<unsigned, FieldMatrix> span;
    std::map<unsigned, std::vector<std::size_t>> pivots;
    std::map<unsigned, std::vector<std::size_t>> keep;

    const RealizedModule& lvl(unsigned s) {
        auto it = lvls.find(s);
        if (it != lvls.end()) return it->second;
        const RealizedMap& c = f.at(s);
        const BaseRing& base = f.target().level(s).base;
        RealizedModule r;
        if (base.kind == BaseRing::Kind::ZZ) {
            r = synth_group_level(base, cokernel(*c.gm));
        } else {
            FieldMatrix t = [&] {
                FieldMatrix tt(base, c.fm->cols, c.fm->rows);
                for (std::size_t i = 0; i < c.fm->rows; ++i)
                    for (std::size_t j = 0; j < c.fm->cols; ++j)
                        tt.a[j][i] = c.fm->a[i][j];
                return tt;
            }();
            std::vector<std::size_t> piv = field_rref(t);
            FieldMatrix rows(base, piv.size(), c.fm->rows);
            for (std::size_t k = 0; k < piv.size(); ++k) rows.a[k] = t.a[k];
            std::vector<std::size_t> kp;
            for (std::size_t i = 0; i < c.fm->rows; ++i)
                if (std::find(piv.begin(), piv.end(), i) == piv.end())
                    kp.push_back(i);
            span.emplace(s, std::move(rows));
            pivots.emplace(s, std::move(piv));
            keep.emplace(s, kp);
            r = synth_space_level(base, kp.size());
        }
        return lvls.emplace(s, std::move(r)).first->second;
    }

    // Reduce v by the image rows at level s; nonzero entries then live
    // only on the kept coordinates.
    std::vector<mpq_class> project(unsigned s, std::vector<mpq_class> v) {
        const FieldMatrix& rows = span.at(s);
        const std::vector<std::size_t>& piv = pivots.at(s);
        const BaseRing& base = rows.base;
        for (std::size_t k = 0; k < piv.size(); ++k) {
            mpq_class c = v[piv[k]];
            if (c == 0) continue;
            for (std::size_t i = 0; i < v.size(); ++i) {
                v[i] -= c * rows.a[k][i];
                base.normalize(v[i]);
            }
        }
        return v;
    }
};

}  // namespace

ProSystem kernel_system(const ProMap& f) {
    auto st = std::make_shared<KernelState>(KernelState{f, {}, {}, {}});
    auto level_fn = [st](unsigned s) { return st->lvl(s); };
    auto transition_fn = [st](unsigned s, unsigned r) -> RealizedMap {
        const RealizedModule& src = st->lvl(r);
        const RealizedModule& tgt = st->lvl(s);
        if (r > s && !pro_map_commutes(st->f, s, r))
            throw CertificationError(kIntertwineMsg);
        const RealizedMap& tx = st->f.source().transition(s, r);
        std::vector<std::vector<mpq_class>> cols;
        if (src.base.kind == BaseRing::Kind::ZZ) {
            const IntMatrix& er = st->emb.at(r);
            const IntMatrix& es = st->emb.at(s);
            for (std::size_t j = 0; j < er.cols; ++j) {
                std::vector<mpz_class> x(er.rows);
                for (std::size_t i = 0; i < er.rows; ++i) x[i] = er.a[i][j];
                std::vector<mpz_class> y(tx.gm->matrix.rows, 0);
                for (std::size_t i = 0; i < tx.gm->matrix.rows; ++i)
                    for (std::size_t k = 0; k < tx.gm->matrix.cols; ++k)
                        y[i] += tx.gm->matrix.a[i][k] * x[k];
                auto sol = solve_integer(es, y);
                if (!sol) throw CertificationError(kIntertwineMsg);
                std::vector<mpq_class> col(es.cols);
                for (std::size_t i = 0; i < es.cols; ++i) col[i] = (*sol)[i];
                cols.push_back(std::move(col));
            }
        } else {
            const FieldMatrix& nr = st->nullsp.at(r);
            const FieldMatrix& ns = st->nullsp.at(s);
            for (std::size_t j = 0; j < nr.cols; ++j) {
                std::vector<mpq_class> y(tx.fm->rows, 0);
                for (std::size_t i = 0; i < tx.fm->rows; ++i) {
                    for (std::size_t k = 0; k < tx.fm->cols; ++k)
                        y[i] += tx.fm->a[i][k] * nr.a[k][j];
                    tx.fm->base.normalize(y[i]);
                }
                auto sol = field_solve(ns, y);
                if (!sol) throw CertificationError(kIntertwineMsg);
                cols.push_back(std::move(*sol));
            }
        }
        return make_realized_map(src, tgt, cols);
    };
    return ProSystem("kernel", level_fn, transition_fn);
}

ProSystem cokernel_system(const ProMap& f) {
    auto st = std::make_shared<CokernelState>(CokernelState{f, {}, {}, {}, {}});
    auto level_fn = [st](unsigned s) { return st->lvl(s); };
    auto transition_fn = [st](unsigned s, unsigned r) -> RealizedMap {
        const RealizedModule& src = st->lvl(r);
        const RealizedModule& tgt = st->lvl(s);
        if (r > s && !pro_map_commutes(st->f, s, r))
            throw CertificationError(kIntertwineMsg);
        const RealizedMap& ty = st->f.target().transition(s, r);
        if (src.base.kind == BaseRing::Kind::ZZ) {
            std::vector<std::vector<mpq_class>> cols;
            for (std::size_t j = 0; j < ty.gm->matrix.cols; ++j) {
                std::vector<mpq_class> col(ty.gm->matrix.rows);
                for (std::size_t i = 0; i < ty.gm->matrix.rows; ++i)
                    col[i] = ty.gm->matrix.a[i][j];
                cols.push_back(std::move(col));
            }
            try {
                return make_realized_map(src, tgt, cols);
            } catch (const InvalidInputError&) {
                throw CertificationError(kIntertwineMsg);
            }
        }
        const FieldMatrix& rows_r = st->span.at(r);
        for (std::size_t k = 0; k < rows_r.rows; ++k) {
            std::vector<mpq_class> w(ty.fm->rows, 0);
            for (std::size_t i = 0; i < ty.fm->rows; ++i) {
                for (std::size_t c = 0; c < ty.fm->cols; ++c)
                    w[i] += ty.fm->a[i][c] * rows_r.a[k][c];
                ty.fm->base.normalize(w[i]);
            }
            std::vector<mpq_class> red = st->project(s, std::move(w));
            for (const mpq_class& v : red)
                if (v != 0) throw CertificationError(kIntertwineMsg);
        }
        const std::vector<std::size_t>& keep_r = st->keep.at(r);
        const std::vector<std::size_t>& keep_s = st->keep.at(s);
        std::vector<std::vector<mpq_class>> cols;
        for (std::size_t q : keep_r) {
            std::vector<mpq_class> w(ty.fm->rows);
            for (std::size_t i = 0; i < ty.fm->rows; ++i) w[i] = ty.fm->a[i][q];
            std::vector<mpq_class> red = st->project(s, std::move(w));
            std::vector<mpq_class> col(keep_s.size());
            for (std::size_t i = 0; i < keep_s.size(); ++i) col[i] = red[keep_s[i]];
            cols.push_back(std::move(col));
        }
        return make_realized_map(src, tgt, cols);
    };
    return ProSystem("cokernel", level_fn, transition_fn);
}

ProIsoCertificate pro_iso_certify(const ProMap& f, unsigned levels, unsigned r_max) {
    ProIsoCertificate out;
    out.kernel_cert = pro_zero_certify(kernel_system(f), levels, r_max);
    out.cokernel_cert = pro_zero_certify(cokernel_system(f), levels, r_max);
    using S = ProZeroCertificate::Status;
    if (out.kernel_cert.ok() && out.cokernel_cert.ok())
        out.status = S::certified;
    else if (out.kernel_cert.status == S::refuted ||
             out.cokernel_cert.status == S::refuted)
        out.status = S::refuted;
    else
        out.status = S::budget_exhausted;
    return out;
}

namespace {

struct GwState {
    ExcisionSituation E;
    std::uint64_t budget = 0;
    std::map<unsigned, ExcisionSituation> powers;
    std::map<unsigned, GWModule> gws;
    std::map<unsigned, PowerFacts> facts;
    std::map<unsigned, std::map<std::vector<std::size_t>, std::size_t>> heads;
    std::map<unsigned, RingIdeal> ipowers;

    const ExcisionSituation& P(unsigned s) {
        auto it = powers.find(s);
        if (it == powers.end())
            it = powers.emplace(s, power_situation(E, s)).first;
        return it->second;
    }
    const GWModule& G(unsigned s) {
        auto it = gws.find(s);
        if (it == gws.end())
            it = gws.emplace(s, gw_birelative_k1(P(s), budget)).first;
        return it->second;
    }
    const PowerFacts& F(unsigned s) {
        auto it = facts.find(s);
        if (it == facts.end()) {
            it = facts.emplace(s, power_factorizations(E.I, s)).first;
            if (it->second.prods.size() != P(s).I.gens.size())
                throw CertificationError("power enumeration misaligned");
        }
        return it->second;
    }
    const std::map<std::vector<std::size_t>, std::size_t>& H(unsigned s) {
        auto it = heads.find(s);
        if (it == heads.end()) it = heads.emplace(s, head_index(F(s))).first;
        return it->second;
    }
    const RingIdeal& ipow(unsigned k) {
        auto it = ipowers.find(k);
        if (it == ipowers.end())
            it = ipowers.emplace(k, ring_ideal_power(E.I, k)).first;
        return it->second;
    }
};

// The map on Kaehler tensors induced by including the r-th ideal power
// into the s-th: generator (u, c) goes to f(tail) times (u, head) where
// head is the first s factors of c and tail the rest.
ModuleMap gw_transition_map(GwState& st, unsigned s, unsigned r) {
    const GWModule& gr = st.G(r);
    const GWModule& gs = st.G(s);
    const PowerFacts& fr = st.F(r);
    const auto& hs = st.H(s);
    std::size_t om = gr.omega.gens;
    std::size_t nr = gr.conductor_quotient.gens;
    std::size_t ns = gs.conductor_quotient.gens;
    const PolyRingPtr& bpoly = st.E.B()->poly;

    std::vector<ModVec> cols;
    for (std::size_t u = 0; u < om; ++u)
        for (std::size_t c = 0; c < nr; ++c) {
            ModVec col = mod_zero(bpoly, om * ns);
            std::vector<std::size_t> head(fr.facts[c].begin(),
                                          fr.facts[c].begin() + s);
            Polynomial tail = tail_product(st.E.I, fr.facts[c], s);
            col[u * ns + hs.at(head)] = st.E.f.apply_raw(tail);
            cols.push_back(std::move(col));
        }
    return make_module_map(gr.tensor, gs.tensor, std::move(cols));
}

}  // namespace

ProSystem gw_pro_system(const ExcisionSituation& E, std::uint64_t budget) {
    auto st = std::make_shared<GwState>();
    st->E = E;
    st->budget = budget;
    auto level_fn = [st](unsigned s) { return st->G(s).realization; };
    auto transition_fn = [st](unsigned s, unsigned r) {
        ModuleMap mm = gw_transition_map(*st, s, r);
        return realize_map(mm, st->G(r).realization, st->G(s).realization);
    };
    auto hint_fn = [st](unsigned s, unsigned r_max) -> std::optional<unsigned> {
        for (unsigned r = s; r <= r_max; ++r)
            if (ring_ideal_is_subset(st->ipow(r), st->ipow(2 * s))) return r;
        return std::nullopt;
    };
    auto stability_fn = [st](unsigned r) {
        return ring_ideal_equal(st->ipow(r + 1), st->ipow(r));
    };
    return ProSystem("gw", level_fn, transition_fn, hint_fn, stability_fn);
}

namespace {

struct TorState {
    FPRingPtr ring;
    RingIdeal I;
    unsigned n = 0;
    std::map<unsigned, RingIdeal> ipowers;
    std::map<unsigned, FPModule> quotients;
    std::map<unsigned, FPModule> tors;
    std::map<unsigned, RealizedModule> reals;

    const RingIdeal& ipow(unsigned k) {
        auto it = ipowers.find(k);
        if (it == ipowers.end())
            it = ipowers.emplace(k, ring_ideal_power(I, k)).first;
        return it->second;
    }
    const FPModule& Q(unsigned s) {
        auto it = quotients.find(s);
        if (it == quotients.end())
            it = quotients.emplace(s, quotient_module(ring, ipow(s))).first;
        return it->second;
    }
    const FPModule& T(unsigned s) {
        auto it = tors.find(s);
        if (it == tors.end()) it = tors.emplace(s, tor(n, Q(s), Q(s))).first;
        return it->second;
    }
    const RealizedModule& R(unsigned s) {
        auto it = reals.find(s);
        if (it == reals.end()) it = reals.emplace(s, realize_module(T(s))).first;
        return it->second;
    }
};

}  // namespace

ProSystem tor_pro_system(const FPRingPtr& ring, const RingIdeal& I, unsigned n,
                         std::uint64_t budget) {
    if (I.ring != ring) throw RingMismatchError("ideal lives in a different ring");
    (void)budget;  // evaluation uses the process-wide Groebner budget
    auto st = std::make_shared<TorState>();
    st->ring = ring;
    st->I = I;
    st->n = n;
    auto level_fn = [st](unsigned s) { return st->R(s); };
    auto transition_fn = [st](unsigned s, unsigned r) {
        ModVec one;
        one.push_back(Polynomial::constant(st->ring->poly, 1));
        ModuleMap p = make_module_map(st->Q(r), st->Q(s), {one});
        ModuleMap first = tor_transition(st->n, p, st->Q(r));
        ModuleMap second = tor_second_transition(st->n, st->Q(s), p);
        ModuleMap comp = compose_module_maps(second, first);
        return realize_map(comp, st->R(r), st->R(s));
    };
    auto stability_fn = [st](unsigned r) {
        return ring_ideal_equal(st->ipow(r + 1), st->ipow(r));
    };
    // Guess the square-order bound r = 2s first; the certify loop
    // verifies each guessed transition before trusting it.
    auto hint_fn = [](unsigned s, unsigned r_max) -> std::optional<unsigned> {
        if (2 * s > r_max) return std::nullopt;
        return 2 * s;
    };
    ProSystem sys("tor", level_fn, transition_fn, hint_fn, stability_fn);
    sys.set_hint_method("square-order");
    return sys;
}

ProSystem unitalization_tor_system(std::vector<UnitalizationLevel> levels,
                                   unsigned n) {
    if (levels.empty())
        throw InvalidInputError("unitalization system needs at least one level");
    auto st = std::make_shared<std::vector<UnitalizationLevel>>(std::move(levels));
    auto cache = std::make_shared<std::map<unsigned, RealizedModule>>();
    auto lvl = [st, cache, n](unsigned s) -> const RealizedModule& {
        if (s > st->size())
            throw BudgetError("unitalization presentation supplied only up to level " +
                              std::to_string(st->size()));
        auto it = cache->find(s);
        if (it == cache->end()) {
            const UnitalizationLevel& u = (*st)[s - 1];
            FPModule q = quotient_module(u.ring, u.augmentation);
            it = cache->emplace(s, realize_module(tor(n, q, q))).first;
        }
        return it->second;
    };
    auto level_fn = [lvl](unsigned s) { return lvl(s); };
    auto transition_fn = [lvl](unsigned s, unsigned r) -> RealizedMap {
        const RealizedModule& src = lvl(r);
        const RealizedModule& tgt = lvl(s);
        if (r == s)
            return make_realized_map(src, tgt, identity_cols(src.basis.size()));
        if (!src.is_zero())
            throw CertificationError(
                "unitalization transitions are not derivable from levelwise "
                "presentations");
        std::vector<std::vector<mpq_class>> cols(
            src.basis.size(), std::vector<mpq_class>(tgt.basis.size(), 0));
        return make_realized_map(src, tgt, cols);
    };
    return ProSystem("unitalization-tor", level_fn, transition_fn);
}

ProSystem custom_pro_system(std::string kind,
                            std::function<RealizedModule(unsigned)> level_fn,
                            std::function<RealizedMap(unsigned, unsigned)> transition_fn) {
    return ProSystem(std::move(kind), std::move(level_fn), std::move(transition_fn));
}

namespace {

struct SwanState {
    ExcisionSituation E;
    std::uint64_t budget = 0;
    std::map<unsigned, ExcisionSituation> powers;
    std::map<unsigned, SwanSequence> seqs;
    std::map<unsigned, PowerFacts> facts;
    std::map<unsigned, std::map<std::vector<std::size_t>, std::size_t>> heads;
    std::map<unsigned, FPModule> rights;

    const ExcisionSituation& P(unsigned s) {
        auto it = powers.find(s);
        if (it == powers.end())
            it = powers.emplace(s, power_situation(E, s)).first;
        return it->second;
    }
    const SwanSequence& SS(unsigned s) {
        auto it = seqs.find(s);
        if (it == seqs.end())
            it = seqs.emplace(s, swan_sequence(P(s), budget)).first;
        return it->second;
    }
    const PowerFacts& F(unsigned s) {
        auto it = facts.find(s);
        if (it == facts.end()) {
            it = facts.emplace(s, power_factorizations(E.I, s)).first;
            if (it->second.prods.size() != P(s).I.gens.size())
                throw CertificationError("power enumeration misaligned");
        }
        return it->second;
    }
    const std::map<std::vector<std::size_t>, std::size_t>& H(unsigned s) {
        auto it = heads.find(s);
        if (it == heads.end()) it = heads.emplace(s, head_index(F(s))).first;
        return it->second;
    }
    const FPModule& right(unsigned s) {
        auto it = rights.find(s);
        if (it == rights.end()) {
            const RingIdeal& Is = P(s).I;
            it = rights.emplace(s, module_mod_ideal(ideal_as_module(Is), Is)).first;
        }
        return it->second;
    }
};

}  // namespace

ProMap swan_gw_map(const ExcisionSituation& E, std::uint64_t budget) {
    auto st = std::make_shared<SwanState>();
    st->E = E;
    st->budget = budget;

    auto x_level = [st](unsigned s) { return st->SS(s).source; };
    auto x_transition = [st](unsigned s, unsigned r) {
        const SwanSequence& sr = st->SS(r);
        const SwanSequence& ss = st->SS(s);
        const PowerFacts& fr = st->F(r);
        const auto& hs = st->H(s);
        std::size_t nr = st->right(r).gens;
        std::size_t ns = st->right(s).gens;

        std::vector<ModVec> mcols;
        for (std::size_t c = 0; c < nr; ++c) {
            ModVec col = mod_zero(st->E.A()->poly, ns);
            std::vector<std::size_t> head(fr.facts[c].begin(),
                                          fr.facts[c].begin() + s);
            col[hs.at(head)] = tail_product(st->E.I, fr.facts[c], s);
            mcols.push_back(std::move(col));
        }
        ModuleMap mm = make_module_map(st->right(r), st->right(s), std::move(mcols));
        RealizedMap mr = realize_map(mm, sr.right, ss.right);

        std::size_t nl = sr.left.real.basis.size();
        std::size_t vr = sr.right.basis.size();
        std::size_t vs = ss.right.basis.size();
        std::vector<std::vector<mpq_class>> cols(
            nl * vr, std::vector<mpq_class>(nl * vs, 0));
        for (std::size_t u = 0; u < nl; ++u)
            for (std::size_t v = 0; v < vr; ++v)
                for (std::size_t w = 0; w < vs; ++w)
                    cols[u * vr + v][u * vs + w] =
                        mr.gm ? mpq_class(mr.gm->matrix.a[w][v]) : mr.fm->a[w][v];
        return make_realized_map(sr.source, ss.source, cols);
    };
    ProSystem X("swan-source", x_level, x_transition);

    auto gwst = std::make_shared<GwState>();
    gwst->E = E;
    gwst->budget = budget;
    auto y_level = [st](unsigned s) { return st->SS(s).gw.realization; };
    auto y_transition = [st, gwst](unsigned s, unsigned r) {
        // reuse the shared swan state's power situations and sequences so
        // the presentations match the levels exactly
        gwst->powers.emplace(r, st->P(r));
        gwst->powers.emplace(s, st->P(s));
        gwst->gws.emplace(r, st->SS(r).gw);
        gwst->gws.emplace(s, st->SS(s).gw);
        ModuleMap mm = gw_transition_map(*gwst, s, r);
        return realize_map(mm, st->SS(r).gw.realization, st->SS(s).gw.realization);
    };
    auto y_hint = [gwst](unsigned s, unsigned r_max) -> std::optional<unsigned> {
        for (unsigned r = s; r <= r_max; ++r)
            if (ring_ideal_is_subset(gwst->ipow(r), gwst->ipow(2 * s))) return r;
        return std::nullopt;
    };
    ProSystem Y("gw", y_level, y_transition, y_hint);

    auto component_fn = [st](unsigned s) { return st->SS(s).map; };
    return ProMap(std::move(X), std::move(Y), component_fn);
}

IdealChain power_chain(const RingIdeal& I, unsigned multiplier) {
    if (multiplier == 0)
        throw InvalidInputError("power chain multiplier must be positive");
    return IdealChain{[I, multiplier](unsigned s) {
        if (s == 0) throw InvalidInputError("ideal chains start at 1");
        return ring_ideal_power(I, multiplier * s);
    }};
}

namespace {

struct ChainCache {
    const IdealChain* chain;
    std::map<unsigned, RingIdeal> vals;

    const RingIdeal& at(unsigned s) {
        auto it = vals.find(s);
        if (it == vals.end()) it = vals.emplace(s, chain->at(s)).first;
        return it->second;
    }
};

}  // namespace

IntertwineResult intertwine_check(const IdealChain& first, const IdealChain& second,
                                  unsigned levels, unsigned r_max) {
    if (levels == 0 || r_max < levels)
        throw InvalidInputError("intertwine bounds need 1 <= levels <= r_max");
    ChainCache c1{&first, {}};
    ChainCache c2{&second, {}};

    // Certify descent on the whole range a witness search may touch.
    for (unsigned s = 1; s < r_max; ++s) {
        if (!ring_ideal_is_subset(c1.at(s + 1), c1.at(s)))
            throw CertificationError("first chain is not descending at level " +
                                     std::to_string(s + 1));
        if (!ring_ideal_is_subset(c2.at(s + 1), c2.at(s)))
            throw CertificationError("second chain is not descending at level " +
                                     std::to_string(s + 1));
    }

    IntertwineResult out;
    for (unsigned s = 1; s <= levels; ++s) {
        bool found = false;
        for (unsigned r = s; r <= r_max && !found; ++r)
            if (ring_ideal_is_subset(c1.at(r), c2.at(s))) {
                out.first_in_second[s] = r;
                found = true;
            }
        if (!found) {
            out.failed_level = s;
            out.detail = "no level of the first chain enters level " +
                         std::to_string(s) + " of the second within the bound";
            return out;
        }
    }
    for (unsigned s = 1; s <= levels; ++s) {
        bool found = false;
        for (unsigned r = s; r <= r_max && !found; ++r)
            if (ring_ideal_is_subset(c2.at(r), c1.at(s))) {
                out.second_in_first[s] = r;
                found = true;
            }
        if (!found) {
            out.failed_level = s;
            out.detail = "no level of the second chain enters level " +
                         std::to_string(s) + " of the first within the bound";
            return out;
        }
    }
    out.certified = true;
    return out;
}

ArtinReesWitness artin_rees_witness(const FPRingPtr& ring, const RingIdeal& I,
                                    const RingIdeal& K, unsigned bound) {
    if (I.ring != ring || K.ring != ring)
        throw RingMismatchError("ideals live in a different ring");
    if (bound == 0) throw InvalidInputError("bound must be positive");

    ArtinReesWitness out;
    if (ring_ideal_is_zero(K)) {
        out.s = 1;
        out.torsion_exponent = 0;
        out.minimal_certified = true;
        return out;
    }

    bool torsion = false;
    for (unsigned m = 1; m <= bound; ++m) {
        if (ring_ideal_is_zero(ring_ideal_product(ring_ideal_power(I, m), K))) {
            out.torsion_exponent = m;
            torsion = true;
            break;
        }
    }
    if (!torsion)
        throw CertificationError("K is not I-power-torsion within the bound");

    RingIdeal prev;
    bool have_prev = false;
    for (unsigned s = 1; s <= bound; ++s) {
        RingIdeal cut = ring_ideal_intersect(ring_ideal_power(I, s), K);
        if (ring_ideal_is_zero(cut)) {
            out.s = s;
            if (s == 1) {
                out.minimal_certified = true;
            } else {
                out.minimal_certified = have_prev && !ring_ideal_is_zero(prev);
                if (out.minimal_certified)
                    for (const auto& g : prev.gens)
                        if (!g.is_zero()) {
                            out.witness = g.to_string();
                            break;
                        }
            }
            return out;
        }
        prev = std::move(cut);
        have_prev = true;
    }
    throw BudgetError("no power of I separates from K within the bound");
}

ReductionIndex reduction_index(const RingIdeal& sub, const RingIdeal& J,
                               unsigned bound) {
    if (sub.ring != J.ring)
        throw RingMismatchError("ideals live in different rings");
    if (!ring_ideal_is_subset(sub, J))
        throw InvalidInputError("reduction candidate is not contained in the ideal");
    if (ring_ideal_equal(sub, J)) return ReductionIndex{1, true};
    for (unsigned n = 1; n <= bound; ++n) {
        RingIdeal lhs = ring_ideal_product(sub, ring_ideal_power(J, n));
        RingIdeal rhs = ring_ideal_power(J, n + 1);
        if (ring_ideal_is_subset(rhs, lhs)) return ReductionIndex{n, false};
    }
    throw BudgetError("no reduction index within the bound");
}

CriteriaReport criteria_report(const ExcisionSituation& E, unsigned tor_depth,
                               unsigned levels, unsigned r_max,
                               const std::vector<UnitalizationLevel>* unitalization) {
    if (tor_depth == 0) throw InvalidInputError("tor depth must be positive");
    CriteriaReport rep;
    rep.tor_depth = tor_depth;
    rep.level_bound = levels;
    rep.transition_bound = r_max;

    rep.layers.push_back(CriteriaLayer{
        "noetherian", "true", "structural",
        "finitely presented over a noetherian coefficient ring", {}});

    bool regular = is_regular_sequence(E.A(), E.I.gens);
    rep.layers.push_back(CriteriaLayer{
        "quasiregular", regular ? "true" : "false", "computed",
        regular ? "the generator sequence is regular"
                : "the generator sequence is not regular; the criterion is "
                  "sufficient only",
        {}});

    CriteriaLayer torlayer{"tor-vanishing", "certified", "computed", "", {}};
    std::ostringstream tordetail;
    for (unsigned n = 1; n <= tor_depth; ++n) {
        ProSystem sys = tor_pro_system(E.A(), E.I, n);
        ProZeroCertificate cert = pro_zero_certify(sys, levels, r_max);
        if (!cert.ok()) torlayer.verdict = "not-certified";
        if (n > 1) tordetail << "; ";
        tordetail << "n=" << n << ": ";
        switch (cert.status) {
            case ProZeroCertificate::Status::certified:
                tordetail << "certified";
                break;
            case ProZeroCertificate::Status::refuted:
                tordetail << "refuted at level " << cert.failed_level;
                break;
            case ProZeroCertificate::Status::budget_exhausted:
                tordetail << "budget exhausted at level " << cert.failed_level;
                break;
        }
        torlayer.certificates.push_back(std::move(cert));
    }
    torlayer.details = tordetail.str();
    bool torok = torlayer.verdict == "certified";
    rep.layers.push_back(std::move(torlayer));

    CriteriaLayer uni{"unitalization-tor", "not-supplied", "structural",
                      "no presentation of the unitalization was supplied", {}};
    if (unitalization) {
        uni.provenance = "computed";
        uni.verdict = "certified";
        std::ostringstream det;
        unsigned smax = std::min<unsigned>(levels,
                                           static_cast<unsigned>(unitalization->size()));
        for (unsigned s = 1; s <= smax; ++s) {
            const UnitalizationLevel& u = (*unitalization)[s - 1];
            FPModule q = quotient_module(u.ring, u.augmentation);
            for (unsigned n = 1; n <= tor_depth; ++n) {
                RealizedModule rm = realize_module(tor(n, q, q));
                if (!rm.is_zero()) {
                    uni.verdict = "not-certified";
                    det << "level " << s << " has nonzero Tor_" << n << "; ";
                }
            }
        }
        if (uni.verdict == "certified")
            det << "all supplied levels have vanishing Tor up to depth "
                << tor_depth << " (levelwise only)";
        uni.details = det.str();
    }
    rep.layers.push_back(std::move(uni));

    bool upstream = regular || torok;
    rep.layers.push_back(CriteriaLayer{
        "geisser-hesselholt", "cited", "cited-rule",
        "pro Tor vanishing feeds the pro HKR comparison", {}});
    rep.layers.push_back(CriteriaLayer{
        "pro-excision", "cited", "cited-rule",
        upstream ? "cited; the upstream hypotheses are machine-certified"
                 : "cited; the upstream hypotheses are not established at "
                   "these budgets",
        {}});
    return rep;
}

}  // namespace prok
