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
#include "prok/realize.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "prok/errors.hpp"

namespace prok {

namespace {

struct LeadInfo {
    std::size_t comp;
    Monomial lm;
    mpq_class lc;
};

std::vector<LeadInfo> basis_leads(const ModuleGB& gb) {
    std::vector<LeadInfo> out;
    for (const auto& g : gb.gens) {
        for (std::size_t c = 0; c < g.size(); ++c) {
            if (g[c].is_zero()) continue;
            auto [m, q] = g[c].leading_term(gb.order);
            out.push_back(LeadInfo{c, std::move(m), std::move(q)});
            break;
        }
    }
    return out;
}

bool pure_power_exists(const std::vector<Monomial>& blockers, std::size_t nvars,
                       std::size_t var) {
    for (const auto& b : blockers) {
        bool only = true;
        for (std::size_t j = 0; j < nvars; ++j)
            if (j != var && b[j] != 0) only = false;
        if (only) return true;
    }
    return false;
}

std::vector<Monomial> staircase(const std::vector<Monomial>& blockers,
                                std::size_t nvars) {
    auto is_blocked = [&](const Monomial& m) {
        for (const auto& b : blockers)
            if (mono_divides(b, m)) return true;
        return false;
    };
    std::vector<Monomial> out;
    std::set<Monomial> seen;
    std::vector<Monomial> frontier{Monomial(nvars, 0)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        Monomial m = frontier.back();
        frontier.pop_back();
        if (is_blocked(m)) continue;
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

std::string RealizedModule::to_string() const {
    switch (kind) {
        case Kind::zero:
            return "0";
        case Kind::vector_space:
            return base.name() + "^" + std::to_string(dimension);
        case Kind::group:
            return invariants.to_string();
        case Kind::structural:
            return "structural: " + note;
    }
    return "";
}

RealizedModule realize_module(const FPModule& M) {
    RealizedModule out;
    out.base = M.ring->base();
    out.gb = module_relations_gb(M);
    std::size_t nvars = M.ring->nvars();
    bool integer = out.base.kind == BaseRing::Kind::ZZ;

    std::vector<LeadInfo> leads = basis_leads(out.gb);
    for (std::size_t c = 0; c < M.gens; ++c) {
        std::vector<Monomial> unit_block;
        for (const auto& l : leads)
            if (l.comp == c && (!integer || l.lc == 1))
                unit_block.push_back(l.lm);
        for (std::size_t v = 0; v < nvars; ++v) {
            if (!pure_power_exists(unit_block, nvars, v)) {
                out.kind = RealizedModule::Kind::structural;
                out.note = "no unit pure power of " + M.ring->poly->vars[v] +
                           " blocks component " + std::to_string(c);
                return out;
            }
        }
        for (const auto& m : staircase(unit_block, nvars)) {
            mpz_class modulus = 0;
            if (out.base.kind == BaseRing::Kind::Fp) {
                modulus = out.base.p;
            } else if (integer) {
                bool any = false;
                for (const auto& l : leads) {
                    if (l.comp != c || !mono_divides(l.lm, m)) continue;
                    mpz_class a = abs(mpz_class(l.lc.get_num()));
                    if (!any || a < modulus) modulus = a;
                    any = true;
                }
                if (!any) modulus = 0;
            }
            out.basis.emplace_back(c, m);
            out.moduli.push_back(modulus);
        }
    }

    if (!integer) {
        out.dimension = static_cast<unsigned>(out.basis.size());
        out.kind = out.dimension == 0 ? RealizedModule::Kind::zero
                                      : RealizedModule::Kind::vector_space;
        return out;
    }

    // triangular presentation: modulus * basis-vector minus its normal form
    std::map<std::pair<std::size_t, Monomial>, std::size_t> index;
    for (std::size_t i = 0; i < out.basis.size(); ++i) index[out.basis[i]] = i;
    std::vector<std::vector<mpz_class>> rows;
    for (std::size_t i = 0; i < out.basis.size(); ++i) {
        if (out.moduli[i] == 0) continue;
        ModVec v = mod_zero(M.ring->poly, M.gens);
        v[out.basis[i].first] = Polynomial::term(
            M.ring->poly, out.basis[i].second, mpq_class(out.moduli[i]));
        ModVec nf = module_nf(v, out.gb);
        std::vector<mpz_class> row(out.basis.size(), 0);
        row[i] = out.moduli[i];
        for (std::size_t c = 0; c < nf.size(); ++c)
            for (const auto& [m, q] : nf[c].terms()) {
                auto it = index.find({c, m});
                if (it == index.end())
                    throw CertificationError(
                        "normal form leaves the realized staircase");
                row[it->second] -= q.get_num();
            }
        rows.push_back(std::move(row));
    }
    IntMatrix rel(rows.size(), out.basis.size());
    for (std::size_t r = 0; r < rows.size(); ++r) rel.a[r] = rows[r];
    out.group = FGAbelianGroup(out.basis.size(), std::move(rel));
    out.invariants = invariants(out.group);
    out.kind = out.invariants.is_trivial() ? RealizedModule::Kind::zero
                                           : RealizedModule::Kind::group;
    return out;
}

std::vector<mpq_class> realized_coords(const RealizedModule& R,
                                       const ModVec& v) {
    if (R.kind == RealizedModule::Kind::structural)
        throw CertificationError("no coordinates on a structural realization");
    std::map<std::pair<std::size_t, Monomial>, std::size_t> index;
    for (std::size_t i = 0; i < R.basis.size(); ++i) index[R.basis[i]] = i;
    ModVec nf = module_nf(v, R.gb);
    std::vector<mpq_class> out(R.basis.size(), 0);
    for (std::size_t c = 0; c < nf.size(); ++c)
        for (const auto& [m, q] : nf[c].terms()) {
            auto it = index.find({c, m});
            if (it == index.end())
                throw CertificationError(
                    "normal form leaves the realized staircase");
            out[it->second] = q;
        }
    return out;
}

bool RealizedMap::is_zero() const {
    if (gm) return is_zero_map(*gm);
    for (const auto& row : fm->a)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

bool RealizedMap::is_surjective() const {
    if (gm) return invariants(cokernel(*gm)).is_trivial();
    return field_rank(*fm) == fm->rows;
}

bool RealizedMap::is_injective() const {
    if (gm) return invariants(kernel(*gm)).is_trivial();
    return field_rank(*fm) == fm->cols;
}

GroupInvariants RealizedMap::cokernel_invariants() const {
    if (!gm)
        throw InvalidInputError("cokernel invariants need an integer base");
    return invariants(cokernel(*gm));
}

RealizedMap make_realized_map(const RealizedModule& src,
                              const RealizedModule& tgt,
                              const std::vector<std::vector<mpq_class>>& cols) {
    if (src.kind == RealizedModule::Kind::structural ||
        tgt.kind == RealizedModule::Kind::structural)
        throw CertificationError("cannot realize a map on structural modules");
    std::size_t ns = src.basis.size(), nt = tgt.basis.size();
    if (cols.size() != ns)
        throw InvalidInputError("realized map needs one column per basis entry");

    RealizedMap out{src.base, std::nullopt, std::nullopt};
    if (src.base.kind == BaseRing::Kind::ZZ) {
        IntMatrix m(nt, ns);
        for (std::size_t j = 0; j < ns; ++j)
            for (std::size_t i = 0; i < nt; ++i) m.a[i][j] = cols[j][i].get_num();
        out.gm.emplace(src.group, tgt.group, std::move(m));
    } else {
        FieldMatrix m(src.base, nt, ns);
        for (std::size_t j = 0; j < ns; ++j)
            for (std::size_t i = 0; i < nt; ++i) {
                m.a[i][j] = cols[j][i];
                m.base.normalize(m.a[i][j]);
            }
        out.fm.emplace(std::move(m));
    }
    return out;
}

RealizedMap realize_map(const ModuleMap& f, const RealizedModule& src,
                        const RealizedModule& tgt) {
    std::vector<std::vector<mpq_class>> cols;
    for (const auto& [comp, mono] : src.basis) {
        ModVec w = mod_zero(f.target.ring->poly, f.target.gens);
        for (std::size_t i = 0; i < f.target.gens; ++i)
            w[i] = f.matrix[comp][i].mul_term(mono, 1);
        cols.push_back(realized_coords(tgt, w));
    }
    return make_realized_map(src, tgt, cols);
}

RealizedModule realize_tensor(const RealizedModule& X,
                              const RealizedModule& Y) {
    RealizedModule out;
    out.base = X.base;
    if (X.kind == RealizedModule::Kind::structural ||
        Y.kind == RealizedModule::Kind::structural) {
        out.kind = RealizedModule::Kind::structural;
        out.note = "tensor factor is structural";
        return out;
    }
    std::size_t nx = X.basis.size(), ny = Y.basis.size();
    for (std::size_t u = 0; u < nx; ++u)
        for (std::size_t v = 0; v < ny; ++v) {
            out.basis.emplace_back(u * ny + v, Monomial{});
            if (X.base.kind == BaseRing::Kind::ZZ) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), X.moduli[u].get_mpz_t(),
                        Y.moduli[v].get_mpz_t());
                out.moduli.push_back(g);
            }
        }

    if (X.base.kind != BaseRing::Kind::ZZ) {
        out.dimension = static_cast<unsigned>(nx * ny);
        out.kind = out.dimension == 0 ? RealizedModule::Kind::zero
                                      : RealizedModule::Kind::vector_space;
        return out;
    }

    std::vector<std::vector<mpz_class>> rows;
    for (std::size_t r = 0; r < X.group.relations.rows; ++r)
        for (std::size_t v = 0; v < ny; ++v) {
            std::vector<mpz_class> row(nx * ny, 0);
            for (std::size_t u = 0; u < nx; ++u)
                row[u * ny + v] = X.group.relations.a[r][u];
            rows.push_back(std::move(row));
        }
    for (std::size_t r = 0; r < Y.group.relations.rows; ++r)
        for (std::size_t u = 0; u < nx; ++u) {
            std::vector<mpz_class> row(nx * ny, 0);
            for (std::size_t v = 0; v < ny; ++v)
                row[u * ny + v] = Y.group.relations.a[r][v];
            rows.push_back(std::move(row));
        }
    IntMatrix rel(rows.size(), nx * ny);
    for (std::size_t r = 0; r < rows.size(); ++r) rel.a[r] = rows[r];
    out.group = FGAbelianGroup(nx * ny, std::move(rel));
    out.invariants = invariants(out.group);
    out.kind = out.invariants.is_trivial() ? RealizedModule::Kind::zero
                                           : RealizedModule::Kind::group;
    return out;
}

}  // namespace prok
