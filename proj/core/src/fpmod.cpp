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
#include "prok/fpmod.hpp"

#include <algorithm>

#include "prok/errors.hpp"

namespace prok {

namespace {

ModVec nf_entries(const FPRingPtr& ring, ModVec v) {
    for (auto& f : v) f = normal_form(f, ring->gb);
    return v;
}

std::vector<ModVec> defining_columns(const FPRingPtr& ring, std::size_t rank) {
    std::vector<ModVec> out;
    for (const auto& d : ring->defining.gens)
        for (std::size_t i = 0; i < rank; ++i) {
            ModVec col = mod_zero(ring->poly, rank);
            col[i] = d;
            out.push_back(std::move(col));
        }
    return out;
}

}  // namespace

std::vector<ModVec> FPModule::aug_relations() const {
    std::vector<ModVec> out = rel;
    auto def = defining_columns(ring, gens);
    out.insert(out.end(), def.begin(), def.end());
    return out;
}

FPModule make_module(FPRingPtr ring, std::size_t gens,
                     std::vector<ModVec> rel) {
    std::vector<ModVec> kept;
    for (auto& col : rel) {
        if (col.size() != gens)
            throw InvalidInputError("relation column has wrong length");
        for (const auto& f : col)
            if (f.ring() && *f.ring() != *ring->poly)
                throw RingMismatchError("relation entry from a different ring");
        ModVec nf = nf_entries(ring, std::move(col));
        if (!mod_is_zero(nf)) kept.push_back(std::move(nf));
    }
    return FPModule{std::move(ring), gens, std::move(kept)};
}

FPModule free_module(FPRingPtr ring, std::size_t n) {
    return FPModule{std::move(ring), n, {}};
}

FPModule quotient_module(const FPRingPtr& ring, const RingIdeal& J) {
    std::vector<ModVec> rel;
    for (const auto& g : J.gens) rel.push_back(ModVec{g.rep()});
    return make_module(ring, 1, std::move(rel));
}

std::vector<ModVec> ring_syzygies(const FPRingPtr& ring, std::size_t rank,
                                  const std::vector<ModVec>& cols) {
    std::vector<ModVec> stacked = cols;
    auto def = defining_columns(ring, rank);
    stacked.insert(stacked.end(), def.begin(), def.end());
    std::vector<ModVec> syz =
        module_syzygies(ring->poly, rank, stacked);
    std::vector<ModVec> out;
    for (const auto& s : syz) {
        ModVec head(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(cols.size()));
        head = nf_entries(ring, std::move(head));
        if (!mod_is_zero(head)) out.push_back(std::move(head));
    }
    return out;
}

std::optional<std::vector<Polynomial>> ring_divide(
    const FPRingPtr& ring, std::size_t rank, const std::vector<ModVec>& cols,
    const ModVec& v) {
    std::vector<ModVec> stacked = cols;
    auto def = defining_columns(ring, rank);
    stacked.insert(stacked.end(), def.begin(), def.end());
    auto cof = module_divide(ring->poly, rank, stacked, v);
    if (!cof) return std::nullopt;
    cof->resize(cols.size());
    return cof;
}

FPModule ideal_as_module(const RingIdeal& I) {
    std::vector<ModVec> cols;
    for (const auto& g : I.gens) cols.push_back(ModVec{g.rep()});
    return make_module(I.ring, I.gens.size(),
                       ring_syzygies(I.ring, 1, cols));
}

FPModule module_mod_ideal(const FPModule& M, const RingIdeal& I) {
    std::vector<ModVec> rel = M.rel;
    for (const auto& g : I.gens)
        for (std::size_t i = 0; i < M.gens; ++i) {
            ModVec col = mod_zero(M.ring->poly, M.gens);
            col[i] = g.rep();
            rel.push_back(std::move(col));
        }
    return make_module(M.ring, M.gens, std::move(rel));
}

ModuleGB module_relations_gb(const FPModule& M, std::uint64_t budget) {
    return module_groebner(M.ring->poly, M.gens, M.aug_relations(),
                           MonomialOrder::degrevlex(), budget);
}

ModVec module_element_nf(const FPModule& M, const ModVec& v) {
    return module_nf(v, module_relations_gb(M));
}

bool module_is_zero(const FPModule& M) {
    ModuleGB gb = module_relations_gb(M);
    for (std::size_t i = 0; i < M.gens; ++i)
        if (!module_contains(gb, mod_unit(M.ring->poly, M.gens, i)))
            return false;
    return true;
}

ModuleMap make_module_map(FPModule source, FPModule target,
                          std::vector<ModVec> matrix) {
    if (!(*source.ring->poly == *target.ring->poly) ||
        source.ring->gb.gens != target.ring->gb.gens)
        throw RingMismatchError("module map across different rings");
    if (matrix.size() != source.gens)
        throw InvalidInputError("module map needs one column per source generator");
    for (auto& col : matrix) {
        if (col.size() != target.gens)
            throw InvalidInputError("module map column has wrong length");
        col = nf_entries(target.ring, std::move(col));
    }
    ModuleGB tgb = module_relations_gb(target);
    for (const auto& r : source.rel) {
        ModVec w = mod_zero(target.ring->poly, target.gens);
        for (std::size_t i = 0; i < source.gens; ++i)
            w = mod_add(w, mod_scale(matrix[i], r[i]));
        if (!module_contains(tgb, w))
            throw InvalidInputError(
                "module map does not respect a source relation");
    }
    return ModuleMap{std::move(source), std::move(target), std::move(matrix)};
}

namespace {

// Generators of the submodule {x in R^(source gens) : sum x_i col_i lies
// in the relation span of the target}.
std::vector<ModVec> preimage_of_relations(const ModuleMap& f) {
    const FPRingPtr& ring = f.target.ring;
    std::vector<ModVec> stacked = f.matrix;
    auto rels = f.target.aug_relations();
    stacked.insert(stacked.end(), rels.begin(), rels.end());
    std::vector<ModVec> syz =
        module_syzygies(ring->poly, f.target.gens, stacked);
    std::vector<ModVec> out;
    for (const auto& s : syz) {
        ModVec head(s.begin(),
                    s.begin() + static_cast<std::ptrdiff_t>(f.matrix.size()));
        head = nf_entries(ring, std::move(head));
        if (!mod_is_zero(head)) out.push_back(std::move(head));
    }
    return out;
}

}  // namespace

ModuleMap compose_module_maps(const ModuleMap& g, const ModuleMap& f) {
    if (f.target.gens != g.source.gens)
        throw RingMismatchError("composite of non-composable module maps");
    std::vector<ModVec> matrix;
    for (const auto& col : f.matrix) {
        ModVec w = mod_zero(g.target.ring->poly, g.target.gens);
        for (std::size_t k = 0; k < col.size(); ++k) {
            if (col[k].is_zero()) continue;
            w = mod_add(w, mod_scale(g.matrix[k], col[k]));
        }
        matrix.push_back(std::move(w));
    }
    return make_module_map(f.source, g.target, std::move(matrix));
}

FPModule map_kernel(const ModuleMap& f, std::vector<ModVec>* inclusion) {
    std::vector<ModVec> K = preimage_of_relations(f);
    if (inclusion) *inclusion = K;
    std::vector<ModVec> rel2;
    {
        std::vector<ModVec> stacked = K;
        auto rels = f.source.aug_relations();
        stacked.insert(stacked.end(), rels.begin(), rels.end());
        std::vector<ModVec> syz =
            module_syzygies(f.source.ring->poly, f.source.gens, stacked);
        for (const auto& s : syz) {
            ModVec head(s.begin(),
                        s.begin() + static_cast<std::ptrdiff_t>(K.size()));
            head = nf_entries(f.source.ring, std::move(head));
            if (!mod_is_zero(head)) rel2.push_back(std::move(head));
        }
    }
    return make_module(f.source.ring, K.size(), std::move(rel2));
}

FPModule map_cokernel(const ModuleMap& f) {
    std::vector<ModVec> rel = f.target.rel;
    rel.insert(rel.end(), f.matrix.begin(), f.matrix.end());
    return make_module(f.target.ring, f.target.gens, std::move(rel));
}

FPModule map_image(const ModuleMap& f) {
    return make_module(f.source.ring, f.source.gens, preimage_of_relations(f));
}

bool map_is_zero(const ModuleMap& f) {
    ModuleGB tgb = module_relations_gb(f.target);
    for (const auto& col : f.matrix)
        if (!module_contains(tgb, col)) return false;
    return true;
}

FPModule tensor_modules(const FPModule& M, const FPModule& N) {
    if (!(*M.ring->poly == *N.ring->poly))
        throw RingMismatchError("tensor across different rings");
    std::size_t g = M.gens * N.gens;
    auto slot = [&](std::size_t i, std::size_t j) { return i * N.gens + j; };
    std::vector<ModVec> rel;
    for (const auto& u : M.rel)
        for (std::size_t j = 0; j < N.gens; ++j) {
            ModVec col = mod_zero(M.ring->poly, g);
            for (std::size_t i = 0; i < M.gens; ++i) col[slot(i, j)] = u[i];
            rel.push_back(std::move(col));
        }
    for (const auto& v : N.rel)
        for (std::size_t i = 0; i < M.gens; ++i) {
            ModVec col = mod_zero(M.ring->poly, g);
            for (std::size_t j = 0; j < N.gens; ++j) col[slot(i, j)] = v[j];
            rel.push_back(std::move(col));
        }
    return make_module(M.ring, g, std::move(rel));
}

FPModule base_change(const FPModule& M, const RingHom& f) {
    std::vector<ModVec> rel;
    for (const auto& u : M.rel) {
        ModVec col;
        for (const auto& entry : u) col.push_back(f.apply_raw(entry));
        rel.push_back(std::move(col));
    }
    return make_module(f.target, M.gens, std::move(rel));
}

FPModule kaehler(const RingHom& f, std::uint64_t budget) {
    const FPRingPtr& A = f.source;
    const FPRingPtr& B = f.target;
    std::size_t ns = A->nvars();
    std::size_t nt = B->nvars();

    std::vector<std::string> names = A->poly->vars;
    for (const auto& v : B->poly->vars) names.push_back("~y:" + v);
    PolyRingPtr cpoly = make_poly_ring(A->base(), names);
    FPRingPtr C = make_free_ring(cpoly);

    std::vector<Polynomial> images = f.images;
    for (std::size_t j = 0; j < nt; ++j)
        images.push_back(Polynomial::variable(B->poly, j));
    RingHom g = make_ring_hom(C, B, std::move(images));

    Ideal K = hom_kernel(g, static_cast<unsigned>(budget));
    std::vector<ModVec> rel;
    for (const auto& k : K.gens) {
        ModVec col;
        for (std::size_t j = 0; j < nt; ++j)
            col.push_back(g.apply_raw(k.derivative(ns + j)));
        rel.push_back(std::move(col));
    }
    return make_module(B, nt, std::move(rel));
}

bool is_regular_sequence(const FPRingPtr& ring,
                         const std::vector<RingElement>& seq) {
    Ideal prev = ring->defining;
    for (const auto& t : seq) {
        Ideal tt(ring->poly, {t.rep()});
        Ideal quot = ideal_colon(prev, tt);
        if (!ideal_is_subset(quot, prev)) return false;
        prev = ideal_sum(prev, tt);
    }
    GroebnerBasis gb = groebner(prev, MonomialOrder::degrevlex());
    return !normal_form(Polynomial::constant(ring->poly, 1), gb).is_zero();
}

}  // namespace prok
