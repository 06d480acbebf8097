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
#include "prok/resolution.hpp"

#include "prok/errors.hpp"

namespace prok {

FreeResolution free_resolution(const FPModule& M, unsigned length) {
    FreeResolution res;
    res.ring = M.ring;
    res.ranks.push_back(M.gens);
    std::vector<ModVec> current = M.rel;
    for (unsigned l = 0; l < length; ++l) {
        res.maps.push_back(current);
        res.ranks.push_back(current.size());
        if (l + 1 == length) break;
        current = ring_syzygies(M.ring, res.ranks[l], current);
    }
    return res;
}

namespace {

// Columns of D (x) Id acting on R^(rank * gN): each source column c
// spreads over the gN slots of every target position.
std::vector<ModVec> tensor_columns(const FPRingPtr& ring,
                                   const std::vector<ModVec>& cols,
                                   std::size_t target_rank, std::size_t gN) {
    std::vector<ModVec> out;
    for (const auto& c : cols)
        for (std::size_t t = 0; t < gN; ++t) {
            ModVec w = mod_zero(ring->poly, target_rank * gN);
            for (std::size_t k = 0; k < target_rank; ++k) w[k * gN + t] = c[k];
            out.push_back(std::move(w));
        }
    return out;
}

// Relation columns of N placed in every slot of R^(rank * gN).
std::vector<ModVec> slot_relations(const FPRingPtr& ring, const FPModule& N,
                                   std::size_t rank) {
    std::vector<ModVec> out;
    for (const auto& v : N.aug_relations())
        for (std::size_t k = 0; k < rank; ++k) {
            ModVec w = mod_zero(ring->poly, rank * N.gens);
            for (std::size_t j = 0; j < N.gens; ++j) w[k * N.gens + j] = v[j];
            out.push_back(std::move(w));
        }
    return out;
}

std::vector<ModVec> first_block(const std::vector<ModVec>& syz,
                                std::size_t width, const FPRingPtr& ring) {
    std::vector<ModVec> out;
    for (const auto& s : syz) {
        ModVec head(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(width));
        bool zero = true;
        for (auto& f : head) {
            f = normal_form(f, ring->gb);
            if (!f.is_zero()) zero = false;
        }
        if (!zero) out.push_back(std::move(head));
    }
    return out;
}

// Everything needed to present H_i(F (x) N) and map elements into it.
struct TorData {
    std::size_t rank_i = 0;         // rank of F_i (x) N as a free cover
    std::vector<ModVec> kernel;     // generators of ker(D_i (x) Id)
    std::vector<ModVec> quotient;   // columns spanning the part to kill
    FPModule homology;
};

TorData tor_data(const FreeResolution& res, unsigned i, const FPModule& N) {
    const FPRingPtr& ring = res.ring;
    std::size_t gN = N.gens;
    TorData data;
    if (i >= res.ranks.size() || res.ranks[i] == 0 || gN == 0) {
        data.homology = FPModule{ring, 0, {}};
        return data;
    }
    std::size_t rank_i = res.ranks[i] * gN;
    std::size_t rank_prev = res.ranks[i - 1] * gN;
    data.rank_i = rank_i;

    std::vector<ModVec> d_i =
        tensor_columns(ring, res.maps[i - 1], res.ranks[i - 1], gN);
    std::vector<ModVec> q_prev = slot_relations(ring, N, res.ranks[i - 1]);

    std::vector<ModVec> stacked = d_i;
    stacked.insert(stacked.end(), q_prev.begin(), q_prev.end());
    data.kernel = first_block(
        module_syzygies(ring->poly, rank_prev, stacked), rank_i, ring);

    data.quotient = slot_relations(ring, N, res.ranks[i]);
    if (i < res.maps.size()) {
        auto img = tensor_columns(ring, res.maps[i], res.ranks[i], gN);
        data.quotient.insert(data.quotient.end(), img.begin(), img.end());
    }

    std::vector<ModVec> stacked2 = data.kernel;
    stacked2.insert(stacked2.end(), data.quotient.begin(), data.quotient.end());
    std::vector<ModVec> rel = first_block(
        module_syzygies(ring->poly, rank_i, stacked2), data.kernel.size(), ring);
    data.homology = make_module(ring, data.kernel.size(), std::move(rel));
    return data;
}

// Coordinates of an element of ker(D_i (x) Id) on the homology
// generators, dividing modulo the killed part.
ModVec homology_coords(const TorData& data, const FPRingPtr& ring,
                       const ModVec& v) {
    std::vector<ModVec> cols = data.kernel;
    cols.insert(cols.end(), data.quotient.begin(), data.quotient.end());
    auto cof = ring_divide(ring, data.rank_i, cols, v);
    if (!cof)
        throw CertificationError("homology class has no coordinate expression");
    ModVec out;
    for (std::size_t j = 0; j < data.kernel.size(); ++j)
        out.push_back((*cof)[j]);
    return out;
}

}  // namespace

FPModule tor(unsigned i, const FPModule& M, const FPModule& N) {
    if (i == 0) return tensor_modules(M, N);
    FreeResolution res = free_resolution(M, i + 1);
    return tor_data(res, i, N).homology;
}

ModuleMap tor_transition(unsigned i, const ModuleMap& p, const FPModule& N) {
    const FPRingPtr& ring = p.source.ring;
    std::size_t gN = N.gens;
    if (i == 0) {
        FPModule src = tensor_modules(p.source, N);
        FPModule tgt = tensor_modules(p.target, N);
        std::vector<ModVec> cols;
        for (std::size_t b = 0; b < p.source.gens; ++b)
            for (std::size_t t = 0; t < gN; ++t) {
                ModVec w = mod_zero(ring->poly, p.target.gens * gN);
                for (std::size_t a = 0; a < p.target.gens; ++a)
                    w[a * gN + t] = p.matrix[b][a];
                cols.push_back(std::move(w));
            }
        return make_module_map(std::move(src), std::move(tgt), std::move(cols));
    }

    FreeResolution rr = free_resolution(p.source, i + 1);
    FreeResolution rs = free_resolution(p.target, i + 1);
    TorData dr = tor_data(rr, i, N);
    TorData ds = tor_data(rs, i, N);
    if (dr.homology.gens == 0 || ds.homology.gens == 0) {
        std::vector<ModVec> cols(
            dr.homology.gens, mod_zero(ring->poly, ds.homology.gens));
        return make_module_map(dr.homology, ds.homology, std::move(cols));
    }

    // chain map lift phi_l : F_l of the source resolution -> same level of
    // the target resolution, solving D^s_l phi_l = phi_(l-1) D^r_l
    std::vector<std::vector<ModVec>> phi;
    phi.push_back(p.matrix);
    for (unsigned l = 1; l <= i; ++l) {
        std::vector<ModVec> cols;
        for (std::size_t m = 0; m < rr.ranks[l]; ++m) {
            const ModVec& c = rr.maps[l - 1][m];
            ModVec w = mod_zero(ring->poly, rs.ranks[l - 1]);
            for (std::size_t k = 0; k < rr.ranks[l - 1]; ++k)
                w = mod_add(w, mod_scale(phi[l - 1][k], c[k]));
            auto q = ring_divide(ring, rs.ranks[l - 1], rs.maps[l - 1], w);
            if (!q)
                throw CertificationError("chain map lift failed at level " +
                                         std::to_string(l));
            ModVec col(q->begin(), q->end());
            cols.push_back(std::move(col));
        }
        phi.push_back(std::move(cols));
    }

    std::vector<ModVec> cols;
    for (const auto& k : dr.kernel) {
        ModVec y = mod_zero(ring->poly, rs.ranks[i] * gN);
        for (std::size_t b = 0; b < rr.ranks[i]; ++b)
            for (std::size_t t = 0; t < gN; ++t) {
                const Polynomial& entry = k[b * gN + t];
                if (entry.is_zero()) continue;
                for (std::size_t a = 0; a < rs.ranks[i]; ++a)
                    y[a * gN + t] = y[a * gN + t] + phi[i][b][a] * entry;
            }
        cols.push_back(homology_coords(ds, ring, y));
    }
    return make_module_map(dr.homology, ds.homology, std::move(cols));
}

ModuleMap tor_second_transition(unsigned i, const FPModule& M,
                                const ModuleMap& q) {
    const FPRingPtr& ring = M.ring;
    if (i == 0) {
        FPModule src = tensor_modules(M, q.source);
        FPModule tgt = tensor_modules(M, q.target);
        std::vector<ModVec> cols;
        for (std::size_t k = 0; k < M.gens; ++k)
            for (std::size_t t = 0; t < q.source.gens; ++t) {
                ModVec w = mod_zero(ring->poly, M.gens * q.target.gens);
                for (std::size_t u = 0; u < q.target.gens; ++u)
                    w[k * q.target.gens + u] = q.matrix[t][u];
                cols.push_back(std::move(w));
            }
        return make_module_map(std::move(src), std::move(tgt), std::move(cols));
    }

    FreeResolution res = free_resolution(M, i + 1);
    TorData dr = tor_data(res, i, q.source);
    TorData ds = tor_data(res, i, q.target);
    if (dr.homology.gens == 0 || ds.homology.gens == 0) {
        std::vector<ModVec> cols(
            dr.homology.gens, mod_zero(ring->poly, ds.homology.gens));
        return make_module_map(dr.homology, ds.homology, std::move(cols));
    }

    std::size_t gS = q.source.gens, gT = q.target.gens;
    std::vector<ModVec> cols;
    for (const auto& k : dr.kernel) {
        ModVec y = mod_zero(ring->poly, res.ranks[i] * gT);
        for (std::size_t b = 0; b < res.ranks[i]; ++b)
            for (std::size_t t = 0; t < gS; ++t) {
                const Polynomial& entry = k[b * gS + t];
                if (entry.is_zero()) continue;
                for (std::size_t u = 0; u < gT; ++u)
                    y[b * gT + u] = y[b * gT + u] + q.matrix[t][u] * entry;
            }
        cols.push_back(homology_coords(ds, ring, y));
    }
    return make_module_map(dr.homology, ds.homology, std::move(cols));
}

}  // namespace prok
