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
#include "prok/report.hpp"

#include <cstdint>
#include <sstream>

#include "report_internal.hpp"

namespace prok {
namespace detail {

ordered_json json_int(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

ordered_json json_group(const GroupInvariants& g) {
    ordered_json out;
    out["rank"] = g.rank;
    out["torsion"] = ordered_json::array();
    for (const auto& d : g.torsion) out["torsion"].push_back(json_int(d));
    return out;
}

ordered_json json_realized(const RealizedModule& R) {
    ordered_json out;
    switch (R.kind) {
        case RealizedModule::Kind::zero:
            out["kind"] = "zero";
            break;
        case RealizedModule::Kind::vector_space:
            out["kind"] = "vector-space";
            out["base"] = R.base.name();
            out["dimension"] = R.dimension;
            break;
        case RealizedModule::Kind::group:
            out["kind"] = "group";
            out["rank"] = R.invariants.rank;
            out["torsion"] = ordered_json::array();
            for (const auto& d : R.invariants.torsion)
                out["torsion"].push_back(json_int(d));
            break;
        case RealizedModule::Kind::structural:
            out["kind"] = "structural";
            out["note"] = R.note;
            break;
    }
    return out;
}

std::string status_string(ProZeroCertificate::Status s) {
    switch (s) {
        case ProZeroCertificate::Status::certified:
            return "certified";
        case ProZeroCertificate::Status::refuted:
            return "refuted";
        case ProZeroCertificate::Status::budget_exhausted:
            return "budget-exhausted";
    }
    return "";
}

ordered_json json_certificate(const ProZeroCertificate& c) {
    ordered_json out;
    out["kind"] = "pro-zero";
    out["system"] = c.system;
    out["S"] = c.levels;
    out["r_max"] = c.r_max;
    out["status"] = status_string(c.status);
    if (!c.method.empty()) out["method"] = c.method;
    if (!c.witness.empty()) {
        ordered_json w = ordered_json::object();
        for (const auto& [s, r] : c.witness) w[std::to_string(s)] = r;
        out["witness"] = w;
    }
    if (c.status != ProZeroCertificate::Status::certified && c.failed_level)
        out["failed_level"] = c.failed_level;
    if (!c.detail.empty()) out["detail"] = c.detail;
    return out;
}

ordered_json json_pro_iso(const ProIsoCertificate& c) {
    ordered_json out;
    out["kind"] = "pro-iso";
    out["status"] = status_string(c.status);
    out["kernel"] = json_certificate(c.kernel_cert);
    out["cokernel"] = json_certificate(c.cokernel_cert);
    return out;
}

ordered_json json_criteria(const CriteriaReport& r) {
    ordered_json out;
    out["kind"] = "criteria";
    out["tor_depth"] = r.tor_depth;
    out["S"] = r.level_bound;
    out["r_max"] = r.transition_bound;
    out["layers"] = ordered_json::array();
    for (const auto& l : r.layers) {
        ordered_json jl;
        jl["name"] = l.name;
        jl["verdict"] = l.verdict;
        jl["provenance"] = l.provenance;
        if (!l.details.empty()) jl["details"] = l.details;
        if (!l.certificates.empty()) {
            jl["certificates"] = ordered_json::array();
            for (const auto& c : l.certificates)
                jl["certificates"].push_back(json_certificate(c));
        }
        out["layers"].push_back(jl);
    }
    return out;
}

ordered_json json_snf(const std::vector<mpz_class>& diagonal) {
    ordered_json out;
    out["kind"] = "smith-normal-form";
    out["diagonal"] = ordered_json::array();
    for (const auto& d : diagonal) out["diagonal"].push_back(json_int(d));
    return out;
}

ordered_json json_validation(const ValidationOutcome& v) {
    ordered_json out;
    out["valid"] = v.valid();
    if (v.valid()) {
        out["closure_witnesses"] = v.situation->closure.size();
        out["witness_degree"] = v.situation->witness_degree;
    } else if (v.rejection) {
        out["reason"] = v.rejection->kind == ExcisionRejection::Kind::kernel_overlap
                            ? "kernel-meets-ideal"
                            : "image-not-an-ideal";
        out["witness"] = v.rejection->witness;
    }
    return out;
}

ordered_json json_conductor(const ConductorResult& c) {
    ordered_json out;
    out["generators"] = ordered_json::array();
    for (const auto& g : c.ideal.gens)
        out["generators"].push_back(g.to_string());
    out["certified"] = c.certified;
    out["target_degree"] = c.target_degree;
    out["source_degree"] = c.source_degree;
    return out;
}

ordered_json json_gw(const GWModule& g) {
    ordered_json out;
    out["realization"] = json_realized(g.realization);
    out["omega_gens"] = g.omega.gens;
    out["tensor_gens"] = g.tensor.gens;
    return out;
}

ordered_json json_swan(const SwanSequence& s) {
    ordered_json out;
    out["surjective"] = s.surjective;
    out["source"] = json_realized(s.source);
    out["target"] = json_realized(s.gw.realization);
    return out;
}

ordered_json json_mennicke(const MennickeMatrix& m) {
    ordered_json out;
    out["matrix"] = ordered_json::array();
    out["matrix"].push_back({m.a11.to_string(), m.a12.to_string()});
    out["matrix"].push_back({m.a21.to_string(), m.a22.to_string()});
    out["determinant_one"] = m.determinant_one;
    out["congruent_to_identity"] = m.congruent_to_identity;
    return out;
}

ordered_json json_artin_rees(const ArtinReesWitness& w) {
    ordered_json out;
    out["s"] = w.s;
    out["torsion_exponent"] = w.torsion_exponent;
    out["minimal_certified"] = w.minimal_certified;
    if (!w.witness.empty()) out["witness"] = w.witness;
    return out;
}

ordered_json json_reduction(const ReductionIndex& r) {
    ordered_json out;
    out["index"] = r.index;
    out["degenerate_equal"] = r.degenerate_equal;
    return out;
}

}  // namespace detail

namespace {

std::string cert_line(const ProZeroCertificate& c) {
    std::ostringstream os;
    os << "pro-zero " << c.system << ": " << detail::status_string(c.status);
    if (c.status == ProZeroCertificate::Status::certified) {
        if (!c.method.empty()) os << " via " << c.method;
        os << "; witness";
        for (const auto& [s, r] : c.witness)
            os << " r(" << s << ")=" << r;
    } else if (c.failed_level) {
        os << " at level " << c.failed_level;
    }
    os << " (S=" << c.levels << ", r_max=" << c.r_max << ")";
    if (c.status != ProZeroCertificate::Status::certified && !c.detail.empty())
        os << ": " << c.detail;
    return os.str();
}

}  // namespace

std::string render_validation(const ValidationOutcome& v) {
    if (v.valid()) {
        std::ostringstream os;
        os << "valid excision situation (" << v.situation->closure.size()
           << " closure witnesses, degree " << v.situation->witness_degree
           << ")";
        return os.str();
    }
    std::string reason =
        v.rejection->kind == ExcisionRejection::Kind::kernel_overlap
            ? "kernel meets the ideal"
            : "image is not an ideal";
    return "invalid: " + reason + ", witness " + v.rejection->witness;
}

std::string render_gw(const GWModule& g) {
    return "birelative obstruction module: " + g.realization.to_string();
}

std::string render_conductor(const ConductorResult& c) {
    std::string gens;
    for (const auto& g : c.ideal.gens) {
        if (!gens.empty()) gens += ", ";
        gens += g.to_string();
    }
    std::string out = "conductor: (" + gens + ")";
    out += c.certified ? " [certified]" : " [within budget, not certified]";
    return out;
}

std::string render_swan(const SwanSequence& s) {
    std::string out = "swan map: " + s.source.to_string() + " -> " +
                      s.gw.realization.to_string();
    out += s.surjective ? ", surjective" : ", not surjective";
    return out;
}

std::string render_mennicke(const MennickeMatrix& m) {
    std::ostringstream os;
    os << "[[" << m.a11.to_string() << ", " << m.a12.to_string() << "], ["
       << m.a21.to_string() << ", " << m.a22.to_string() << "]]";
    os << "; determinant one: " << (m.determinant_one ? "yes" : "NO");
    os << "; congruent to identity mod I: "
       << (m.congruent_to_identity ? "yes" : "NO");
    return os.str();
}

std::string render_certificate(const ProZeroCertificate& c) {
    return cert_line(c);
}

std::string render_pro_iso(const ProIsoCertificate& c) {
    std::ostringstream os;
    os << "pro-iso: " << detail::status_string(c.status) << "\n";
    os << "  kernel:   " << cert_line(c.kernel_cert) << "\n";
    os << "  cokernel: " << cert_line(c.cokernel_cert);
    return os.str();
}

std::string render_criteria(const CriteriaReport& r) {
    std::ostringstream os;
    os << "criteria chain (tor depth " << r.tor_depth << ", S="
       << r.level_bound << ", r_max=" << r.transition_bound << ")";
    for (const auto& l : r.layers) {
        os << "\n  " << l.name << ": " << l.verdict << " [" << l.provenance
           << "]";
        if (!l.details.empty()) os << " " << l.details;
    }
    return os.str();
}

std::string render_artin_rees(const ArtinReesWitness& w) {
    std::ostringstream os;
    os << "artin-rees number s=" << w.s
       << (w.minimal_certified ? " (certified minimal)" : " (upper bound)")
       << ", torsion exponent " << w.torsion_exponent;
    if (!w.witness.empty()) os << ", witness " << w.witness;
    return os.str();
}

std::string render_reduction(const ReductionIndex& r) {
    std::ostringstream os;
    os << "reduction index " << r.index;
    if (r.degenerate_equal) os << " (degenerate: the ideals are equal)";
    return os.str();
}

std::string render_snf(const std::vector<mpz_class>& diagonal) {
    std::string out = "diagonal (";
    for (std::size_t i = 0; i < diagonal.size(); ++i) {
        if (i) out += ", ";
        out += diagonal[i].get_str();
    }
    return out + ")";
}

}  // namespace prok
