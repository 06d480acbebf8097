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
#include "prok/session.hpp"

#include <chrono>
#include <map>
#include <sstream>
#include <variant>
#include <vector>

#include "prok/builtins.hpp"
#include "prok/errors.hpp"
#include "prok/excision.hpp"
#include "prok/fpmod.hpp"
#include "prok/fpring.hpp"
#include "prok/ideal.hpp"
#include "prok/parser.hpp"
#include "prok/polynomial.hpp"
#include "prok/prosys.hpp"
#include "prok/report.hpp"
#include "report_internal.hpp"

namespace prok {
namespace {

using detail::ordered_json;

struct Env {
    std::map<std::string, FPRingPtr> rings;
    std::map<std::string, RingHom> homs;
    std::map<std::string, RingIdeal> ideals;
    std::map<std::string, FPModule> modules;
    std::map<std::string, ExcisionSituation> situations;
    FPRingPtr current_ring;

    bool declared(const std::string& name) const {
        return rings.count(name) || homs.count(name) || ideals.count(name) ||
               modules.count(name) || situations.count(name);
    }
    void claim(const std::string& name) const {
        if (declared(name))
            throw InvalidInputError("name '" + name + "' is already declared");
    }
};

[[noreturn]] void unknown(const std::string& what, const std::string& name) {
    throw InvalidInputError("unknown " + what + " '" + name + "'");
}

const FPRingPtr& get_ring(const Env& env, const std::string& name) {
    auto it = env.rings.find(name);
    if (it == env.rings.end()) unknown("ring", name);
    return it->second;
}

ExcisionSituation get_situation(const Env& env, const SitRef& ref) {
    if (!ref.builtin.empty()) return builtin_situation(ref.builtin);
    auto it = env.situations.find(ref.name);
    if (it == env.situations.end()) unknown("situation", ref.name);
    return it->second;
}

// Inline generator lists resolve against `scope` (the most recently
// declared ring) unless the expression carries `of RING`.
RingIdeal resolve_ideal(const Env& env, const IdealExpr& e,
                        const FPRingPtr& scope) {
    if (e.power == 0) throw InvalidInputError("ideal power must be positive");
    RingIdeal out;
    if (!e.ref.empty()) {
        auto it = env.ideals.find(e.ref);
        if (it == env.ideals.end()) unknown("ideal", e.ref);
        out = it->second;
        if (!e.of_ring.empty() && get_ring(env, e.of_ring) != out.ring)
            throw InvalidInputError("ideal '" + e.ref +
                                    "' does not live in ring '" + e.of_ring +
                                    "'");
    } else {
        FPRingPtr R = e.of_ring.empty() ? scope : get_ring(env, e.of_ring);
        if (!R)
            throw InvalidInputError(
                "no ring is in scope for an inline ideal; declare a ring or "
                "add 'of RING'");
        std::vector<RingElement> gens;
        gens.reserve(e.gens.size());
        for (const auto& g : e.gens) gens.push_back(ring_element(R, g));
        out = make_ring_ideal(R, std::move(gens));
    }
    if (e.power > 1) out = ring_ideal_power(out, e.power);
    return out;
}

struct Record {
    std::string command;
    std::string status;  // "ok", "certification-failed", "error"
    ordered_json result;
    std::string error;
    std::string text;
    long long timing_ms = 0;
};

struct Executor {
    const SessionOptions& opts;
    Env env;
    std::vector<Record> records;
    bool any_cert_failure = false;
    bool stopped = false;

    explicit Executor(const SessionOptions& o) : opts(o) {}

    unsigned levels_or_default(unsigned v) const {
        return v ? v : opts.pro_levels;
    }
    unsigned rmax_or_default(unsigned v) const {
        return v ? v : opts.pro_rmax;
    }

    // Declarations bind names and report nothing on success.

    void exec(const RingDecl& d) {
        env.claim(d.name);
        BaseRing base = BaseRing::QQ();
        if (d.base == "ZZ") base = BaseRing::ZZ();
        else if (d.base == "Fp") base = BaseRing::Fp(mpz_class(d.modulus));
        PolyRingPtr poly = make_poly_ring(base, d.vars);
        std::vector<Polynomial> rels;
        rels.reserve(d.relations.size());
        for (const auto& r : d.relations)
            rels.push_back(parse_polynomial(poly, r));
        FPRingPtr R = make_fp_ring(poly, std::move(rels), d.name);
        env.rings.emplace(d.name, R);
        env.current_ring = R;
    }

    void exec(const HomDecl& d) {
        env.claim(d.name);
        const FPRingPtr& src = get_ring(env, d.source);
        const FPRingPtr& tgt = get_ring(env, d.target);
        std::vector<Polynomial> images;
        std::vector<bool> seen(src->nvars(), false);
        images.resize(src->nvars(), Polynomial::zero(tgt->poly));
        for (const auto& [var, expr] : d.images) {
            std::size_t idx = src->nvars();
            for (std::size_t i = 0; i < src->nvars(); ++i)
                if (src->poly->vars[i] == var) { idx = i; break; }
            if (idx == src->nvars())
                throw InvalidInputError("'" + var + "' is not a variable of '" +
                                        d.source + "'");
            if (seen[idx])
                throw InvalidInputError("variable '" + var +
                                        "' is mapped twice");
            seen[idx] = true;
            images[idx] = parse_polynomial(tgt->poly, expr);
        }
        for (std::size_t i = 0; i < src->nvars(); ++i)
            if (!seen[i])
                throw InvalidInputError("hom does not map variable '" +
                                        src->poly->vars[i] + "'");
        env.homs.emplace(d.name, make_ring_hom(src, tgt, std::move(images)));
    }

    void exec(const IdealDecl& d) {
        env.claim(d.name);
        env.ideals.emplace(d.name,
                           resolve_ideal(env, d.value, env.current_ring));
    }

    void exec(const ModuleDecl& d) {
        env.claim(d.name);
        const FPRingPtr& R = get_ring(env, d.ring);
        std::size_t gens = d.rows.size();
        std::size_t cols = gens ? d.rows.front().size() : 0;
        for (const auto& row : d.rows)
            if (row.size() != cols)
                throw InvalidInputError("presentation matrix rows differ in length");
        std::vector<ModVec> rel(cols, ModVec(gens, Polynomial::zero(R->poly)));
        for (std::size_t i = 0; i < gens; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                rel[j][i] = parse_polynomial(R->poly, d.rows[i][j]);
        env.modules.emplace(d.name, make_module(R, gens, std::move(rel)));
    }

    void exec(const SituationDecl& d) {
        env.claim(d.name);
        ExcisionSituation E;
        if (!d.builtin.empty()) {
            E = builtin_situation(d.builtin);
        } else {
            auto it = env.homs.find(d.hom);
            if (it == env.homs.end()) unknown("hom", d.hom);
            const RingHom& f = it->second;
            RingIdeal I = resolve_ideal(env, d.ideal, f.source);
            if (I.ring != f.source)
                throw InvalidInputError(
                    "the ideal of a situation must live in the source ring");
            std::vector<RingElement> mg;
            mg.reserve(d.module_gens.size());
            for (const auto& g : d.module_gens)
                mg.push_back(ring_element(f.target, g));
            E = validate_excision(f, I, std::move(mg));
            E.label = d.name;
        }
        env.current_ring = E.A();
        env.situations.emplace(d.name, std::move(E));
    }

    // Commands append a record each.

    void exec_command(const Statement& stmt, Record& rec) {
        if (const auto* c = std::get_if<CmdValidate>(&stmt)) {
            ExcisionSituation E = get_situation(env, c->sit);
            ValidationOutcome v =
                try_validate_excision(E.f, E.I, E.module_gens);
            rec.result = detail::json_validation(v);
            rec.text = render_validation(v);
            if (!v.valid()) rec.status = "certification-failed";
        } else if (const auto* c = std::get_if<CmdGw>(&stmt)) {
            ExcisionSituation E = get_situation(env, c->sit);
            GWModule g = gw_birelative_k1(E);
            rec.result = detail::json_gw(g);
            rec.text = render_gw(g);
        } else if (const auto* c = std::get_if<CmdConductor>(&stmt)) {
            ExcisionSituation E = get_situation(env, c->sit);
            ConductorResult r = conductor(E.f, E.module_gens);
            rec.result = detail::json_conductor(r);
            rec.text = render_conductor(r);
        } else if (const auto* c = std::get_if<CmdProzero>(&stmt)) {
            unsigned S = levels_or_default(c->levels);
            unsigned R = rmax_or_default(c->r_max);
            ProSystem sys = c->system == "gw"
                                ? gw_pro_system(get_situation(env, c->sit))
                                : [&] {
                                      RingIdeal I = resolve_ideal(
                                          env, c->ideal, env.current_ring);
                                      return tor_pro_system(I.ring, I, c->n);
                                  }();
            ProZeroCertificate cert = pro_zero_certify(sys, S, R);
            rec.result = detail::json_certificate(cert);
            rec.text = render_certificate(cert);
            if (!cert.ok()) rec.status = "certification-failed";
        } else if (const auto* c = std::get_if<CmdCriteria>(&stmt)) {
            ExcisionSituation E = get_situation(env, c->sit);
            unsigned S = c->levels ? c->levels : 2;
            unsigned R = rmax_or_default(c->r_max);
            CriteriaReport r = criteria_report(E, c->depth, S, R);
            rec.result = detail::json_criteria(r);
            rec.text = render_criteria(r);
        } else if (const auto* c = std::get_if<CmdTor>(&stmt)) {
            if (c->r < c->s)
                throw InvalidInputError("tor needs r >= s");
            RingIdeal I = resolve_ideal(env, c->ideal, env.current_ring);
            ProSystem sys = tor_pro_system(I.ring, I, c->n);
            RealizedModule level = sys.level(c->s);
            RealizedMap trans = sys.transition(c->s, c->r);
            ordered_json out;
            out["n"] = c->n;
            out["s"] = c->s;
            out["r"] = c->r;
            out["level"] = detail::json_realized(level);
            out["transition_zero"] = trans.is_zero();
            rec.result = std::move(out);
            std::ostringstream os;
            os << "Tor_" << c->n << " at level " << c->s << ": "
               << level.to_string() << "; transition from level " << c->r
               << " is " << (trans.is_zero() ? "zero" : "nonzero");
            rec.text = os.str();
        } else if (const auto* c = std::get_if<CmdMennicke>(&stmt)) {
            ExcisionSituation E = get_situation(env, c->sit);
            RingElement b = ring_element(E.B(), c->b);
            RingElement x = ring_element(E.A(), c->x);
            MennickeMatrix m = mennicke(E, b, x);
            rec.result = detail::json_mennicke(m);
            rec.text = render_mennicke(m);
            if (!m.determinant_one || !m.congruent_to_identity)
                rec.status = "certification-failed";
        } else if (const auto* c = std::get_if<CmdReduce>(&stmt)) {
            RingIdeal sub = resolve_ideal(env, c->sub, env.current_ring);
            RingIdeal J = resolve_ideal(env, c->ideal, env.current_ring);
            ReductionIndex r = reduction_index(sub, J, c->bound);
            rec.result = detail::json_reduction(r);
            rec.text = render_reduction(r);
        } else if (const auto* c = std::get_if<CmdArtinRees>(&stmt)) {
            RingIdeal I = resolve_ideal(env, c->I, env.current_ring);
            RingIdeal K = resolve_ideal(env, c->K, env.current_ring);
            ArtinReesWitness w = artin_rees_witness(I.ring, I, K, c->bound);
            rec.result = detail::json_artin_rees(w);
            rec.text = render_artin_rees(w);
        } else if (const auto* c = std::get_if<CmdSnf>(&stmt)) {
            std::size_t rows = c->entries.size();
            std::size_t cols = rows ? c->entries.front().size() : 0;
            for (const auto& row : c->entries)
                if (row.size() != cols)
                    throw InvalidInputError("matrix rows differ in length");
            IntMatrix m(rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    m.a[i][j] = mpz_class(c->entries[i][j]);
            std::vector<mpz_class> diag = smith_normal_form(m).diagonal();
            rec.result = detail::json_snf(diag);
            rec.text = render_snf(diag);
        }
    }

    void run(const Statement& stmt) {
        bool is_decl =
            std::holds_alternative<RingDecl>(stmt) ||
            std::holds_alternative<HomDecl>(stmt) ||
            std::holds_alternative<IdealDecl>(stmt) ||
            std::holds_alternative<ModuleDecl>(stmt) ||
            std::holds_alternative<SituationDecl>(stmt);
        Record rec;
        rec.command = pretty_print(stmt);
        rec.status = "ok";
        auto start = std::chrono::steady_clock::now();
        try {
            if (const auto* d = std::get_if<RingDecl>(&stmt)) exec(*d);
            else if (const auto* d = std::get_if<HomDecl>(&stmt)) exec(*d);
            else if (const auto* d = std::get_if<IdealDecl>(&stmt)) exec(*d);
            else if (const auto* d = std::get_if<ModuleDecl>(&stmt)) exec(*d);
            else if (const auto* d = std::get_if<SituationDecl>(&stmt)) exec(*d);
            else exec_command(stmt, rec);
        } catch (const CertificationError& e) {
            rec.status = "certification-failed";
            rec.error = e.what();
        } catch (const BudgetError& e) {
            rec.status = "certification-failed";
            rec.error = std::string("budget exhausted: ") + e.what();
        } catch (const Error& e) {
            rec.status = "error";
            rec.error = e.what();
        } catch (const std::exception& e) {
            rec.status = "error";
            rec.error = e.what();
        }
        auto end = std::chrono::steady_clock::now();
        rec.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            end - start)
                            .count();
        if (rec.status == "certification-failed") any_cert_failure = true;
        if (rec.status == "error") stopped = true;
        if (!is_decl || rec.status != "ok") records.push_back(std::move(rec));
    }
};

}  // namespace

SessionResult run_session(const std::string& source,
                          const SessionOptions& opts) {
    if (opts.groebner_budget)
        set_default_groebner_budget(opts.groebner_budget);

    Executor ex(opts);
    SessionResult out;

    Program prog;
    bool parsed = false;
    std::string parse_message;
    try {
        prog = parse_program(source);
        parsed = true;
    } catch (const ParseError& e) {
        parse_message = e.what();
    }

    if (parsed && !opts.builtin.empty()) {
        Record rec;
        rec.command = "builtin " + opts.builtin;
        rec.status = "ok";
        try {
            ExcisionSituation E = builtin_situation(opts.builtin);
            ex.env.current_ring = E.A();
            ex.env.situations.emplace("E", std::move(E));
        } catch (const std::exception& e) {
            rec.status = "error";
            rec.error = e.what();
            ex.stopped = true;
        }
        if (rec.status != "ok") ex.records.push_back(std::move(rec));
    }

    if (parsed)
        for (const auto& stmt : prog.statements) {
            if (ex.stopped) break;
            ex.run(stmt);
        }

    int exit_code = 0;
    if (!parsed || ex.stopped) exit_code = 3;
    else if (ex.any_cert_failure) exit_code = 2;
    out.exit_code = exit_code;

    if (opts.json) {
        ordered_json rep;
        rep["schema"] = "report-v1";
        ordered_json jopts;
        jopts["groebner_budget"] = default_groebner_budget();
        jopts["pro_levels"] = opts.pro_levels;
        jopts["pro_rmax"] = opts.pro_rmax;
        if (!opts.builtin.empty()) jopts["builtin"] = opts.builtin;
        rep["options"] = jopts;
        if (!parsed) rep["parse_error"] = parse_message;
        rep["commands"] = ordered_json::array();
        for (const auto& r : ex.records) {
            ordered_json jr;
            jr["command"] = r.command;
            jr["status"] = r.status;
            if (!r.result.is_null()) {
                jr["result"] = r.result;
                jr["provenance"] = "computed";
            }
            if (!r.error.empty()) jr["error"] = r.error;
            if (opts.timing) jr["timing_ms"] = r.timing_ms;
            rep["commands"].push_back(jr);
        }
        rep["exit"] = exit_code;
        out.output = rep.dump(2) + "\n";
    } else {
        std::ostringstream os;
        if (!parsed) os << "error: " << parse_message << "\n";
        for (const auto& r : ex.records) {
            os << "> " << r.command << "\n";
            if (!r.text.empty()) os << r.text << "\n";
            if (!r.error.empty()) {
                os << (r.status == "error" ? "error: " : "not certified: ")
                   << r.error << "\n";
            }
            if (opts.timing) os << "(" << r.timing_ms << " ms)\n";
            os << "\n";
        }
        out.output = os.str();
    }
    return out;
}

}  // namespace prok
