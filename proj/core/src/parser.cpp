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
#include "prok/parser.hpp"

#include <cctype>
#include <sstream>

#include "prok/errors.hpp"

namespace prok {
namespace {

struct Tok {
    enum class K { ident, number, sym, end };
    K k = K::end;
    std::string s;
    int line = 0, col = 0;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Tok> lex(const std::string& src) {
    std::vector<Tok> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (src[i + k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += n;
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        Tok t;
        t.line = line;
        t.col = col;
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < src.size() && ident_char(src[j])) ++j;
            t.k = Tok::K::ident;
            t.s = src.substr(i, j - i);
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            t.k = Tok::K::number;
            t.s = src.substr(i, j - i);
            advance(j - i);
        } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            t.k = Tok::K::sym;
            t.s = "->";
            advance(2);
        } else if (std::string("()[]{},;=^*+-/:").find(c) != std::string::npos) {
            t.k = Tok::K::sym;
            t.s = std::string(1, c);
            advance(1);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back(std::move(t));
    }
    Tok end;
    end.k = Tok::K::end;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

bool alnum_tail(const std::string& s) {
    return !s.empty() && ident_char(s.back());
}
bool alnum_head(const std::string& s) {
    return !s.empty() && ident_char(s.front());
}

struct Parser {
    std::vector<Tok> toks;
    std::size_t pos = 0;

    const Tok& peek(std::size_t ahead = 0) const {
        std::size_t j = pos + ahead;
        return j < toks.size() ? toks[j] : toks.back();
    }
    const Tok& get() { return toks[pos < toks.size() - 1 ? pos++ : pos]; }

    [[noreturn]] void fail(const std::string& msg) const {
        const Tok& t = peek();
        throw ParseError(msg, t.line, t.col);
    }

    bool at_sym(const std::string& s) const {
        return peek().k == Tok::K::sym && peek().s == s;
    }
    bool at_ident(const std::string& s) const {
        return peek().k == Tok::K::ident && peek().s == s;
    }
    void expect_sym(const std::string& s) {
        if (!at_sym(s)) fail("expected '" + s + "'");
        get();
    }
    bool accept_sym(const std::string& s) {
        if (!at_sym(s)) return false;
        get();
        return true;
    }
    bool accept_ident(const std::string& s) {
        if (!at_ident(s)) return false;
        get();
        return true;
    }
    std::string expect_name() {
        if (peek().k != Tok::K::ident) fail("expected a name");
        return get().s;
    }
    unsigned expect_uint() {
        if (peek().k != Tok::K::number) fail("expected a number");
        unsigned long v = 0;
        try {
            v = std::stoul(get().s);
        } catch (...) {
            fail("number out of range");
        }
        if (v > 1u << 24) fail("number out of range");
        return static_cast<unsigned>(v);
    }
    void expect_ident(const std::string& s) {
        if (!at_ident(s)) fail("expected '" + s + "'");
        get();
    }

    // Collect expression tokens until a stop symbol at bracket depth zero;
    // joined with canonical spacing so lexing the result reproduces the
    // token sequence.
    std::string collect_expr(const std::vector<std::string>& stops) {
        std::string out;
        int depth = 0;
        bool any = false;
        for (;;) {
            const Tok& t = peek();
            if (t.k == Tok::K::end) fail("unterminated expression");
            if (t.k == Tok::K::sym && depth == 0)
                for (const auto& s : stops)
                    if (t.s == s) {
                        if (!any) fail("empty expression");
                        return out;
                    }
            if (t.k == Tok::K::sym &&
                (t.s == "(" || t.s == "[" || t.s == "{")) ++depth;
            if (t.k == Tok::K::sym &&
                (t.s == ")" || t.s == "]" || t.s == "}")) {
                if (depth == 0) fail("unbalanced bracket in expression");
                --depth;
            }
            if (alnum_tail(out) && alnum_head(t.s)) out += ' ';
            out += get().s;
            any = true;
        }
    }

    std::vector<std::string> poly_list(const std::string& closer) {
        std::vector<std::string> out;
        if (at_sym(closer)) return out;
        for (;;) {
            out.push_back(collect_expr({",", closer}));
            if (!accept_sym(",")) break;
        }
        return out;
    }

    // NAME, (gens), or ideal(gens), then optional ^n and `of RING`.
    IdealExpr ideal_expr() {
        IdealExpr out;
        if (at_sym("(") || at_ident("ideal")) {
            accept_ident("ideal");
            expect_sym("(");
            out.gens = poly_list(")");
            expect_sym(")");
        } else {
            out.ref = expect_name();
        }
        if (accept_sym("^")) out.power = expect_uint();
        if (accept_ident("of")) out.of_ring = expect_name();
        return out;
    }

    std::string builtin_name() {
        std::string name = expect_name();
        if (accept_sym("(")) {
            name += "(" + std::to_string(expect_uint()) + ")";
            expect_sym(")");
        }
        return name;
    }

    SitRef sit_ref() {
        SitRef out;
        if (accept_ident("builtin")) {
            expect_sym(":");
            out.builtin = builtin_name();
        } else {
            out.name = expect_name();
        }
        return out;
    }

    RingDecl ring_decl() {
        RingDecl d;
        d.name = expect_name();
        expect_sym("=");
        d.base = expect_name();
        if (d.base == "Fp") {
            expect_sym("(");
            if (peek().k != Tok::K::number) fail("expected a prime modulus");
            d.modulus = get().s;
            expect_sym(")");
        } else if (d.base != "QQ" && d.base != "ZZ") {
            fail("unknown base ring (QQ, ZZ, or Fp(p))");
        }
        expect_sym("[");
        if (!at_sym("]"))
            for (;;) {
                d.vars.push_back(expect_name());
                if (!accept_sym(",")) break;
            }
        expect_sym("]");
        if (accept_sym("/")) {
            expect_sym("(");
            d.relations = poly_list(")");
            expect_sym(")");
        }
        expect_sym(";");
        return d;
    }

    HomDecl hom_decl() {
        HomDecl d;
        d.name = expect_name();
        expect_sym(":");
        d.source = expect_name();
        expect_sym("->");
        d.target = expect_name();
        expect_sym("=");
        expect_sym("{");
        if (!at_sym("}"))
            for (;;) {
                std::string var = expect_name();
                expect_sym("->");
                d.images.emplace_back(var, collect_expr({",", "}"}));
                if (!accept_sym(",")) break;
            }
        expect_sym("}");
        expect_sym(";");
        return d;
    }

    IdealDecl ideal_decl() {
        IdealDecl d;
        d.name = expect_name();
        expect_sym("=");
        d.value = ideal_expr();
        expect_sym(";");
        return d;
    }

    std::vector<std::vector<std::string>> poly_matrix() {
        std::vector<std::vector<std::string>> rows;
        expect_sym("[");
        for (;;) {
            expect_sym("[");
            rows.push_back(poly_list("]"));
            expect_sym("]");
            if (!accept_sym(",")) break;
        }
        expect_sym("]");
        return rows;
    }

    ModuleDecl module_decl() {
        ModuleDecl d;
        d.name = expect_name();
        expect_ident("over");
        d.ring = expect_name();
        expect_sym("=");
        expect_ident("coker");
        d.rows = poly_matrix();
        expect_sym(";");
        return d;
    }

    SituationDecl situation_decl() {
        SituationDecl d;
        d.name = expect_name();
        expect_sym("=");
        if (accept_ident("builtin")) {
            expect_sym(":");
            d.builtin = builtin_name();
        } else {
            expect_ident("excision");
            expect_sym("(");
            d.hom = expect_name();
            expect_sym(",");
            d.ideal = ideal_expr();
            if (accept_sym(",")) {
                expect_sym("{");
                d.module_gens = poly_list("}");
                expect_sym("}");
            }
            expect_sym(")");
        }
        expect_sym(";");
        return d;
    }

    void parse_upto(unsigned& levels, unsigned& r_max) {
        if (!accept_ident("upto")) return;
        bool any = false;
        if (accept_ident("s")) {
            expect_sym("=");
            levels = expect_uint();
            any = true;
        }
        if (accept_ident("r")) {
            expect_sym("=");
            r_max = expect_uint();
            any = true;
        }
        if (!any) fail("'upto' needs s=N or r=N");
    }

    CmdProzero prozero_cmd() {
        CmdProzero c;
        c.system = expect_name();
        if (c.system == "gw") {
            expect_sym("(");
            c.sit = sit_ref();
            expect_sym(")");
        } else if (c.system == "tor") {
            expect_sym("(");
            expect_ident("n");
            expect_sym("=");
            c.n = expect_uint();
            expect_sym(",");
            c.ideal = ideal_expr();
            expect_sym(")");
        } else {
            fail("prozero supports the gw and tor systems");
        }
        parse_upto(c.levels, c.r_max);
        expect_sym(";");
        return c;
    }

    CmdCriteria criteria_cmd() {
        CmdCriteria c;
        c.sit = sit_ref();
        if (accept_ident("tor")) {
            expect_sym("-");
            expect_ident("depth");
            c.depth = expect_uint();
        }
        parse_upto(c.levels, c.r_max);
        expect_sym(";");
        return c;
    }

    CmdTor tor_cmd() {
        CmdTor c;
        expect_ident("n");
        expect_sym("=");
        c.n = expect_uint();
        expect_ident("of");
        c.ideal = ideal_expr();
        if (accept_ident("s")) {
            expect_sym("=");
            c.s = expect_uint();
        }
        if (accept_ident("r")) {
            expect_sym("=");
            c.r = expect_uint();
        }
        expect_sym(";");
        return c;
    }

    CmdMennicke mennicke_cmd() {
        CmdMennicke c;
        c.sit = sit_ref();
        expect_ident("with");
        expect_ident("b");
        expect_sym("=");
        c.b = collect_expr({","});
        expect_sym(",");
        expect_ident("x");
        expect_sym("=");
        c.x = collect_expr({";"});
        expect_sym(";");
        return c;
    }

    CmdReduce reduce_cmd() {
        CmdReduce c;
        c.sub = ideal_expr();
        expect_ident("in");
        c.ideal = ideal_expr();
        if (accept_ident("bound")) c.bound = expect_uint();
        expect_sym(";");
        return c;
    }

    CmdArtinRees artin_rees_cmd() {
        CmdArtinRees c;
        c.I = ideal_expr();
        expect_ident("cap");
        c.K = ideal_expr();
        if (accept_ident("bound")) c.bound = expect_uint();
        expect_sym(";");
        return c;
    }

    CmdSnf snf_cmd() {
        CmdSnf c;
        expect_sym("[");
        for (;;) {
            expect_sym("[");
            std::vector<std::string> row;
            if (!at_sym("]"))
                for (;;) {
                    std::string v;
                    if (accept_sym("-")) v = "-";
                    if (peek().k != Tok::K::number) fail("expected an integer");
                    v += get().s;
                    row.push_back(std::move(v));
                    if (!accept_sym(",")) break;
                }
            expect_sym("]");
            c.entries.push_back(std::move(row));
            if (!accept_sym(",")) break;
        }
        expect_sym("]");
        expect_sym(";");
        return c;
    }

    Statement statement() {
        if (peek().k != Tok::K::ident) fail("expected a statement");
        std::string head = get().s;
        if (head == "ring") return ring_decl();
        if (head == "hom") return hom_decl();
        if (head == "ideal") return ideal_decl();
        if (head == "module") return module_decl();
        if (head == "situation") return situation_decl();
        if (head == "validate") {
            CmdValidate c{sit_ref()};
            expect_sym(";");
            return c;
        }
        if (head == "gw") {
            CmdGw c{sit_ref()};
            expect_sym(";");
            return c;
        }
        if (head == "conductor") {
            CmdConductor c{sit_ref()};
            expect_sym(";");
            return c;
        }
        if (head == "prozero") return prozero_cmd();
        if (head == "criteria") return criteria_cmd();
        if (head == "tor") return tor_cmd();
        if (head == "mennicke") return mennicke_cmd();
        if (head == "reduce") return reduce_cmd();
        if (head == "artin") {
            expect_sym("-");
            expect_ident("rees");
            return artin_rees_cmd();
        }
        if (head == "snf") return snf_cmd();
        throw ParseError("unknown statement '" + head + "'",
                         toks[pos - 1].line, toks[pos - 1].col);
    }

    Program parse() {
        Program p;
        while (peek().k != Tok::K::end) p.statements.push_back(statement());
        return p;
    }
};

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += xs[i];
    }
    return out;
}

std::string ideal_text(const IdealExpr& e, bool keyword) {
    std::string out;
    if (!e.ref.empty()) {
        out = e.ref;
    } else {
        out = (keyword ? "ideal(" : "(") + join(e.gens, ", ") + ")";
    }
    if (e.power != 1) out += "^" + std::to_string(e.power);
    if (!e.of_ring.empty()) out += " of " + e.of_ring;
    return out;
}

std::string sit_text(const SitRef& s) {
    return s.builtin.empty() ? s.name : "builtin:" + s.builtin;
}

std::string upto_text(unsigned levels, unsigned r_max) {
    if (levels == 0 && r_max == 0) return "";
    std::string out = " upto";
    if (levels) out += " s=" + std::to_string(levels);
    if (r_max) out += " r=" + std::to_string(r_max);
    return out;
}

struct Printer {
    std::string operator()(const RingDecl& d) const {
        std::string base = d.base == "Fp" ? "Fp(" + d.modulus + ")" : d.base;
        std::string out =
            "ring " + d.name + " = " + base + "[" + join(d.vars, ",") + "]";
        if (!d.relations.empty()) out += "/(" + join(d.relations, ", ") + ")";
        return out + ";";
    }
    std::string operator()(const HomDecl& d) const {
        std::vector<std::string> imgs;
        for (const auto& [v, p] : d.images) imgs.push_back(v + " -> " + p);
        std::string body = imgs.empty() ? "{}" : "{ " + join(imgs, ", ") + " }";
        return "hom " + d.name + " : " + d.source + " -> " + d.target + " = " +
               body + ";";
    }
    std::string operator()(const IdealDecl& d) const {
        return "ideal " + d.name + " = " + ideal_text(d.value, false) + ";";
    }
    std::string operator()(const ModuleDecl& d) const {
        std::vector<std::string> rows;
        for (const auto& r : d.rows) rows.push_back("[" + join(r, ", ") + "]");
        return "module " + d.name + " over " + d.ring + " = coker [" +
               join(rows, ", ") + "];";
    }
    std::string operator()(const SituationDecl& d) const {
        if (!d.builtin.empty())
            return "situation " + d.name + " = builtin:" + d.builtin + ";";
        std::string out = "situation " + d.name + " = excision(" + d.hom + ", " +
                          ideal_text(d.ideal, true);
        if (!d.module_gens.empty())
            out += ", {" + join(d.module_gens, ", ") + "}";
        return out + ");";
    }
    std::string operator()(const CmdValidate& c) const {
        return "validate " + sit_text(c.sit) + ";";
    }
    std::string operator()(const CmdGw& c) const {
        return "gw " + sit_text(c.sit) + ";";
    }
    std::string operator()(const CmdConductor& c) const {
        return "conductor " + sit_text(c.sit) + ";";
    }
    std::string operator()(const CmdProzero& c) const {
        std::string out = "prozero ";
        if (c.system == "gw") {
            out += "gw(" + sit_text(c.sit) + ")";
        } else {
            out += "tor(n=" + std::to_string(c.n) + ", " +
                   ideal_text(c.ideal, false) + ")";
        }
        return out + upto_text(c.levels, c.r_max) + ";";
    }
    std::string operator()(const CmdCriteria& c) const {
        std::string out = "criteria " + sit_text(c.sit);
        if (c.depth != 1) out += " tor-depth " + std::to_string(c.depth);
        return out + upto_text(c.levels, c.r_max) + ";";
    }
    std::string operator()(const CmdTor& c) const {
        return "tor n=" + std::to_string(c.n) + " of " +
               ideal_text(c.ideal, false) + " s=" + std::to_string(c.s) +
               " r=" + std::to_string(c.r) + ";";
    }
    std::string operator()(const CmdMennicke& c) const {
        return "mennicke " + sit_text(c.sit) + " with b = " + c.b +
               ", x = " + c.x + ";";
    }
    std::string operator()(const CmdReduce& c) const {
        return "reduce " + ideal_text(c.sub, false) + " in " +
               ideal_text(c.ideal, false) + " bound " + std::to_string(c.bound) +
               ";";
    }
    std::string operator()(const CmdArtinRees& c) const {
        return "artin-rees " + ideal_text(c.I, false) + " cap " +
               ideal_text(c.K, false) + " bound " + std::to_string(c.bound) + ";";
    }
    std::string operator()(const CmdSnf& c) const {
        std::vector<std::string> rows;
        for (const auto& r : c.entries) rows.push_back("[" + join(r, ", ") + "]");
        return "snf [" + join(rows, ", ") + "];";
    }
};

}  // namespace

Program parse_program(const std::string& source) {
    Parser p{lex(source)};
    return p.parse();
}

std::string pretty_print(const Statement& stmt) {
    return std::visit(Printer{}, stmt);
}

std::string pretty_print(const Program& prog) {
    std::ostringstream os;
    for (const auto& s : prog.statements) os << pretty_print(s) << "\n";
    return os.str();
}

}  // namespace prok
