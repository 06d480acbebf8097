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
#ifndef PROK_PARSER_HPP
#define PROK_PARSER_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace prok {

// Session-language AST. Polynomial and integer operands are carried as
// canonical token-joined text and evaluated against a ring only at
// execution time, so parse -> pretty_print -> parse is the identity on
// the AST.

struct RingDecl {
    std::string name;
    std::string base;     // "QQ", "ZZ", or "Fp"
    std::string modulus;  // digits, Fp only
    std::vector<std::string> vars;
    std::vector<std::string> relations;
    bool operator==(const RingDecl&) const = default;
};

struct HomDecl {
    std::string name;
    std::string source;
    std::string target;
    std::vector<std::pair<std::string, std::string>> images;  // var -> poly
    bool operator==(const HomDecl&) const = default;
};

// Either a reference to a declared ideal or a literal generator list,
// optionally raised to a power and pinned to an explicit ring.
struct IdealExpr {
    std::string ref;
    std::vector<std::string> gens;
    unsigned power = 1;
    std::string of_ring;
    bool operator==(const IdealExpr&) const = default;
};

struct IdealDecl {
    std::string name;
    IdealExpr value;
    bool operator==(const IdealDecl&) const = default;
};

struct ModuleDecl {
    std::string name;
    std::string ring;
    std::vector<std::vector<std::string>> rows;  // presentation matrix
    bool operator==(const ModuleDecl&) const = default;
};

// A situation operand: a bound name or a builtin:NAME reference.
struct SitRef {
    std::string name;
    std::string builtin;
    bool operator==(const SitRef&) const = default;
};

struct SituationDecl {
    std::string name;
    std::string builtin;  // situation E = builtin:cusp;
    std::string hom;
    IdealExpr ideal;
    std::vector<std::string> module_gens;
    bool operator==(const SituationDecl&) const = default;
};

struct CmdValidate {
    SitRef sit;
    bool operator==(const CmdValidate&) const = default;
};

struct CmdGw {
    SitRef sit;
    bool operator==(const CmdGw&) const = default;
};

struct CmdConductor {
    SitRef sit;
    bool operator==(const CmdConductor&) const = default;
};

// prozero gw(E) upto s=3 r=8;  or  prozero tor(n=1, (t)) upto s=3 r=12;
// levels / r_max of zero defer to the session-wide pro budget.
struct CmdProzero {
    std::string system;  // "gw" or "tor"
    SitRef sit;
    unsigned n = 0;
    IdealExpr ideal;
    unsigned levels = 0;
    unsigned r_max = 0;
    bool operator==(const CmdProzero&) const = default;
};

struct CmdCriteria {
    SitRef sit;
    unsigned depth = 1;
    unsigned levels = 0;
    unsigned r_max = 0;
    bool operator==(const CmdCriteria&) const = default;
};

// tor n=1 of (t) s=2 r=4;
struct CmdTor {
    unsigned n = 0;
    IdealExpr ideal;
    unsigned s = 1;
    unsigned r = 2;
    bool operator==(const CmdTor&) const = default;
};

struct CmdMennicke {
    SitRef sit;
    std::string b;
    std::string x;
    bool operator==(const CmdMennicke&) const = default;
};

struct CmdReduce {
    IdealExpr sub;
    IdealExpr ideal;
    unsigned bound = 8;
    bool operator==(const CmdReduce&) const = default;
};

struct CmdArtinRees {
    IdealExpr I;
    IdealExpr K;
    unsigned bound = 8;
    bool operator==(const CmdArtinRees&) const = default;
};

struct CmdSnf {
    std::vector<std::vector<std::string>> entries;  // signed decimal text
    bool operator==(const CmdSnf&) const = default;
};

using Statement =
    std::variant<RingDecl, HomDecl, IdealDecl, ModuleDecl, SituationDecl,
                 CmdValidate, CmdGw, CmdConductor, CmdProzero, CmdCriteria,
                 CmdTor, CmdMennicke, CmdReduce, CmdArtinRees, CmdSnf>;

struct Program {
    std::vector<Statement> statements;
    bool operator==(const Program&) const = default;
};

// Throws ParseError with 1-based line/column on malformed input.
Program parse_program(const std::string& source);

std::string pretty_print(const Program& prog);
std::string pretty_print(const Statement& stmt);

}  // namespace prok

#endif  // PROK_PARSER_HPP
