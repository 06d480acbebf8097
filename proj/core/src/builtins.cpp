// Copyright 2026 The prok Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "prok/builtins.hpp"

#include <cstdlib>

#include "prok/errors.hpp"

namespace prok {
namespace {

bool is_odd_prime(unsigned p) {
    if (p < 3 || p % 2 == 0) return false;
    for (unsigned d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

Polynomial var_pow(const PolyRingPtr& r, std::size_t i, unsigned e) {
    Monomial m(r->nvars(), 0);
    m[i] = e;
    return Polynomial::term(r, m, 1);
}

}  // namespace

ExcisionSituation builtin_cusp() {
    PolyRingPtr pa = make_poly_ring(BaseRing::QQ(), {"x", "y"});
    PolyRingPtr pb = make_poly_ring(BaseRing::QQ(), {"t"});
    Polynomial x = Polynomial::variable(pa, 0), y = Polynomial::variable(pa, 1);
    FPRingPtr A = make_fp_ring(pa, {y * y - x * x * x}, "A");
    FPRingPtr B = make_free_ring(pb, "B");
    RingHom f = make_ring_hom(A, B, {var_pow(pb, 0, 2), var_pow(pb, 0, 3)});
    RingIdeal I = make_ring_ideal(A, std::vector<std::string>{"x", "y"});
    std::vector<RingElement> gens{ring_one(B), ring_element(B, "t")};
    ExcisionSituation E = validate_excision(f, I, gens);
    E.label = "cusp";
    return E;
}

ExcisionSituation builtin_node() {
    PolyRingPtr pa = make_poly_ring(BaseRing::QQ(), {"x", "y"});
    PolyRingPtr pb = make_poly_ring(BaseRing::QQ(), {"u", "e"});
    Polynomial x = Polynomial::variable(pa, 0), y = Polynomial::variable(pa, 1);
    Polynomial u = Polynomial::variable(pb, 0), e = Polynomial::variable(pb, 1);
    FPRingPtr A = make_fp_ring(pa, {x * y}, "A");
    FPRingPtr B = make_fp_ring(pb, {e * e - e}, "B");
    RingHom f = make_ring_hom(A, B, {u * e, u - u * e});
    RingIdeal I = make_ring_ideal(A, std::vector<std::string>{"x", "y"});
    std::vector<RingElement> gens{ring_one(B), RingElement(B, e)};
    ExcisionSituation E = validate_excision(f, I, gens);
    E.label = "node";
    return E;
}

ExcisionSituation builtin_swan(unsigned p) {
    if (!is_odd_prime(p))
        throw InvalidInputError("swan builtin needs an odd prime");
    std::size_t n = p - 2;  // variables u_1 .. u_{p-2}
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back("u" + std::to_string(i));
    PolyRingPtr pa = make_poly_ring(BaseRing::ZZ(), names);

    auto u = [&](std::size_t i) {  // 1-based
        return Polynomial::variable(pa, i - 1);
    };
    Polynomial usum = Polynomial::zero(pa);
    for (std::size_t i = 1; i <= n; ++i) usum = usum + u(i);
    mpq_class P(p);

    // Multiplication table of the subring generated by p z^i inside the
    // cyclotomic integers: p z^i * p z^j rewrites by z^p = 1 and the
    // vanishing of the p-th cyclotomic polynomial.
    std::vector<Polynomial> rels;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) {
            std::size_t s = i + j;
            Polynomial lhs = u(i) * u(j);
            if (s <= p - 2) {
                rels.push_back(lhs - u(s).scaled(P));
            } else if (s == p - 1) {
                rels.push_back(lhs + Polynomial::constant(pa, P * P) +
                               usum.scaled(P));
            } else if (s == p) {
                rels.push_back(lhs - Polynomial::constant(pa, P * P));
            } else {
                rels.push_back(lhs - u(s - p).scaled(P));
            }
        }
    FPRingPtr A = make_fp_ring(pa, rels, "A");

    PolyRingPtr pb = make_poly_ring(BaseRing::ZZ(), {"z"});
    Polynomial cyc = Polynomial::zero(pb);
    for (unsigned e = 0; e <= p - 1; ++e) cyc = cyc + var_pow(pb, 0, e);
    FPRingPtr B = make_fp_ring(pb, {cyc}, "B");

    std::vector<Polynomial> images;
    for (std::size_t i = 1; i <= n; ++i) images.push_back(var_pow(pb, 0, i).scaled(P));
    RingHom f = make_ring_hom(A, B, images);

    std::vector<RingElement> igens{RingElement(A, Polynomial::constant(pa, P))};
    for (std::size_t i = 1; i <= n; ++i) igens.push_back(RingElement(A, u(i)));
    RingIdeal I = make_ring_ideal(A, igens);

    std::vector<RingElement> gens;
    for (unsigned e = 0; e <= p - 2; ++e)
        gens.push_back(RingElement(B, var_pow(pb, 0, e)));

    ExcisionSituation E = validate_excision(f, I, gens);
    E.label = "swan(" + std::to_string(p) + ")";
    return E;
}

ExcisionSituation builtin_truncated(unsigned n) {
    if (n == 0) throw InvalidInputError("truncated builtin needs n >= 1");
    PolyRingPtr pb = make_poly_ring(BaseRing::QQ(), {"t"});
    FPRingPtr B = make_free_ring(pb, "B");

    std::vector<std::string> names;
    for (unsigned i = 0; i < n; ++i) names.push_back("u" + std::to_string(i));
    PolyRingPtr pa = make_poly_ring(BaseRing::QQ(), names);
    std::vector<Polynomial> images;
    for (unsigned i = 0; i < n; ++i) images.push_back(var_pow(pb, 0, n + i));

    // The semigroup ring on t^n .. t^{2n-1}; its relations are exactly
    // the kernel of the monomial substitution.
    FPRingPtr F = make_free_ring(pa);
    RingHom lift = make_ring_hom(F, B, images);
    FPRingPtr A = make_fp_ring(pa, hom_kernel(lift).gens, "A");
    RingHom f = make_ring_hom(A, B, images);

    std::vector<RingElement> igens;
    for (unsigned i = 0; i < n; ++i)
        igens.push_back(RingElement(A, Polynomial::variable(pa, i)));
    RingIdeal I = make_ring_ideal(A, igens);

    std::vector<RingElement> gens;
    for (unsigned e = 0; e < n; ++e) gens.push_back(RingElement(B, var_pow(pb, 0, e)));

    ExcisionSituation E = validate_excision(f, I, gens);
    E.label = "truncated(" + std::to_string(n) + ")";
    return E;
}

ExcisionSituation builtin_situation(const std::string& name) {
    if (name == "cusp") return builtin_cusp();
    if (name == "node") return builtin_node();
    auto parse_arg = [&](const std::string& head) -> std::optional<unsigned> {
        if (name.size() <= head.size() + 2) return std::nullopt;
        if (name.compare(0, head.size() + 1, head + "(") != 0) return std::nullopt;
        if (name.back() != ')') return std::nullopt;
        std::string digits = name.substr(head.size() + 1,
                                         name.size() - head.size() - 2);
        if (digits.empty()) return std::nullopt;
        for (char c : digits)
            if (c < '0' || c > '9') return std::nullopt;
        unsigned long v = std::strtoul(digits.c_str(), nullptr, 10);
        return static_cast<unsigned>(v);
    };
    if (auto p = parse_arg("swan")) return builtin_swan(*p);
    if (auto t = parse_arg("truncated")) return builtin_truncated(*t);
    throw InvalidInputError("unknown builtin '" + name +
                            "'; available: cusp, node, swan(p), truncated(n)");
}

std::vector<std::string> builtin_names() {
    return {"cusp", "node", "swan(3)", "swan(5)", "truncated(3)"};
}

}  // namespace prok
