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
#include "prok/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "prok/errors.hpp"

namespace prok {

std::optional<std::size_t> PolyRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return i;
    return std::nullopt;
}

std::string PolyRing::to_string() const {
    std::string s = base.name() + "[";
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) s += ",";
        s += vars[i];
    }
    return s + "]";
}

PolyRingPtr make_poly_ring(BaseRing base, std::vector<std::string> vars) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw InvalidInputError("duplicate variable name " + vars[i]);
    auto r = std::make_shared<PolyRing>();
    r->base = std::move(base);
    r->vars = std::move(vars);
    return r;
}

Polynomial::Polynomial(PolyRingPtr ring, std::map<Monomial, mpq_class> terms)
    : ring_(std::move(ring)) {
    for (auto& [m, c] : terms) {
        if (m.size() != ring_->nvars())
            throw RingMismatchError("exponent vector length mismatch");
        mpq_class cc = c;
        ring_->base.normalize(cc);
        if (cc != 0) terms_.emplace(m, std::move(cc));
    }
}

Polynomial Polynomial::constant(PolyRingPtr ring, const mpq_class& c) {
    Polynomial p(ring);
    p.insert_term(Monomial(ring->nvars(), 0), c);
    return p;
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t index) {
    if (index >= ring->nvars())
        throw RingMismatchError("variable index out of range");
    Monomial m(ring->nvars(), 0);
    m[index] = 1;
    Polynomial p(ring);
    p.insert_term(m, 1);
    return p;
}

Polynomial Polynomial::term(PolyRingPtr ring, Monomial m, const mpq_class& c) {
    if (m.size() != ring->nvars())
        throw RingMismatchError("exponent vector length mismatch");
    Polynomial p(ring);
    p.insert_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

std::uint64_t Polynomial::degree() const {
    std::uint64_t d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

void Polynomial::insert_term(const Monomial& m, const mpq_class& c) {
    mpq_class cc = c;
    ring_->base.normalize(cc);
    if (cc == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, std::move(cc));
    } else {
        mpq_class s = ring_->base.add(it->second, cc);
        if (s == 0)
            terms_.erase(it);
        else
            it->second = std::move(s);
    }
}

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (!ring_ || !o.ring_ || !(*ring_ == *o.ring_))
        throw RingMismatchError("polynomials from different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial r = *this;
    for (auto& [m, c] : o.terms_) r.insert_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial r = *this;
    for (auto& [m, c] : o.terms_) r.insert_term(m, ring_->base.neg(c));
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, ring_->base.neg(c));
    return r;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
    Polynomial r(ring_);
    for (auto& [m, k] : terms_) r.insert_term(m, k * c);
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const mpq_class& c) const {
    Polynomial r(ring_);
    for (auto& [mm, k] : terms_) r.insert_term(mono_mul(mm, m), k * c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial r(ring_);
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) r.insert_term(mono_mul(m1, m2), c1 * c2);
    return r;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
    Polynomial r = Polynomial::constant(ring_, 1);
    Polynomial b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    check_same_ring(o);
    return terms_ == o.terms_;
}

std::pair<Monomial, mpq_class> Polynomial::leading_term(
    const MonomialOrder& ord) const {
    if (terms_.empty()) throw InvalidInputError("leading term of zero");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.compare(it->first, best->first) > 0) best = it;
    return {best->first, best->second};
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= ring_->nvars())
        throw RingMismatchError("variable index out of range");
    Polynomial r(ring_);
    for (auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial mm = m;
        mpq_class k = c * mpq_class(static_cast<unsigned long>(m[var]));
        mm[var] -= 1;
        r.insert_term(mm, k);
    }
    return r;
}

Polynomial Polynomial::substitute(const PolyRingPtr& target,
                                  const std::vector<Polynomial>& images) const {
    if (images.size() != ring_->nvars())
        throw RingMismatchError("substitute: image count mismatch");
    Polynomial acc = Polynomial::zero(target);
    for (auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) t = t * images[i].pow(m[i]);
        acc = acc + t;
    }
    return acc;
}

Polynomial Polynomial::transport(const PolyRingPtr& target) const {
    if (!(ring_->base == target->base))
        throw RingMismatchError("transport across different base rings");
    // Only variables that actually occur need a slot in the target.
    constexpr std::size_t kMissing = static_cast<std::size_t>(-1);
    std::vector<std::size_t> where(ring_->nvars(), kMissing);
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        auto idx = target->var_index(ring_->vars[i]);
        if (idx) where[i] = *idx;
    }
    Polynomial r(target);
    for (auto& [m, c] : terms_) {
        Monomial mm(target->nvars(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (where[i] == kMissing)
                throw RingMismatchError("transport: variable " +
                                        ring_->vars[i] +
                                        " missing in target ring");
            mm[where[i]] = m[i];
        }
        r.insert_term(mm, c);
    }
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    // Canonical print order: descending degrevlex.
    MonomialOrder ord = MonomialOrder::degrevlex();
    std::vector<const std::pair<const Monomial, mpq_class>*> ts;
    ts.reserve(terms_.size());
    for (auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
        return ord.compare(a->first, b->first) > 0;
    });

    std::ostringstream out;
    bool first = true;
    for (auto* t : ts) {
        const Monomial& m = t->first;
        mpq_class c = t->second;
        bool negative = c < 0;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        if (negative) c = -c;
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->vars[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            out << coeff_to_string(c);
        } else if (c == 1) {
            out << mono;
        } else {
            out << coeff_to_string(c) << "*" << mono;
        }
    }
    return out.str();
}

namespace {

// Minimal recursive-descent parser for polynomial expressions.
struct PolyParser {
    const PolyRingPtr& ring;
    const std::string& s;
    std::size_t pos = 0;
    int line = 1, col = 1;

    PolyParser(const PolyRingPtr& r, const std::string& text)
        : ring(r), s(text) {}

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, line, col);
    }

    void advance() {
        if (s[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            advance();
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            advance();
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    mpz_class parse_integer() {
        skip_ws();
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            digits += s[pos];
            advance();
        }
        if (digits.empty()) fail("expected integer");
        return mpz_class(digits);
    }

    std::uint64_t parse_exponent() {
        mpz_class e = parse_integer();
        if (e < 0 || e > 100000) fail("exponent out of range");
        return e.get_ui();
    }

    Polynomial parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of polynomial");
        char c = s[pos];
        if (c == '(') {
            advance();
            Polynomial p = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = parse_integer();
            if (peek() == '/') {
                advance();
                mpz_class den = parse_integer();
                if (den == 0) fail("zero denominator");
                return Polynomial::constant(ring, mpq_class(num, den));
            }
            return Polynomial::constant(ring, mpq_class(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                    s[pos] == '_')) {
                name += s[pos];
                advance();
            }
            auto idx = ring->var_index(name);
            if (!idx) fail("unknown variable " + name);
            return Polynomial::variable(ring, *idx);
        }
        fail(std::string("unexpected character '") + c + "' in polynomial");
    }

    Polynomial parse_power() {
        Polynomial base = parse_atom();
        if (peek() == '^') {
            advance();
            return base.pow(parse_exponent());
        }
        return base;
    }

    Polynomial parse_product() {
        Polynomial p = parse_power();
        while (true) {
            char c = peek();
            if (c == '*') {
                advance();
                p = p * parse_power();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                       c == '(') {
                // implicit multiplication: "2x", "x(y+1)"
                p = p * parse_power();
            } else {
                break;
            }
        }
        return p;
    }

    Polynomial parse_sum() {
        bool neg = false;
        if (peek() == '+') {
            advance();
        } else if (peek() == '-') {
            advance();
            neg = true;
        }
        Polynomial p = parse_product();
        if (neg) p = -p;
        while (true) {
            char c = peek();
            if (c == '+') {
                advance();
                p = p + parse_product();
            } else if (c == '-') {
                advance();
                p = p - parse_product();
            } else {
                break;
            }
        }
        return p;
    }
};

}  // namespace

Polynomial parse_polynomial(const PolyRingPtr& ring, const std::string& text) {
    PolyParser p(ring, text);
    Polynomial poly = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing characters in polynomial");
    return poly;
}

}  // namespace prok
