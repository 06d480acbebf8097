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
#include "prok/base_ring.hpp"

#include "prok/errors.hpp"

namespace prok {

BaseRing BaseRing::Fp(const mpz_class& p) {
    if (p <= 1 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw InvalidInputError("Fp modulus must be prime, got " + p.get_str());
    return BaseRing{Kind::Fp, p};
}

std::string BaseRing::name() const {
    switch (kind) {
        case Kind::ZZ: return "ZZ";
        case Kind::QQ: return "QQ";
        case Kind::Fp: return "FF(" + p.get_str() + ")";
    }
    return "?";
}

void BaseRing::normalize(mpq_class& c) const {
    c.canonicalize();
    if (kind == Kind::QQ) return;
    if (c.get_den() != 1) {
        if (kind == Kind::ZZ)
            throw InvalidInputError("coefficient " + coeff_to_string(c) +
                                    " is not an integer");
        // Fp: clear the denominator by modular inversion.
        mpz_class den = c.get_den(), inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw InvalidInputError("denominator " + den.get_str() +
                                    " not invertible mod " + p.get_str());
        c = mpq_class(c.get_num() * inv);
        c.canonicalize();
    }
    if (kind == Kind::Fp) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), c.get_num().get_mpz_t(), p.get_mpz_t());
        c = mpq_class(r);
    }
}

mpq_class BaseRing::add(const mpq_class& a, const mpq_class& b) const {
    mpq_class r = a + b;
    normalize(r);
    return r;
}

mpq_class BaseRing::sub(const mpq_class& a, const mpq_class& b) const {
    mpq_class r = a - b;
    normalize(r);
    return r;
}

mpq_class BaseRing::mul(const mpq_class& a, const mpq_class& b) const {
    mpq_class r = a * b;
    normalize(r);
    return r;
}

mpq_class BaseRing::neg(const mpq_class& a) const {
    mpq_class r = -a;
    normalize(r);
    return r;
}

mpq_class BaseRing::inv(const mpq_class& a) const {
    if (a == 0) throw InvalidInputError("division by zero coefficient");
    if (!is_field())
        throw InvalidInputError("coefficient inversion requires a field");
    mpq_class r = 1 / mpq_class(a);
    normalize(r);
    return r;
}

mpq_class BaseRing::div_exact(const mpq_class& a, const mpq_class& b) const {
    if (b == 0) throw InvalidInputError("division by zero coefficient");
    if (is_field()) return mul(a, inv(b));
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_num().get_mpz_t(),
                b.get_num().get_mpz_t());
    if (r != 0)
        throw InvalidInputError("inexact integer division: " +
                                coeff_to_string(a) + " / " + coeff_to_string(b));
    return mpq_class(q);
}

bool BaseRing::divides(const mpq_class& b, const mpq_class& a) const {
    if (b == 0) return a == 0;
    if (is_field()) return true;
    return mpz_divisible_p(a.get_num().get_mpz_t(), b.get_num().get_mpz_t()) != 0;
}

std::string coeff_to_string(const mpq_class& c) {
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace prok
