/*
   Copyright 2026 The twozero Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "twozero/gf.hpp"

#include <string>

#include "twozero/error.hpp"
#include "twozero/numeric.hpp"

namespace twozero {

namespace {

std::vector<std::uint32_t> digits_of(std::uint32_t code, std::uint32_t p, std::uint32_t m) {
    std::vector<std::uint32_t> d(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        d[i] = code % p;
        code /= p;
    }
    return d;
}

Polynomial poly_of(std::uint32_t code, std::uint32_t p, std::uint32_t m) { return Polynomial(p, digits_of(code, p, m)); }

Polynomial pow_mod(Polynomial base, std::uint64_t e, const Polynomial& f) {
    Polynomial r(f.characteristic(), {1});
    base = base % f;
    while (e != 0) {
        if (e & 1U) r = mul_mod(r, base, f);
        base = mul_mod(base, base, f);
        e >>= 1;
    }
    return r;
}

}  // namespace

Polynomial nth_irreducible(std::uint32_t p, std::uint32_t m, std::size_t index) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    std::size_t seen = 0;
    for (std::uint64_t low = 0; low < count; ++low) {
        std::vector<std::uint32_t> c = digits_of(static_cast<std::uint32_t>(low), p, m);
        c.push_back(1);
        Polynomial f(p, std::move(c));
        if (is_irreducible(f)) {
            if (seen == index) return f;
            ++seen;
        }
    }
    fail(ErrorKind::InternalInconsistency,
         "fewer than " + std::to_string(index + 1) + " irreducible polynomials of degree " + std::to_string(m));
}

FiniteField FiniteField::build(std::uint32_t p, std::uint32_t m, const FieldOptions& options) {
    if (p < 3 || !is_prime(p)) fail(ErrorKind::NotOddPrime, "p = " + std::to_string(p) + " is not an odd prime");
    if (m < 1) fail(ErrorKind::DegreeTooLarge, "extension degree must be at least 1");
    // Trace tables are stored one byte per entry.
    if (p > 255) fail(ErrorKind::DegreeTooLarge, "characteristic above 255 is outside the table layout");
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        size *= p;
        if (size > options.table_budget) {
            fail(ErrorKind::DegreeTooLarge, std::to_string(p) + "^" + std::to_string(m) + " exceeds the table budget of " +
                                                std::to_string(options.table_budget) + " elements");
        }
    }

    FiniteField F;
    F.p_ = p;
    F.m_ = m;
    F.size_ = static_cast<std::uint32_t>(size);
    F.n_ = F.size_ - 1;
    F.modulus_ = nth_irreducible(p, m, options.modulus_index);

    // Smallest-code element(s) of full multiplicative order.
    const std::vector<std::uint64_t> order_primes = prime_factors(F.n_);
    std::size_t seen = 0;
    std::uint32_t pi_code = 0;
    for (std::uint32_t c = 1; c < F.size_; ++c) {
        const Polynomial g = poly_of(c, p, m);
        bool primitive = true;
        for (std::uint64_t l : order_primes) {
            if (pow_mod(g, F.n_ / l, F.modulus_) == Polynomial(p, {1})) {
                primitive = false;
                break;
            }
        }
        if (primitive && seen++ == options.primitive_index) {
            pi_code = c;
            break;
        }
    }
    if (pi_code == 0) fail(ErrorKind::InternalInconsistency, "no primitive element found");
    F.primitive_ = {pi_code};

    // Multiplication by pi is F_p-linear: row j holds the digits of x^j * pi.
    std::vector<std::vector<std::uint32_t>> times_pi(m);
    for (std::uint32_t j = 0; j < m; ++j) {
        Polynomial img = mul_mod(Polynomial::monomial(p, j), poly_of(pi_code, p, m), F.modulus_);
        std::vector<std::uint32_t> row(m, 0);
        for (std::uint32_t i = 0; i < m; ++i) row[i] = img[i];
        times_pi[j] = std::move(row);
    }
    std::vector<std::uint32_t> pw(m);
    pw[0] = 1;
    for (std::uint32_t i = 1; i < m; ++i) pw[i] = pw[i - 1] * p;

    F.exp_.assign(F.n_, 0);
    F.log_.assign(F.size_, F.n_);
    std::vector<std::uint32_t> cur(m, 0), next(m);
    cur[0] = 1;
    for (std::uint32_t i = 0; i < F.n_; ++i) {
        std::uint32_t code = 0;
        for (std::uint32_t j = 0; j < m; ++j) code += cur[j] * pw[j];
        if (F.log_[code] != F.n_) fail(ErrorKind::InternalInconsistency, "primitive element has short order");
        F.exp_[i] = code;
        F.log_[code] = i;
        std::fill(next.begin(), next.end(), 0);
        for (std::uint32_t j = 0; j < m; ++j) {
            if (cur[j] == 0) continue;
            for (std::uint32_t t = 0; t < m; ++t) next[t] = (next[t] + cur[j] * times_pi[j][t]) % p;
        }
        cur.swap(next);
    }

    F.frob_exp_.resize(m);
    for (std::uint32_t l = 0; l < m; ++l) F.frob_exp_[l] = mod_pow(p, l, F.n_);

    F.zech_.assign(F.n_, F.n_);
    for (std::uint32_t j = 0; j < F.n_; ++j) {
        FieldElement s = F.add_digits(one(), {F.exp_[j]});
        F.zech_[j] = s.is_zero() ? F.n_ : F.log_[s.code];
    }

    // Tr(x^j) for the polynomial basis, then extend F_p-linearly.
    std::vector<std::uint32_t> basis_trace(m);
    for (std::uint32_t j = 0; j < m; ++j) {
        FieldElement b{pw[j]};
        FieldElement acc = zero();
        for (std::uint32_t l = 0; l < m; ++l) acc = F.add(acc, F.frobenius(b, l));
        if (acc.code >= p) fail(ErrorKind::InternalInconsistency, "trace left the prime field");
        basis_trace[j] = acc.code;
    }
    F.trace_.assign(F.size_, 0);
    for (std::uint32_t c = 0; c < F.size_; ++c) {
        std::uint32_t t = 0;
        std::uint32_t v = c;
        for (std::uint32_t j = 0; j < m; ++j) {
            t += (v % p) * basis_trace[j];
            v /= p;
        }
        F.trace_[c] = t % p;
    }
    F.trace_pow_.resize(2 * static_cast<std::size_t>(F.n_));
    for (std::size_t j = 0; j < F.trace_pow_.size(); ++j) {
        F.trace_pow_[j] = static_cast<std::uint8_t>(F.trace_[F.exp_[j % F.n_]]);
    }
    return F;
}

FieldElement FiniteField::constant(std::int64_t c) const noexcept {
    std::int64_t r = c % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
}

FieldElement FiniteField::add_digits(FieldElement a, FieldElement b) const noexcept {
    std::uint32_t x = a.code, y = b.code, out = 0, pw = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((x % p_ + y % p_) % p_) * pw;
        x /= p_;
        y /= p_;
        pw *= p_;
    }
    return {out};
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const noexcept {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::uint32_t la = log_[a.code];
    const std::uint32_t lb = log_[b.code];
    const std::uint32_t diff = lb >= la ? lb - la : lb + n_ - la;
    const std::uint32_t z = zech_[diff];
    if (z == n_) return zero();
    return {exp_[(static_cast<std::uint64_t>(la) + z) % n_]};
}

FieldElement FiniteField::neg(FieldElement a) const noexcept {
    if (a.is_zero()) return a;
    return {exp_[(static_cast<std::uint64_t>(log_[a.code]) + n_ / 2) % n_]};
}

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const noexcept {
    if (a.is_zero() || b.is_zero()) return zero();
    return {exp_[(static_cast<std::uint64_t>(log_[a.code]) + log_[b.code]) % n_]};
}

FieldElement FiniteField::inv(FieldElement a) const {
    if (a.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
    const std::uint32_t l = log_[a.code];
    return {exp_[l == 0 ? 0 : n_ - l]};
}

FieldElement FiniteField::pow(FieldElement a, std::int64_t e) const {
    if (a.is_zero()) {
        if (e < 0) fail(ErrorKind::DivisionByZero, "negative power of zero");
        return e == 0 ? one() : zero();
    }
    std::int64_t r = e % static_cast<std::int64_t>(n_);
    if (r < 0) r += n_;
    return {exp_[(static_cast<std::uint64_t>(log_[a.code]) * static_cast<std::uint64_t>(r)) % n_]};
}

std::uint32_t FiniteField::log(FieldElement a) const {
    if (a.is_zero()) fail(ErrorKind::ZeroArgument, "logarithm of zero");
    return log_[a.code];
}

FieldElement FiniteField::frobenius(FieldElement a, std::uint64_t l) const noexcept {
    if (a.is_zero()) return a;
    return {exp_[(static_cast<std::uint64_t>(log_[a.code]) * frob_exp_[l % m_]) % n_]};
}

FieldElement FiniteField::trace(FieldElement a, std::uint32_t l) const {
    if (l == 0 || m_ % l != 0) {
        fail(ErrorKind::NotADivisor, std::to_string(l) + " does not divide " + std::to_string(m_));
    }
    FieldElement acc = zero();
    for (std::uint32_t i = 0; i < m_ / l; ++i) acc = add(acc, frobenius(a, static_cast<std::uint64_t>(l) * i));
    return acc;
}

bool FiniteField::in_subfield(FieldElement a, std::uint32_t d) const {
    if (d == 0 || m_ % d != 0) {
        fail(ErrorKind::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(m_));
    }
    return frobenius(a, d) == a;
}

int FiniteField::quadratic_character(FieldElement a, std::uint32_t d) const {
    if (a.is_zero()) fail(ErrorKind::ZeroArgument, "quadratic character of zero");
    if (!in_subfield(a, d)) fail(ErrorKind::NotInSubfield, "element is not in F_{p^" + std::to_string(d) + "}");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < d; ++i) q *= p_;
    // pi^((p^m-1)/(q-1)) generates F_q^*, whose squares are its even powers.
    const std::uint64_t cofactor = n_ / (q - 1);
    return ((log_[a.code] / cofactor) % 2 == 0) ? 1 : -1;
}

Polynomial FiniteField::minimal_polynomial(FieldElement a) const {
    std::vector<FieldElement> conjugates;
    FieldElement c = a;
    do {
        conjugates.push_back(c);
        c = frobenius(c, 1);
    } while (c != a);

    // Expand prod (X - c) with coefficients in F_{p^m}, ascending.
    std::vector<FieldElement> coef{one()};
    for (FieldElement r : conjugates) {
        std::vector<FieldElement> next(coef.size() + 1, zero());
        const FieldElement minus_r = neg(r);
        for (std::size_t j = 0; j < coef.size(); ++j) {
            next[j + 1] = add(next[j + 1], coef[j]);
            next[j] = add(next[j], mul(coef[j], minus_r));
        }
        coef.swap(next);
    }
    std::vector<std::uint32_t> out(coef.size());
    for (std::size_t j = 0; j < coef.size(); ++j) {
        if (coef[j].code >= p_) fail(ErrorKind::InternalInconsistency, "minimal polynomial left F_p");
        out[j] = coef[j].code;
    }
    return Polynomial(p_, std::move(out));
}

FieldElement FiniteField::evaluate(const Polynomial& f, FieldElement a) const {
    FieldElement acc = zero();
    const auto& c = f.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) acc = add(mul(acc, a), constant(c[i]));
    return acc;
}

Polynomial FiniteField::to_polynomial(FieldElement a) const { return poly_of(a.code, p_, m_); }

}  // namespace twozero
