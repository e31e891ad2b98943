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

#include "twozero/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "twozero/error.hpp"
#include "twozero/numeric.hpp"

namespace twozero {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in F_p");
    return static_cast<std::uint32_t>(mod_pow(a, p - 2, p));
}

}  // namespace

Polynomial::Polynomial(std::uint32_t p, std::vector<std::uint32_t> coefficients) : p_(p), c_(std::move(coefficients)) {
    for (auto& c : c_) c %= p_;
    trim();
}

Polynomial Polynomial::monomial(std::uint32_t p, std::size_t degree, std::uint32_t coefficient) {
    std::vector<std::uint32_t> c(degree + 1, 0);
    c[degree] = coefficient;
    return Polynomial(p, std::move(c));
}

Polynomial Polynomial::x_pow_minus_one(std::uint32_t p, std::size_t n) {
    std::vector<std::uint32_t> c(n + 1, 0);
    c[n] = 1;
    c[0] = p - 1;
    return Polynomial(p, std::move(c));
}

void Polynomial::trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::uint32_t p = p_ ? p_ : rhs.p_;
    std::vector<std::uint32_t> out(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ((*this)[i] + rhs[i]) % p;
    return Polynomial(p, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    std::uint32_t p = p_ ? p_ : rhs.p_;
    std::vector<std::uint32_t> out(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ((*this)[i] + p - rhs[i]) % p;
    return Polynomial(p, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    std::uint32_t p = p_ ? p_ : rhs.p_;
    if (is_zero() || rhs.is_zero()) return Polynomial(p, {});
    std::vector<std::uint64_t> acc(c_.size() + rhs.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
            acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(c_[i]) * rhs.c_[j]) % p;
        }
    }
    return Polynomial(p, std::vector<std::uint32_t>(acc.begin(), acc.end()));
}

Polynomial Polynomial::scaled(std::uint32_t factor) const {
    std::vector<std::uint32_t> out(c_);
    for (auto& c : out) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * factor % p_);
    return Polynomial(p_, std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    const std::uint32_t p = divisor.p_;
    std::vector<std::uint32_t> rem(c_);
    const std::size_t dd = divisor.c_.size() - 1;
    if (rem.size() <= dd) return {Polynomial(p, {}), Polynomial(p, std::move(rem))};
    std::vector<std::uint32_t> quo(rem.size() - dd, 0);
    const std::uint64_t lead_inv = inv_mod(divisor.c_.back(), p);
    for (std::size_t i = rem.size(); i-- > dd;) {
        std::uint64_t coef = rem[i] * lead_inv % p;
        if (coef == 0) continue;
        quo[i - dd] = static_cast<std::uint32_t>(coef);
        for (std::size_t j = 0; j <= dd; ++j) {
            std::uint64_t sub = coef * divisor.c_[j] % p;
            rem[i - dd + j] = static_cast<std::uint32_t>((rem[i - dd + j] + p - sub) % p);
        }
    }
    rem.resize(dd);
    return {Polynomial(p, std::move(quo)), Polynomial(p, std::move(rem))};
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(inv_mod(c_.back(), p_));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::uint64_t Polynomial::packed() const noexcept {
    std::uint64_t v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * p_ + c_[i];
    return v;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (c_[i] != 1 || i == 0) os << c_[i];
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

Polynomial mul_mod(const Polynomial& a, const Polynomial& b, const Polynomial& f) { return (a * b) % f; }

namespace {

// x^(p^times) mod f, by repeated p-th powering
Polynomial frobenius_power_of_x(const Polynomial& f, std::size_t times) {
    const std::uint32_t p = f.characteristic();
    Polynomial h = Polynomial::monomial(p, 1) % f;
    for (std::size_t t = 0; t < times; ++t) {
        Polynomial base = h;
        Polynomial r(p, {1});
        std::uint64_t e = p;
        while (e != 0) {
            if (e & 1U) r = mul_mod(r, base, f);
            base = mul_mod(base, base, f);
            e >>= 1;
        }
        h = r;
    }
    return h;
}

}  // namespace

bool is_irreducible(const Polynomial& f) {
    const long m = f.degree();
    if (m <= 0) return false;
    if (m == 1) return true;
    const std::uint32_t p = f.characteristic();
    const Polynomial x = Polynomial::monomial(p, 1);
    if (frobenius_power_of_x(f, static_cast<std::size_t>(m)) != x % f) return false;
    for (std::uint64_t l : prime_factors(static_cast<std::uint64_t>(m))) {
        Polynomial h = frobenius_power_of_x(f, static_cast<std::size_t>(m / static_cast<long>(l)));
        if (Polynomial::gcd(h - x, f).degree() != 0) return false;
    }
    return true;
}

}  // namespace twozero
