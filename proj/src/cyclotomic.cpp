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

#include "twozero/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "twozero/error.hpp"
#include "twozero/numeric.hpp"

namespace twozero {

namespace {

// Reduce a length-p vector (taken mod x^p - 1) to the canonical basis using
// 1 + zeta + ... + zeta^(p-1) = 0.
std::vector<std::int64_t> reduce(const std::vector<std::int64_t>& full) {
    const std::size_t p = full.size();
    std::vector<std::int64_t> out(p - 1);
    for (std::size_t j = 0; j + 1 < p; ++j) out[j] = checked_add(full[j], -full[p - 1]);
    return out;
}

void require_same_ring(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    if (a.p() != b.p()) fail(ErrorKind::InternalInconsistency, "mixing different cyclotomic rings");
}

}  // namespace

CyclotomicInteger CyclotomicInteger::rational(std::uint32_t p, std::int64_t value) {
    CyclotomicInteger z(p);
    z.c_[0] = value;
    return z;
}

CyclotomicInteger CyclotomicInteger::zeta_power(std::uint32_t p, std::uint64_t j) {
    std::vector<std::int64_t> full(p, 0);
    full[j % p] = 1;
    CyclotomicInteger z(p);
    z.c_ = reduce(full);
    return z;
}

CyclotomicInteger CyclotomicInteger::from_counts(std::uint32_t p, std::span<const std::int64_t> counts) {
    if (counts.size() != p) fail(ErrorKind::InternalInconsistency, "count vector length must equal p");
    CyclotomicInteger z(p);
    z.c_ = reduce(std::vector<std::int64_t>(counts.begin(), counts.end()));
    return z;
}

bool CyclotomicInteger::is_zero() const noexcept {
    for (auto c : c_) {
        if (c != 0) return false;
    }
    return true;
}

bool CyclotomicInteger::is_rational() const noexcept {
    for (std::size_t j = 1; j < c_.size(); ++j) {
        if (c_[j] != 0) return false;
    }
    return true;
}

std::optional<std::int64_t> CyclotomicInteger::rational_value() const noexcept {
    if (!is_rational() || c_.empty()) return std::nullopt;
    return c_[0];
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& rhs) {
    require_same_ring(*this, rhs);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] = checked_add(c_[j], rhs.c_[j]);
    return *this;
}

CyclotomicInteger& CyclotomicInteger::operator-=(const CyclotomicInteger& rhs) {
    require_same_ring(*this, rhs);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] = checked_add(c_[j], checked_mul(-1, rhs.c_[j]));
    return *this;
}

CyclotomicInteger CyclotomicInteger::operator+(const CyclotomicInteger& rhs) const {
    CyclotomicInteger out(*this);
    out += rhs;
    return out;
}

CyclotomicInteger CyclotomicInteger::operator-(const CyclotomicInteger& rhs) const {
    CyclotomicInteger out(*this);
    out -= rhs;
    return out;
}

CyclotomicInteger CyclotomicInteger::operator-() const { return scaled(-1); }

CyclotomicInteger CyclotomicInteger::operator*(const CyclotomicInteger& rhs) const {
    require_same_ring(*this, rhs);
    const std::size_t p = p_;
    std::vector<std::int64_t> full(p, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
            if (rhs.c_[j] == 0) continue;
            std::size_t k = (i + j) % p;
            full[k] = checked_add(full[k], checked_mul(c_[i], rhs.c_[j]));
        }
    }
    CyclotomicInteger out(p_);
    out.c_ = reduce(full);
    return out;
}

CyclotomicInteger CyclotomicInteger::scaled(std::int64_t factor) const {
    CyclotomicInteger out(*this);
    for (auto& c : out.c_) c = checked_mul(c, factor);
    return out;
}

CyclotomicInteger CyclotomicInteger::pow(unsigned e) const {
    CyclotomicInteger r = rational(p_, 1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

CyclotomicInteger CyclotomicInteger::conjugate() const {
    std::vector<std::int64_t> full(p_, 0);
    for (std::size_t j = 0; j < c_.size(); ++j) full[(p_ - j) % p_] = c_[j];
    CyclotomicInteger out(p_);
    out.c_ = reduce(full);
    return out;
}

std::complex<double> CyclotomicInteger::embed() const {
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(p_);
        acc += static_cast<double>(c_[j]) * std::polar(1.0, angle);
    }
    return acc;
}

std::string CyclotomicInteger::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        std::int64_t c = c_[j];
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            c = c < 0 ? -c : c;
        }
        first = false;
        if (j == 0) {
            os << c;
        } else {
            if (c == -1) os << '-';
            else if (c != 1) os << c << '*';
            os << "z";
            if (j > 1) os << '^' << j;
        }
    }
    return first ? "0" : os.str();
}

CyclotomicInteger gauss_sum(std::uint32_t p) {
    std::vector<std::int64_t> counts(p, 0);
    for (std::uint64_t x = 0; x < p; ++x) ++counts[x * x % p];
    return CyclotomicInteger::from_counts(p, counts);
}

}  // namespace twozero
