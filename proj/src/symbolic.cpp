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

#include "twozero/symbolic.hpp"

#include <sstream>

#include "twozero/error.hpp"
#include "twozero/numeric.hpp"

namespace twozero {

namespace {

i128 ipow128(std::uint32_t p, std::uint32_t e) {
    i128 r = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        r *= p;
        if (r > (i128{1} << 120)) fail(ErrorKind::Overflow, "power of p too large");
    }
    return r;
}

void require_same_context(const SymbolicSumValue& x, const SymbolicSumValue& y) {
    if (x.p() != y.p() || x.d() != y.d()) fail(ErrorKind::InternalInconsistency, "mixing symbolic values of different q");
}

}  // namespace

int qstar_sign(std::uint32_t p, std::uint32_t d) { return mod_pow(p, d, 4) == 1 ? 1 : -1; }

CyclotomicInteger sqrt_qstar_image(std::uint32_t p, std::uint32_t d) {
    if (d % 2 == 0) return CyclotomicInteger::rational(p, ipow(p, d / 2));
    return gauss_sum(p).scaled(ipow(p, (d - 1) / 2));
}

SymbolicSumValue::SymbolicSumValue(std::uint32_t p, std::uint32_t d, std::int64_t a, std::int64_t b, std::uint32_t e)
    : p_(p), d_(d), a_(a), b_(b), e_(e) {
    normalize();
}

std::int64_t SymbolicSumValue::checked_scale(std::int64_t v, std::int64_t f) { return checked_mul(v, f); }

void SymbolicSumValue::normalize() {
    if (d_ % 2 == 0 && b_ != 0) {
        a_ = checked_add(a_, checked_mul(b_, ipow(p_, d_ / 2)));
        b_ = 0;
    }
    if (a_ == 0 && b_ == 0) {
        e_ = 0;
        return;
    }
    const std::int64_t p = p_;
    while (a_ % p == 0 && b_ % p == 0) {
        a_ /= p;
        b_ /= p;
        ++e_;
    }
}

std::optional<std::int64_t> SymbolicSumValue::rational_value() const {
    if (b_ != 0) return std::nullopt;
    return narrow(i128{a_} * ipow128(p_, e_));
}

SymbolicSumValue SymbolicSumValue::operator+(const SymbolicSumValue& rhs) const {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    require_same_context(*this, rhs);
    const std::uint32_t e = std::min(e_, rhs.e_);
    const i128 s1 = ipow128(p_, e_ - e), s2 = ipow128(p_, rhs.e_ - e);
    return {p_, d_, narrow(a_ * s1 + rhs.a_ * s2), narrow(b_ * s1 + rhs.b_ * s2), e};
}

SymbolicSumValue SymbolicSumValue::operator*(const SymbolicSumValue& rhs) const {
    if (is_zero()) return *this;
    if (rhs.is_zero()) return rhs;
    require_same_context(*this, rhs);
    const i128 qstar = ipow128(p_, d_) * qstar_sign(p_, d_);
    const i128 a = i128{a_} * rhs.a_ + i128{b_} * rhs.b_ * qstar;
    const i128 b = i128{a_} * rhs.b_ + i128{b_} * rhs.a_;
    return {p_, d_, narrow(a), narrow(b), e_ + rhs.e_};
}

SymbolicSumValue SymbolicSumValue::pow(unsigned n) const {
    SymbolicSumValue r(p_, d_, 1);
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
}

CyclotomicInteger SymbolicSumValue::image() const {
    const std::int64_t scale = narrow(ipow128(p_, e_));
    CyclotomicInteger out = CyclotomicInteger::rational(p_, checked_mul(a_, scale));
    if (b_ != 0) out += sqrt_qstar_image(p_, d_).scaled(checked_mul(b_, scale));
    return out;
}

std::optional<SymbolicSumValue> SymbolicSumValue::from_cyclotomic(const CyclotomicInteger& v, std::uint32_t d) {
    const std::uint32_t p = v.p();
    if (d % 2 == 0) {
        if (auto r = v.rational_value()) return SymbolicSumValue(p, d, *r);
        return std::nullopt;
    }
    const CyclotomicInteger root = sqrt_qstar_image(p, d);
    const auto& rc = root.coefficients();
    std::size_t j = 1;
    while (j < rc.size() && rc[j] == 0) ++j;
    if (j == rc.size()) fail(ErrorKind::InternalInconsistency, "sqrt(q*) image is rational for odd d");
    if (v.coefficients()[j] % rc[j] != 0) return std::nullopt;
    const std::int64_t b = v.coefficients()[j] / rc[j];
    const CyclotomicInteger rest = v - root.scaled(b);
    if (auto a = rest.rational_value()) return SymbolicSumValue(p, d, *a, b);
    return std::nullopt;
}

std::string SymbolicSumValue::to_string() const {
    if (is_zero()) return "0";
    if (b_ == 0) return twozero::to_string(i128{a_} * ipow128(p_, e_));
    std::ostringstream os;
    auto power = [&] {
        if (e_ == 1) os << "·" << p_;
        else if (e_ > 1) os << "·" << p_ << '^' << e_;
    };
    if (a_ == 0) {
        const i128 coeff = i128{b_} * ipow128(p_, e_);
        if (coeff == -1) os << '-';
        else if (coeff != 1) os << twozero::to_string(coeff);
        os << "√q*";
        return os.str();
    }
    const bool wrap = e_ > 0;
    if (wrap) os << '(';
    os << a_ << (b_ < 0 ? " - " : " + ");
    const std::int64_t mag = b_ < 0 ? -b_ : b_;
    if (mag != 1) os << mag;
    os << "√q*";
    if (wrap) os << ')';
    power();
    return os.str();
}

std::strong_ordering operator<=>(const SymbolicSumValue& x, const SymbolicSumValue& y) {
    const i128 xa = i128{x.a_} * ipow128(x.p_, x.e_), ya = i128{y.a_} * ipow128(y.p_, y.e_);
    if (xa != ya) return xa < ya ? std::strong_ordering::less : std::strong_ordering::greater;
    const i128 xb = i128{x.b_} * ipow128(x.p_, x.e_), yb = i128{y.b_} * ipow128(y.p_, y.e_);
    if (xb != yb) return xb < yb ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = x.p_ <=> y.p_; c != 0) return c;
    return x.d_ <=> y.d_;
}

void ValueDistribution::add(const SymbolicSumValue& value, std::uint64_t frequency) {
    if (frequency != 0) rows_[value] += frequency;
}

std::vector<ValueDistribution::Row> ValueDistribution::rows() const { return {rows_.begin(), rows_.end()}; }

std::uint64_t ValueDistribution::total() const {
    std::uint64_t t = 0;
    for (const auto& [v, f] : rows_) t += f;
    return t;
}

std::uint64_t ValueDistribution::frequency(const SymbolicSumValue& value) const {
    auto it = rows_.find(value);
    return it == rows_.end() ? 0 : it->second;
}

CyclotomicInteger ValueDistribution::weighted_sum(std::uint32_t p) const {
    CyclotomicInteger acc(p);
    for (const auto& [v, f] : rows_) acc += v.image().scaled(static_cast<std::int64_t>(f));
    return acc;
}

std::map<CyclotomicInteger, std::uint64_t> ValueDistribution::image_census() const {
    std::map<CyclotomicInteger, std::uint64_t> out;
    for (const auto& [v, f] : rows_) out[v.image()] += f;
    return out;
}

}  // namespace twozero
