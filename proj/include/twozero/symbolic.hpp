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

#ifndef TWOZERO_SYMBOLIC_HPP
#define TWOZERO_SYMBOLIC_HPP

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twozero/cyclotomic.hpp"

namespace twozero {

/// (-1)^((q-1)/2) for q = p^d.
int qstar_sign(std::uint32_t p, std::uint32_t d);

/// The canonical square root of q* = (-1)^((q-1)/2) q in Z[zeta_p]:
/// g_p * p^((d-1)/2) for odd d, p^(d/2) for even d.
CyclotomicInteger sqrt_qstar_image(std::uint32_t p, std::uint32_t d);

/// (a + b sqrt(q*)) p^e with q = p^d. The normal form has b = 0 when d is
/// even and e maximal (a, b not both divisible by p); zero is (0, 0, 0).
class SymbolicSumValue {
   public:
    SymbolicSumValue() = default;
    SymbolicSumValue(std::uint32_t p, std::uint32_t d, std::int64_t a, std::int64_t b = 0, std::uint32_t e = 0);

    static SymbolicSumValue rational(std::uint32_t p, std::uint32_t d, std::int64_t value) { return {p, d, value}; }
    static SymbolicSumValue sqrt_qstar(std::uint32_t p, std::uint32_t d) { return {p, d, 0, 1}; }

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t d() const noexcept { return d_; }
    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }
    std::uint32_t e() const noexcept { return e_; }

    bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }
    bool is_rational() const noexcept { return b_ == 0; }
    /// a p^e when rational.
    std::optional<std::int64_t> rational_value() const;

    SymbolicSumValue operator+(const SymbolicSumValue& rhs) const;
    SymbolicSumValue operator-(const SymbolicSumValue& rhs) const { return *this + (-rhs); }
    SymbolicSumValue operator-() const { return {p_, d_, -a_, -b_, e_}; }
    SymbolicSumValue operator*(const SymbolicSumValue& rhs) const;
    SymbolicSumValue scaled(std::int64_t factor) const { return {p_, d_, checked_scale(a_, factor), checked_scale(b_, factor), e_}; }
    SymbolicSumValue pow(unsigned n) const;

    /// Image in Z[zeta_p] under the canonical sqrt(q*).
    CyclotomicInteger image() const;
    /// Inverse of image(); nullopt if v is not in Z[sqrt(q*)].
    static std::optional<SymbolicSumValue> from_cyclotomic(const CyclotomicInteger& v, std::uint32_t d);

    std::complex<double> embed() const { return image().embed(); }
    /// e.g. "729", "-27", "27√q*", "(1 + √q*)·3^2".
    std::string to_string() const;

    friend bool operator==(const SymbolicSumValue& x, const SymbolicSumValue& y) noexcept {
        return x.p_ == y.p_ && x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_ && x.e_ == y.e_;
    }
    /// Orders by the expanded pair (a p^e, b p^e).
    friend std::strong_ordering operator<=>(const SymbolicSumValue& x, const SymbolicSumValue& y);

   private:
    static std::int64_t checked_scale(std::int64_t v, std::int64_t f);
    void normalize();

    std::uint32_t p_ = 0;
    std::uint32_t d_ = 0;
    std::int64_t a_ = 0;
    std::int64_t b_ = 0;
    std::uint32_t e_ = 0;
};

/// A multiset of symbolic values. Equal values merge on insertion.
class ValueDistribution {
   public:
    using Row = std::pair<SymbolicSumValue, std::uint64_t>;

    void add(const SymbolicSumValue& value, std::uint64_t frequency = 1);
    /// Ascending by value; zero-frequency rows omitted.
    std::vector<Row> rows() const;
    std::uint64_t total() const;
    std::uint64_t frequency(const SymbolicSumValue& value) const;
    std::size_t size() const noexcept { return rows_.size(); }

    /// Sum of frequency * value in Z[zeta_p].
    CyclotomicInteger weighted_sum(std::uint32_t p) const;
    /// The same multiset keyed by cyclotomic image, for comparison with direct censuses.
    std::map<CyclotomicInteger, std::uint64_t> image_census() const;

    bool operator==(const ValueDistribution& other) const = default;

   private:
    std::map<SymbolicSumValue, std::uint64_t> rows_;
};

}  // namespace twozero

#endif
