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

#ifndef TWOZERO_CYCLOTOMIC_HPP
#define TWOZERO_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace twozero {

/// Exact element of Z[zeta_p], stored in the basis 1, zeta, ..., zeta^(p-2).
/// All arithmetic is checked int64 arithmetic; overflow throws.
class CyclotomicInteger {
   public:
    CyclotomicInteger() = default;
    explicit CyclotomicInteger(std::uint32_t p) : p_(p), c_(p - 1, 0) {}

    static CyclotomicInteger rational(std::uint32_t p, std::int64_t value);
    static CyclotomicInteger zeta_power(std::uint32_t p, std::uint64_t j);
    /// sum over t of counts[t] * zeta^t, with counts.size() == p.
    static CyclotomicInteger from_counts(std::uint32_t p, std::span<const std::int64_t> counts);

    std::uint32_t p() const noexcept { return p_; }
    const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }

    bool is_zero() const noexcept;
    bool is_rational() const noexcept;
    std::optional<std::int64_t> rational_value() const noexcept;

    CyclotomicInteger& operator+=(const CyclotomicInteger& rhs);
    CyclotomicInteger& operator-=(const CyclotomicInteger& rhs);
    CyclotomicInteger operator+(const CyclotomicInteger& rhs) const;
    CyclotomicInteger operator-(const CyclotomicInteger& rhs) const;
    CyclotomicInteger operator-() const;
    CyclotomicInteger operator*(const CyclotomicInteger& rhs) const;
    CyclotomicInteger scaled(std::int64_t factor) const;
    CyclotomicInteger pow(unsigned e) const;

    /// Image under zeta -> zeta^(-1) (complex conjugation).
    CyclotomicInteger conjugate() const;

    /// Numeric value under zeta = exp(2 pi i / p). Display only.
    std::complex<double> embed() const;
    std::string to_string() const;

    friend bool operator==(const CyclotomicInteger&, const CyclotomicInteger&) = default;
    friend auto operator<=>(const CyclotomicInteger& a, const CyclotomicInteger& b) {
        if (auto c = a.p_ <=> b.p_; c != 0) return c;
        return a.c_ <=> b.c_;
    }

   private:
    std::uint32_t p_ = 0;
    std::vector<std::int64_t> c_;
};

/// g_p = sum over x in F_p of zeta^(x^2); g_p^2 = (-1)^((p-1)/2) p.
CyclotomicInteger gauss_sum(std::uint32_t p);

}  // namespace twozero

#endif
