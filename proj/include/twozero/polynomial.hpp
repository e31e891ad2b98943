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

#ifndef TWOZERO_POLYNOMIAL_HPP
#define TWOZERO_POLYNOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace twozero {

/// Polynomial over the prime field F_p. Coefficients are stored in ascending
/// degree order with no trailing zeros, so the zero polynomial is empty.
class Polynomial {
   public:
    Polynomial() = default;
    Polynomial(std::uint32_t p, std::vector<std::uint32_t> coefficients);
    Polynomial(std::uint32_t p, std::initializer_list<std::uint32_t> coefficients)
        : Polynomial(p, std::vector<std::uint32_t>(coefficients)) {}

    static Polynomial monomial(std::uint32_t p, std::size_t degree, std::uint32_t coefficient = 1);
    /// x^n - 1
    static Polynomial x_pow_minus_one(std::uint32_t p, std::size_t n);

    std::uint32_t characteristic() const noexcept { return p_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    const std::vector<std::uint32_t>& coefficients() const noexcept { return c_; }
    std::uint32_t operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial scaled(std::uint32_t factor) const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    Polynomial operator%(const Polynomial& divisor) const { return divmod(divisor).second; }

    /// Monic gcd (zero if both are zero).
    static Polynomial gcd(Polynomial a, Polynomial b);
    Polynomial monic() const;

    /// Base-p integer packing c0 + c1 p + c2 p^2 + ... used to order candidates.
    std::uint64_t packed() const noexcept;

    /// Human-readable form, highest degree first, e.g. "x^2 + 2x + 1".
    std::string to_string() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

   private:
    void trim() noexcept;

    std::uint32_t p_ = 0;
    std::vector<std::uint32_t> c_;
};

/// a*b mod f for polynomials over F_p.
Polynomial mul_mod(const Polynomial& a, const Polynomial& b, const Polynomial& f);

/// True iff monic f is irreducible over F_p (Rabin's test).
bool is_irreducible(const Polynomial& f);

}  // namespace twozero

#endif
