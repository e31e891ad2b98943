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

#ifndef TWOZERO_GF_HPP
#define TWOZERO_GF_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "twozero/polynomial.hpp"

namespace twozero {

/// An element of F_{p^m}, packed as c0 + c1 p + ... + c_{m-1} p^{m-1} where
/// c0 + c1 x + ... is its residue modulo the field's defining polynomial.
/// Code 0 is zero and code 1 is one; codes below p are the prime subfield.
struct FieldElement {
    std::uint32_t code = 0;

    constexpr bool is_zero() const noexcept { return code == 0; }
    friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

struct FieldOptions {
    /// Use the i-th smallest monic irreducible of degree m (0 = smallest).
    std::size_t modulus_index = 0;
    /// Use the i-th primitive element in code order (0 = smallest code).
    std::size_t primitive_index = 0;
    /// Largest field size for which tables are built.
    std::uint64_t table_budget = std::uint64_t{1} << 24;
};

/// The finite field F_{p^m} with a fixed modulus and primitive element pi,
/// backed by exp/log/Zech/trace tables. Immutable after build(), so one
/// instance can be shared read-only by any number of worker threads.
class FiniteField {
   public:
    static FiniteField build(std::uint32_t p, std::uint32_t m, const FieldOptions& options = {});

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t m() const noexcept { return m_; }
    /// p^m
    std::uint32_t size() const noexcept { return size_; }
    /// p^m - 1, the order of pi.
    std::uint32_t unit_order() const noexcept { return n_; }
    const Polynomial& modulus() const noexcept { return modulus_; }
    FieldElement primitive() const noexcept { return primitive_; }

    static constexpr FieldElement zero() noexcept { return {0}; }
    static constexpr FieldElement one() noexcept { return {1}; }
    /// The prime-field element c mod p.
    FieldElement constant(std::int64_t c) const noexcept;

    FieldElement add(FieldElement a, FieldElement b) const noexcept;
    FieldElement sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }
    FieldElement neg(FieldElement a) const noexcept;
    FieldElement mul(FieldElement a, FieldElement b) const noexcept;
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
    /// a^e; negative exponents require a != 0.
    FieldElement pow(FieldElement a, std::int64_t e) const;
    /// Coefficient-wise addition, independent of the Zech table.
    FieldElement add_digits(FieldElement a, FieldElement b) const noexcept;

    /// Discrete log base pi, in [0, p^m - 1). Throws ZeroArgument for 0.
    std::uint32_t log(FieldElement a) const;
    /// pi^i for any i (reduced mod p^m - 1).
    FieldElement exp(std::uint64_t i) const noexcept { return {exp_[i % n_]}; }
    /// a^(p^l), l taken mod m.
    FieldElement frobenius(FieldElement a, std::uint64_t l) const noexcept;

    /// Tr_1^m(a) as an integer in [0, p).
    std::uint32_t trace(FieldElement a) const noexcept { return trace_[a.code]; }
    /// Tr_l^m(a), an element of the subfield F_{p^l}. Throws NotADivisor unless l | m.
    FieldElement trace(FieldElement a, std::uint32_t l) const;
    /// Tr_1^m(pi^j).
    std::uint32_t trace_of_power(std::uint64_t j) const noexcept { return trace_pow_[j % n_]; }

    bool in_subfield(FieldElement a, std::uint32_t d) const;
    /// Quadratic character of the subfield F_{p^d} evaluated at a nonzero a in it.
    int quadratic_character(FieldElement a, std::uint32_t d) const;

    /// Monic minimal polynomial of a over F_p.
    Polynomial minimal_polynomial(FieldElement a) const;
    FieldElement evaluate(const Polynomial& f, FieldElement a) const;
    Polynomial to_polynomial(FieldElement a) const;

    /// Raw tables for enumeration kernels. trace_pow_doubled has length
    /// 2(p^m - 1) so that an index sum of two logs needs no reduction.
    std::span<const std::uint32_t> exp_table() const noexcept { return exp_; }
    std::span<const std::uint32_t> log_table() const noexcept { return log_; }
    std::span<const std::uint8_t> trace_pow_doubled() const noexcept { return trace_pow_; }

    bool operator==(const FiniteField& other) const = default;

   private:
    FiniteField() = default;

    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint32_t size_ = 0;
    std::uint32_t n_ = 0;
    Polynomial modulus_;
    FieldElement primitive_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;   // log_[0] is unused
    std::vector<std::uint32_t> zech_;  // log(1 + pi^j), or n_ when 1 + pi^j = 0
    std::vector<std::uint32_t> trace_;
    std::vector<std::uint8_t> trace_pow_;
    std::vector<std::uint64_t> frob_exp_;  // p^l mod n, l < m
};

/// The i-th smallest monic irreducible polynomial of degree m over F_p.
Polynomial nth_irreducible(std::uint32_t p, std::uint32_t m, std::size_t index);

}  // namespace twozero

#endif
