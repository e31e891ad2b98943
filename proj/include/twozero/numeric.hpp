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

// Small exact integer helpers shared by every module.

#ifndef TWOZERO_NUMERIC_HPP
#define TWOZERO_NUMERIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "twozero/error.hpp"

namespace twozero {

using i128 = __int128;

/// 2-adic valuation; v2(0) is not defined and returns 0.
constexpr unsigned v2(std::uint64_t j) noexcept {
    if (j == 0) return 0;
    unsigned t = 0;
    while ((j & 1U) == 0) {
        j >>= 1;
        ++t;
    }
    return t;
}

constexpr std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// base^exp, throwing Overflow if the result leaves int64 range.
std::int64_t ipow(std::int64_t base, unsigned exp);

/// base^exp mod modulus (modulus >= 1).
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus) noexcept;

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// num / den, throwing InexactDivision when den does not divide num.
i128 exact_div(i128 num, i128 den, const char* what);

/// Narrow a 128-bit intermediate, throwing Overflow when it does not fit.
std::int64_t narrow(i128 v);

std::string to_string(i128 v);

}  // namespace twozero

#endif
