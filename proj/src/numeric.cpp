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

#include "twozero/numeric.hpp"

#include <algorithm>
#include <limits>

namespace twozero {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotOddPrime: return "NotOddPrime";
        case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorKind::STooSmall: return "STooSmall";
        case ErrorKind::NotADivisor: return "NotADivisor";
        case ErrorKind::NotInSubfield: return "NotInSubfield";
        case ErrorKind::ZeroArgument: return "ZeroArgument";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::BothZero: return "BothZero";
        case ErrorKind::UnsupportedCase: return "UnsupportedCase";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::DistinctnessViolated: return "DistinctnessViolated";
        case ErrorKind::NonRationalSum: return "NonRationalSum";
        case ErrorKind::NonIntegralWeight: return "NonIntegralWeight";
        case ErrorKind::InexactDivision: return "InexactDivision";
        case ErrorKind::Overflow: return "Overflow";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2) {
        if (n % f == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::int64_t ipow(std::int64_t base, unsigned exp) {
    std::int64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus) noexcept {
    if (modulus == 1) return 0;
    unsigned __int128 r = 1;
    unsigned __int128 b = base % modulus;
    while (exp != 0) {
        if (exp & 1U) r = (r * b) % modulus;
        b = (b * b) % modulus;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "int64 addition overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "int64 multiplication overflow");
    return r;
}

i128 exact_div(i128 num, i128 den, const char* what) {
    if (den == 0 || num % den != 0) {
        fail(ErrorKind::InexactDivision,
             std::string("inexact division in ") + what + ": " + to_string(num) + " / " + to_string(den));
    }
    return num / den;
}

std::int64_t narrow(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        fail(ErrorKind::Overflow, "value does not fit in int64: " + to_string(v));
    }
    return static_cast<std::int64_t>(v);
}

std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    std::string s;
    while (u != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace twozero
