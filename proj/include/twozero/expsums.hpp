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

// Exponential sums
//   T(a, b) = sum_x zeta^Tr(a x^(p^k+1) + b x^2)
//   S(a, b) = T(a, b) + T(pi^((p^k+1)/2) a, -pi b)
// evaluated exactly, either by direct summation or from the rank and
// discriminant of the underlying quadratic form.

#ifndef TWOZERO_EXPSUMS_HPP
#define TWOZERO_EXPSUMS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twozero/cyclotomic.hpp"
#include "twozero/quadforms.hpp"
#include "twozero/symbolic.hpp"

namespace twozero {

/// Default ceiling on field-element evaluations for direct censuses
/// (pairs times field size); accepts p = 3, m = 6.
inline constexpr std::uint64_t kDefaultDirectBudget = 1'000'000'000;
/// Default ceiling on (alpha, beta) pairs for pair enumerations; accepts p = 3, m = 8.
inline constexpr std::uint64_t kDefaultPairBudget = std::uint64_t{1} << 26;
/// Default ceiling on (x, y, z) triples for the E2 brute count (p^m <= 81 for p = 3).
inline constexpr std::uint64_t kDefaultTripleBudget = 531441;

/// The companion pair (pi^((p^k+1)/2) alpha, -pi beta).
std::pair<FieldElement, FieldElement> companion(const FormContext& ctx, FieldElement alpha, FieldElement beta);

/// Counts of each trace value t in [0, p) of alpha x^(p^k+1) + beta x^2.
std::vector<std::int64_t> trace_value_counts(const FormContext& ctx, FieldElement alpha, FieldElement beta);

CyclotomicInteger T_direct(const FormContext& ctx, FieldElement alpha, FieldElement beta);
CyclotomicInteger S_direct(const FormContext& ctx, FieldElement alpha, FieldElement beta);

/// The sum over F_q^s of a form of the given class:
/// eta * G_q^r * q^(s-r), with G_q = (-1)^(d-1) g_p^d the quadratic Gauss sum of F_q.
SymbolicSumValue form_sum_value(const CodeParams& params, FormClass cls);

SymbolicSumValue T_fast(const FormContext& ctx, FieldElement alpha, FieldElement beta);
/// Both T terms share q, so the sum is again a single symbolic value.
SymbolicSumValue S_fast(const FormContext& ctx, FieldElement alpha, FieldElement beta);

using CyclotomicCensus = std::map<CyclotomicInteger, std::uint64_t>;

/// Exhaustive censuses over all p^(2m) pairs, (0, 0) included.
CyclotomicCensus t_census_direct(const FormContext& ctx, unsigned workers = 1, std::uint64_t budget = kDefaultDirectBudget);
CyclotomicCensus s_census_direct(const FormContext& ctx, unsigned workers = 1, std::uint64_t budget = kDefaultDirectBudget);
ValueDistribution t_census_fast(const FormContext& ctx, unsigned workers = 1, std::uint64_t budget = kDefaultPairBudget);
ValueDistribution s_census_fast(const FormContext& ctx, unsigned workers = 1, std::uint64_t budget = kDefaultPairBudget);

/// FormClass of every pair, packed as rank * 2 + (epsilon < 0) and indexed
/// by alpha.code * p^m + beta.code.
std::vector<std::uint8_t> classify_all(const FormContext& ctx, unsigned workers = 1, std::uint64_t budget = kDefaultPairBudget);

/// Closed-form distribution of T over all p^(2m) pairs (s odd / s even tables).
ValueDistribution t_distribution_closed(const CodeParams& params);
/// Closed-form distribution of S; CaseA and CaseB only, else UnsupportedCase.
ValueDistribution s_distribution_closed(const CodeParams& params);

enum class CountMode { Brute, Closed };

/// #{(x, y) : x^2 + y^2 = 0, x^(p^k+1) + y^(p^k+1) = 0}.
std::uint64_t count_E1(const FormContext& ctx, CountMode mode, std::uint64_t budget = kDefaultPairBudget);
/// #{(x, y, z) : x^2 + y^2 - pi z^2 = 0, x^(p^k+1) + y^(p^k+1) + pi^((p^k+1)/2) z^(p^k+1) = 0}.
std::uint64_t count_E2(const FormContext& ctx, CountMode mode, std::uint64_t budget = kDefaultTripleBudget);

struct IdentityCheck {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

/// The power-sum identities for S: two in CaseA, four in CaseB. Left sides are
/// exact sums in Z[zeta_p] of direct S values; N1/N2 split pairs by rank s-1 / s-2.
std::vector<IdentityCheck> verify_power_identities(const FormContext& ctx, unsigned workers = 1,
                                                   std::uint64_t budget = kDefaultDirectBudget);

}  // namespace twozero

#endif
