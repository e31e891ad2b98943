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

#include "twozero/expsums.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "twozero/error.hpp"
#include "twozero/numeric.hpp"

using namespace twozero;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an Error";
    return ErrorKind::InternalInconsistency;
}

struct Instance {
    CodeParams params;
    FiniteField F;
    FormContext ctx;
    Instance(std::uint32_t p, std::uint32_t m, std::uint32_t k)
        : params(classify_parameters(p, m, k)), F(FiniteField::build(p, m)), ctx(F, params) {}
};

using Triple = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>;

}  // namespace

TEST(TraceCounts, MatchNaiveOracle) {
    for (auto [p, m, k] : {Triple{3, 4, 1}, Triple{5, 4, 1}, Triple{3, 6, 4}}) {
        Instance I(p, m, k);
        oracle::NaiveField N(I.F);
        std::mt19937 rng(p * m * k);
        std::uniform_int_distribution<std::uint32_t> pick(0, I.F.size() - 1);
        for (int t = 0; t < 8; ++t) {
            const std::uint32_t a = pick(rng), b = pick(rng);
            EXPECT_EQ(trace_value_counts(I.ctx, {a}, {b}), oracle::naive_trace_counts(N, p, ipow(p, k) + 1, a, b));
        }
    }
}

TEST(FormSum, GaussSumBuildingBlocks) {
    // p = 3, d = 1: a rank-1 form x^2 on F_3^s sums to g_3 * 3^(s-1)
    const CodeParams c = classify_parameters(3, 3, 1);
    EXPECT_EQ(form_sum_value(c, {1, 1}).image(), gauss_sum(3).scaled(9));
    EXPECT_EQ(form_sum_value(c, {1, -1}).image(), gauss_sum(3).conjugate().scaled(9));
    EXPECT_EQ(form_sum_value(c, {0, 1}), SymbolicSumValue::rational(3, 1, 27));
    // d = 2: the Gauss sum of F_9 is -g_3^2 = 3
    const CodeParams c2 = classify_parameters(3, 6, 4);
    EXPECT_EQ(form_sum_value(c2, {1, 1}).rational_value(), 3 * 81);
}

TEST(TFast, EqualsDirectSumOnEveryPair) {
    Instance I(3, 4, 1);
    for (std::uint32_t a = 0; a < I.F.size(); ++a) {
        for (std::uint32_t b = 0; b < I.F.size(); ++b) {
            ASSERT_EQ(T_fast(I.ctx, {a}, {b}).image(), T_direct(I.ctx, {a}, {b})) << a << "," << b;
            ASSERT_EQ(S_fast(I.ctx, {a}, {b}).image(), S_direct(I.ctx, {a}, {b})) << a << "," << b;
        }
    }
}

TEST(TFast, EqualsDirectSumSampled) {
    for (auto [p, m, k] : {Triple{3, 6, 4}, Triple{3, 6, 1}, Triple{5, 4, 1}, Triple{3, 3, 1}, Triple{3, 5, 1}, Triple{7, 3, 1}}) {
        Instance I(p, m, k);
        std::mt19937 rng(p + m + k);
        std::uniform_int_distribution<std::uint32_t> pick(0, I.F.size() - 1);
        for (int t = 0; t < 150; ++t) {
            const FieldElement a{pick(rng)}, b{t % 5 == 0 ? 0 : pick(rng)};
            ASSERT_EQ(T_fast(I.ctx, a, b).image(), T_direct(I.ctx, a, b));
            ASSERT_EQ(S_fast(I.ctx, a, b).image(), S_direct(I.ctx, a, b));
        }
    }
}

TEST(TDistribution, DirectCensusMatchesClosedTable) {
    for (auto [p, m, k] : {Triple{3, 4, 1}, Triple{3, 3, 1}, Triple{3, 5, 1}, Triple{5, 3, 1}}) {
        Instance I(p, m, k);
        EXPECT_EQ(t_census_direct(I.ctx), t_distribution_closed(I.params).image_census()) << p << m << k;
    }
}

TEST(TDistribution, FastCensusMatchesClosedTable) {
    for (auto [p, m, k] : {Triple{3, 6, 4}, Triple{3, 6, 1}, Triple{5, 4, 1}}) {
        Instance I(p, m, k);
        const ValueDistribution closed = t_distribution_closed(I.params);
        EXPECT_EQ(t_census_fast(I.ctx, 2), closed) << p << m << k;
        EXPECT_EQ(closed.total(), ipow(p, 2 * m));
    }
}

TEST(TDistribution, OddSTableRow) {
    // s = 3: value p^((m+d)/2) = 81 has frequency (1/2) 9 * 10 * 728
    const ValueDistribution closed = t_distribution_closed(classify_parameters(3, 6, 4));
    EXPECT_EQ(closed.frequency(SymbolicSumValue::rational(3, 2, 81)), 32760u);
    EXPECT_EQ(closed.frequency(SymbolicSumValue::rational(3, 2, 729)), 1u);
}

TEST(SDistribution, DirectCensusMatchesClosedTable) {
    Instance I(3, 4, 1);
    EXPECT_EQ(s_census_direct(I.ctx), s_distribution_closed(I.params).image_census());
}

TEST(SDistribution, FastCensusMatchesClosedTable) {
    for (auto [p, m, k] : {Triple{3, 6, 4}, Triple{3, 6, 1}, Triple{5, 4, 1}}) {
        Instance I(p, m, k);
        const ValueDistribution closed = s_distribution_closed(I.params);
        EXPECT_EQ(s_census_fast(I.ctx), closed) << p << m << k;
        EXPECT_EQ(closed.total(), ipow(p, 2 * m));
    }
}

TEST(SDistribution, UnsupportedOutsideClosedCases) {
    EXPECT_EQ(kind_of([] { s_distribution_closed(classify_parameters(3, 3, 1)); }), ErrorKind::UnsupportedCase);
}

TEST(Censuses, BudgetRefusal) {
    Instance I(3, 6, 4);
    EXPECT_EQ(kind_of([&] { t_census_direct(I.ctx, 1, 1000); }), ErrorKind::BudgetExceeded);
    EXPECT_EQ(kind_of([&] { s_census_fast(I.ctx, 1, 1000); }), ErrorKind::BudgetExceeded);
    EXPECT_EQ(kind_of([&] { count_E2(I.ctx, CountMode::Brute); }), ErrorKind::BudgetExceeded);
}

TEST(SolutionCounts, E1BruteEqualsClosed) {
    for (auto [p, m, k] : {Triple{3, 4, 1}, Triple{3, 6, 4}, Triple{3, 6, 1}, Triple{5, 4, 1}}) {
        Instance I(p, m, k);
        EXPECT_EQ(count_E1(I.ctx, CountMode::Brute), count_E1(I.ctx, CountMode::Closed)) << p << m << k;
    }
    Instance I(3, 6, 4);
    EXPECT_EQ(count_E1(I.ctx, CountMode::Closed), 1457u);
}

TEST(SolutionCounts, E2BruteEqualsClosed) {
    Instance I(3, 4, 1);
    EXPECT_EQ(count_E2(I.ctx, CountMode::Brute), count_E2(I.ctx, CountMode::Closed));
}

TEST(Identities, AllHold) {
    for (auto [p, m, k] : {Triple{3, 4, 1}, Triple{3, 6, 4}}) {
        Instance I(p, m, k);
        const auto checks = verify_power_identities(I.ctx);
        EXPECT_EQ(checks.size(), I.params.is_case_a() ? 2u : 4u);
        for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.lhs << " vs " << c.rhs;
    }
}
