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

#include "twozero/gf.hpp"

#include <gtest/gtest.h>

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

}  // namespace

TEST(BuildField, PrimeFieldF3) {
    auto F = FiniteField::build(3, 1);
    EXPECT_EQ(F.modulus(), Polynomial(3, {0, 1}));  // x
    EXPECT_EQ(F.primitive().code, 2u);
    EXPECT_EQ(F.size(), 3u);
}

TEST(BuildField, F9UsesSmallestIrreducibleAndSmallestPrimitive) {
    auto F = FiniteField::build(3, 2);
    EXPECT_EQ(F.modulus(), Polynomial(3, {1, 0, 1}));  // x^2 + 1
    EXPECT_EQ(F.primitive().code, 4u);                 // x + 1

    // Exhaustive order computation: only codes of order 8 qualify, and 4 is the smallest.
    oracle::NaiveField N(F);
    std::uint32_t smallest = 0;
    for (std::uint32_t c = 1; c < 9 && smallest == 0; ++c) {
        std::uint32_t order = 1, x = c;
        while (x != 1) {
            x = N.mul(x, c);
            ++order;
        }
        if (order == 8) smallest = c;
    }
    EXPECT_EQ(smallest, 4u);
}

TEST(BuildField, RejectsEvenCharacteristicAndOversizedTables) {
    EXPECT_EQ(kind_of([] { FiniteField::build(2, 3); }), ErrorKind::NotOddPrime);
    EXPECT_EQ(kind_of([] { FiniteField::build(9, 1); }), ErrorKind::NotOddPrime);
    FieldOptions tiny;
    tiny.table_budget = 100;
    EXPECT_EQ(kind_of([&] { FiniteField::build(3, 5, tiny); }), ErrorKind::DegreeTooLarge);
}

TEST(BuildField, Deterministic) {
    auto a = FiniteField::build(3, 5);
    auto b = FiniteField::build(3, 5);
    EXPECT_TRUE(a == b);
}

TEST(BuildField, ModulusAndPrimitiveHooks) {
    auto F0 = FiniteField::build(3, 4);
    FieldOptions o;
    o.modulus_index = 1;
    auto F1 = FiniteField::build(3, 4, o);
    EXPECT_NE(F0.modulus(), F1.modulus());
    EXPECT_TRUE(is_irreducible(F1.modulus()));
    EXPECT_LT(F0.modulus().packed(), F1.modulus().packed());

    FieldOptions q;
    q.primitive_index = 1;
    auto F2 = FiniteField::build(3, 4, q);
    EXPECT_EQ(F0.modulus(), F2.modulus());
    EXPECT_LT(F0.primitive().code, F2.primitive().code);
}

TEST(Arithmetic, TrivialIdentities) {
    auto F = FiniteField::build(3, 4);
    for (std::uint32_t c = 0; c < F.size(); ++c) EXPECT_EQ(F.mul(F.zero(), {c}), F.zero());
    EXPECT_EQ(F.inv(F.one()), F.one());
    EXPECT_EQ(F.pow(F.primitive(), F.unit_order()), F.one());
    EXPECT_EQ(kind_of([&] { F.inv(F.zero()); }), ErrorKind::DivisionByZero);
    EXPECT_EQ(kind_of([&] { F.log(F.zero()); }), ErrorKind::ZeroArgument);
}

class ArithmeticAgainstOracle : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(ArithmeticAgainstOracle, Exhaustive) {
    auto [p, m] = GetParam();
    auto F = FiniteField::build(p, m);
    oracle::NaiveField N(F);
    for (std::uint32_t a = 0; a < F.size(); ++a) {
        if (a != 0) {
            ASSERT_EQ(F.exp(F.log({a})).code, a);
            ASSERT_EQ(F.mul({a}, F.inv({a})), F.one());
        }
        ASSERT_EQ(F.trace({a}), N.trace(a));
        ASSERT_EQ(F.neg({a}).code, N.neg(a));
        for (std::uint32_t b = 0; b < F.size(); ++b) {
            ASSERT_EQ(F.add({a}, {b}).code, N.add(a, b));
            ASSERT_EQ(F.add_digits({a}, {b}).code, N.add(a, b));
            ASSERT_EQ(F.mul({a}, {b}).code, N.mul(a, b));
        }
    }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, ArithmeticAgainstOracle,
                         ::testing::Values(std::pair{3u, 1u}, std::pair{3u, 2u}, std::pair{3u, 3u}, std::pair{3u, 4u},
                                           std::pair{5u, 2u}, std::pair{7u, 2u}, std::pair{11u, 1u}));

TEST(Trace, BasicValues) {
    for (std::uint32_t m : {1u, 2u, 4u, 5u}) {
        auto F = FiniteField::build(3, m);
        EXPECT_EQ(F.trace(F.zero(), 1), F.zero());
        EXPECT_EQ(F.trace(F.one(), 1).code, m % 3);
        EXPECT_EQ(F.trace(F.one()), m % 3);
    }
    auto F9 = FiniteField::build(3, 2);
    std::uint32_t sum = 0;
    for (std::uint32_t c = 0; c < 9; ++c) sum += F9.trace({c});
    EXPECT_EQ(sum % 3, 0u);
    EXPECT_EQ(kind_of([&] { F9.trace(F9.one(), 3); }), ErrorKind::NotADivisor);
}

TEST(Trace, AdditiveAndTransitive) {
    auto F = FiniteField::build(3, 6);
    for (std::uint32_t x = 0; x < F.size(); x += 7) {
        for (std::uint32_t y = 0; y < F.size(); y += 11) {
            ASSERT_EQ((F.trace({x}) + F.trace({y})) % 3, F.trace(F.add({x}, {y})));
        }
    }
    for (std::uint32_t d : {1u, 2u, 3u, 6u}) {
        for (std::uint32_t x = 0; x < F.size(); ++x) {
            FieldElement inner = F.trace({x}, d);
            ASSERT_TRUE(F.in_subfield(inner, d));
            // Tr_1^d on the subfield, evaluated as a sum of d conjugates
            FieldElement outer = F.zero();
            for (std::uint32_t i = 0; i < d; ++i) outer = F.add(outer, F.frobenius(inner, i));
            ASSERT_EQ(outer.code, F.trace({x}));
        }
    }
}

TEST(QuadraticCharacter, Examples) {
    auto F3 = FiniteField::build(3, 1);
    EXPECT_EQ(F3.quadratic_character(F3.one(), 1), 1);
    EXPECT_EQ(F3.quadratic_character({2}, 1), -1);

    auto F = FiniteField::build(5, 4);
    // u_p = pi^((p^m-1)/(p-1)) is a primitive element of F_p
    FieldElement u = F.exp(F.unit_order() / 4);
    EXPECT_LT(u.code, 5u);
    EXPECT_EQ(F.quadratic_character(u, 1), -1);
    EXPECT_EQ(F.quadratic_character(F.one(), 1), 1);
    EXPECT_EQ(kind_of([&] { F.quadratic_character(F.zero(), 1); }), ErrorKind::ZeroArgument);
    EXPECT_EQ(kind_of([&] { F.quadratic_character(F.primitive(), 2); }), ErrorKind::NotInSubfield);
}

TEST(QuadraticCharacter, MultiplicativeAndEulerCriterion) {
    auto F = FiniteField::build(3, 4);
    for (std::uint32_t d : {1u, 2u, 4u}) {
        std::vector<FieldElement> sub;
        for (std::uint32_t c = 1; c < F.size(); ++c) {
            if (F.in_subfield({c}, d)) sub.push_back({c});
        }
        std::uint64_t q = ipow(3, d);
        ASSERT_EQ(sub.size(), q - 1);
        for (FieldElement x : sub) {
            FieldElement euler = F.pow(x, static_cast<std::int64_t>((q - 1) / 2));
            ASSERT_EQ(F.quadratic_character(x, d) == 1 ? F.one() : F.neg(F.one()), euler);
            for (FieldElement y : sub) {
                ASSERT_EQ(F.quadratic_character(F.mul(x, y), d),
                          F.quadratic_character(x, d) * F.quadratic_character(y, d));
            }
        }
    }
}

TEST(V2, Examples) {
    EXPECT_EQ(v2(1), 0u);
    EXPECT_EQ(v2(4), 2u);
    EXPECT_EQ(v2(6), 1u);
    EXPECT_EQ(v2(96), 5u);
}

TEST(MinimalPolynomial, Examples) {
    auto F = FiniteField::build(3, 4);
    EXPECT_EQ(F.minimal_polynomial(F.zero()), Polynomial(3, {0, 1}));
    EXPECT_EQ(F.minimal_polynomial(F.one()), Polynomial(3, {2, 1}));  // x - 1
    EXPECT_EQ(F.minimal_polynomial(F.primitive()).degree(), 4);
}

TEST(MinimalPolynomial, VanishesAndDividesFieldPolynomial) {
    for (auto [p, m] : {std::pair{3u, 6u}, std::pair{5u, 3u}, std::pair{3u, 4u}}) {
        auto F = FiniteField::build(p, m);
        const Polynomial x = Polynomial::monomial(p, 1);
        const Polynomial field_poly = Polynomial::monomial(p, F.size()) - x;
        for (std::uint32_t c = 0; c < F.size(); ++c) {
            Polynomial h = F.minimal_polynomial({c});
            ASSERT_TRUE(h.is_monic());
            ASSERT_EQ(m % h.degree(), 0u);
            ASSERT_EQ(F.evaluate(h, {c}), F.zero());
            if (c % 37 == 0) ASSERT_TRUE((field_poly % h).is_zero());
        }
    }
}

TEST(Polynomials, IrreducibilityMatchesRootCountForQuadratics) {
    // a monic quadratic over F_p is irreducible iff it has no root
    const std::uint32_t p = 5;
    for (std::uint32_t c0 = 0; c0 < p; ++c0) {
        for (std::uint32_t c1 = 0; c1 < p; ++c1) {
            Polynomial f(p, {c0, c1, 1});
            bool has_root = false;
            for (std::uint32_t x = 0; x < p; ++x) has_root |= (c0 + c1 * x + x * x) % p == 0;
            EXPECT_EQ(is_irreducible(f), !has_root) << f.to_string();
        }
    }
}

TEST(Polynomials, DivisionRoundTrip) {
    Polynomial a(7, {3, 1, 4, 1, 5, 2, 6});
    Polynomial b(7, {2, 0, 1});
    auto [q, r] = a.divmod(b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    EXPECT_EQ(Polynomial(3, {1, 2, 0, 1}).to_string(), "x^3 + 2x + 1");
}
