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

#include "twozero/quadforms.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

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

// Naive evaluation of f over every x, plus the radical size of its polar form,
// from polynomial-residue arithmetic only.
struct NaiveForm {
    const oracle::NaiveField& N;
    std::uint32_t d;
    std::vector<std::uint32_t> xk, x2, trd;

    NaiveForm(const oracle::NaiveField& field, std::uint32_t p, std::uint32_t k, std::uint32_t dd) : N(field), d(dd) {
        const std::uint64_t e = ipow(p, k) + 1;
        for (std::uint32_t x = 0; x < N.size(); ++x) {
            xk.push_back(N.pow(x, e));
            x2.push_back(N.mul(x, x));
            trd.push_back(N.trace(x, d));
        }
    }
    std::vector<std::uint32_t> values(std::uint32_t a, std::uint32_t b) const {
        std::vector<std::uint32_t> f(N.size());
        for (std::uint32_t x = 0; x < N.size(); ++x) f[x] = trd[N.add(N.mul(a, xk[x]), N.mul(b, x2[x]))];
        return f;
    }
    /// #{x : f(x + y) = f(x) + f(y) for every y}
    std::uint64_t radical_size(const std::vector<std::uint32_t>& f) const {
        std::uint64_t count = 0;
        for (std::uint32_t x = 0; x < N.size(); ++x) {
            bool in = true;
            for (std::uint32_t y = 1; y < N.size() && in; ++y) in = f[N.add(x, y)] == N.add(f[x], f[y]);
            count += in;
        }
        return count;
    }
};

}  // namespace

TEST(Classify, Labels) {
    auto a = classify_parameters(3, 6, 4);
    EXPECT_EQ(a.case_label, CaseLabel::CaseA);
    EXPECT_EQ(a.d, 2u);
    EXPECT_EQ(a.s, 3u);
    EXPECT_EQ(a.q, 9u);
    EXPECT_EQ(classify_parameters(3, 6, 1).case_label, CaseLabel::CaseBOddK);
    EXPECT_EQ(classify_parameters(3, 4, 1).case_label, CaseLabel::CaseBOddK);
    auto b = classify_parameters(3, 8, 2);
    EXPECT_EQ(b.case_label, CaseLabel::CaseBEvenK);
    EXPECT_EQ(b.s, 4u);
    EXPECT_EQ(classify_parameters(3, 3, 1).case_label, CaseLabel::OddSOutOfScope);
    EXPECT_EQ(classify_parameters(3, 5, 1).case_label, CaseLabel::OddSOutOfScope);
    EXPECT_EQ(to_string(CaseLabel::CaseBEvenK), "CaseB-even-k");
    EXPECT_EQ(to_string(CaseLabel::OddSOutOfScope), "OddS-out-of-scope");
}

TEST(Classify, Rejections) {
    EXPECT_EQ(kind_of([] { classify_parameters(3, 4, 2); }), ErrorKind::STooSmall);
    EXPECT_EQ(kind_of([] { classify_parameters(3, 2, 1); }), ErrorKind::STooSmall);
    EXPECT_EQ(kind_of([] { classify_parameters(2, 4, 1); }), ErrorKind::NotOddPrime);
    EXPECT_EQ(kind_of([] { classify_parameters(9, 4, 1); }), ErrorKind::NotOddPrime);
    EXPECT_EQ(kind_of([] { classify_parameters(3, 0, 1); }), ErrorKind::STooSmall);
}

TEST(FormValues, MatchNaiveArithmetic) {
    for (auto [p, m, k] : {std::tuple{3u, 4u, 1u}, std::tuple{3u, 6u, 4u}}) {
        Instance S(p, m, k);
        oracle::NaiveField N(S.F);
        NaiveForm naive(N, p, k, S.params.d);
        std::mt19937 rng(p * 100 + m * 10 + k);
        std::uniform_int_distribution<std::uint32_t> pick(0, S.F.size() - 1);
        for (int t = 0; t < 20; ++t) {
            const std::uint32_t a = pick(rng), b = pick(rng);
            auto f = naive.values(a, b);
            for (std::uint32_t x = 0; x < S.F.size(); x += 7) EXPECT_EQ(S.ctx.form({a}, {b}, {x}).code, f[x]);
        }
    }
}

TEST(Rank, PhiRankEqualsRadicalRankExhaustively) {
    Instance S(3, 4, 1);
    oracle::NaiveField N(S.F);
    NaiveForm naive(N, 3, 1, 1);
    for (std::uint32_t a = 0; a < S.F.size(); ++a) {
        for (std::uint32_t b = 0; b < S.F.size(); ++b) {
            if (a == 0 && b == 0) continue;
            const std::uint64_t rad = naive.radical_size(naive.values(a, b));
            const std::uint32_t r = S.ctx.rank({a}, {b});
            ASSERT_EQ(rad, ipow(S.params.q, S.params.s - r)) << a << "," << b;
            ASSERT_EQ(S.ctx.classify({a}, {b}).rank, r);
        }
    }
}

TEST(Rank, PhiRankEqualsRadicalRankSampled) {
    Instance S(3, 6, 4);
    oracle::NaiveField N(S.F);
    NaiveForm naive(N, 3, 4, 2);
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::uint32_t> pick(0, S.F.size() - 1);
    std::set<std::uint32_t> seen;
    for (int t = 0; t < 60; ++t) {
        std::uint32_t a = pick(rng), b = pick(rng);
        if (t % 3 == 0) b = 0;  // rank drops only occur on thin subsets; bias toward them
        if (a == 0 && b == 0) continue;
        const std::uint32_t r = S.ctx.rank({a}, {b});
        EXPECT_EQ(naive.radical_size(naive.values(a, b)), ipow(9, 3 - r));
        EXPECT_EQ(S.ctx.classify({a}, {b}).rank, r);
        seen.insert(r);
    }
    EXPECT_TRUE(seen.count(3));
}

TEST(Phi, KernelSizesAreOneThreeNine) {
    Instance S(3, 4, 1);
    oracle::NaiveField N(S.F);
    std::set<std::uint64_t> sizes;
    for (std::uint32_t a = 0; a < S.F.size(); a += 5) {
        for (std::uint32_t b = 0; b < S.F.size(); b += 3) {
            if (a == 0 && b == 0) continue;
            std::uint64_t roots = 0;
            for (std::uint32_t x = 0; x < S.F.size(); ++x) roots += S.ctx.phi({a}, {b}, {x}).is_zero();
            // phi(x) = a^3 x^9 + 2 b^3 x^3 + a x, evaluated naively
            std::uint64_t naive_roots = 0;
            const std::uint32_t a3 = N.pow(a, 3), b3 = N.scale(N.pow(b, 3), 2);
            for (std::uint32_t x = 0; x < S.F.size(); ++x) {
                naive_roots += N.add(N.add(N.mul(a3, N.pow(x, 9)), N.mul(b3, N.pow(x, 3))), N.mul(a, x)) == 0;
            }
            ASSERT_EQ(roots, naive_roots);
            ASSERT_EQ(roots, ipow(3, S.ctx.phi_nullity({a}, {b})));
            sizes.insert(roots);
        }
    }
    EXPECT_EQ(sizes, (std::set<std::uint64_t>{1, 3, 9}));
}

TEST(Phi, PsiParametrizesKernels) {
    for (auto [p, m, k] : {std::tuple{3u, 4u, 1u}, std::tuple{3u, 6u, 4u}}) {
        Instance S(p, m, k);
        std::mt19937 rng(5);
        std::uniform_int_distribution<std::uint32_t> pick(1, S.F.size() - 1);
        for (int t = 0; t < 200; ++t) {
            const FieldElement a{pick(rng)}, x{pick(rng)};
            const FieldElement b = S.ctx.psi(a, x);
            EXPECT_TRUE(S.ctx.phi(a, b, x).is_zero());
            // and the kernel element pins beta down uniquely
            const FieldElement other = S.F.add(b, S.F.one());
            EXPECT_FALSE(S.ctx.phi(a, other, x).is_zero());
        }
        EXPECT_EQ(kind_of([&] { S.ctx.psi({1}, {0}); }), ErrorKind::ZeroArgument);
    }
}

TEST(Rank, Trichotomy) {
    Instance S(3, 6, 4);
    for (std::uint32_t a = 0; a < S.F.size(); a += 13) {
        for (std::uint32_t b = 0; b < S.F.size(); b += 17) {
            if (a == 0 && b == 0) continue;
            const std::uint32_t r = S.ctx.rank({a}, {b});
            EXPECT_TRUE(r >= S.params.s - 2 && r <= S.params.s);
        }
    }
    EXPECT_EQ(kind_of([&] { S.ctx.rank({0}, {0}); }), ErrorKind::BothZero);
}

TEST(Gram, ReproducesFormOnRandomCoordinates) {
    for (auto [p, m, k] : {std::tuple{3u, 4u, 1u}, std::tuple{3u, 6u, 4u}, std::tuple{5u, 4u, 1u}, std::tuple{3u, 8u, 2u}}) {
        Instance S(p, m, k);
        const Subfield& Fq = S.ctx.subfield();
        std::mt19937 rng(p + m + k);
        std::uniform_int_distribution<std::uint32_t> pick(0, S.F.size() - 1);
        std::uniform_int_distribution<std::uint32_t> coord(0, Fq.q() - 1);
        for (int t = 0; t < 50; ++t) {
            const FieldElement a{pick(rng)}, b{pick(rng)};
            const SymmetricMatrix A = S.ctx.gram_matrix(a, b);
            for (int u = 0; u < 10; ++u) {
                std::vector<Subfield::Element> z(S.params.s);
                for (auto& zi : z) zi = coord(rng);
                Subfield::Element acc = 0;
                for (std::uint32_t i = 0; i < A.size; ++i) {
                    for (std::uint32_t j = 0; j < A.size; ++j) acc = Fq.add(acc, Fq.mul(z[i], Fq.mul(A.at(i, j), z[j])));
                }
                ASSERT_EQ(Fq.to_field(acc), S.ctx.form(a, b, S.ctx.from_coordinates(z)));
            }
            if (!(a.is_zero() && b.is_zero())) ASSERT_EQ(diagonalize(Fq, A).rank, S.ctx.rank(a, b));
        }
    }
}

TEST(Diagonalize, InvariantUnderCongruence) {
    auto F = FiniteField::build(3, 4);
    Subfield Fq(F, 2);
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::uint32_t> coord(0, Fq.q() - 1);
    for (int t = 0; t < 200; ++t) {
        const std::uint32_t n = 1 + t % 5;
        SymmetricMatrix A(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            for (std::uint32_t j = i; j < n; ++j) A.at(i, j) = A.at(j, i) = (t % 4 == 0 && i == j) ? 0 : coord(rng);
        }
        // B = T A T' with T a permutation followed by one row/column operation
        std::vector<std::uint32_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        SymmetricMatrix B(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            for (std::uint32_t j = 0; j < n; ++j) B.at(i, j) = A.at(perm[i], perm[j]);
        }
        if (n >= 2) {
            const Subfield::Element c = coord(rng);
            for (std::uint32_t j = 0; j < n; ++j) B.at(0, j) = Fq.add(B.at(0, j), Fq.mul(c, B.at(1, j)));
            for (std::uint32_t i = 0; i < n; ++i) B.at(i, 0) = Fq.add(B.at(i, 0), Fq.mul(c, B.at(i, 1)));
        }
        auto product_eta = [&](const DiagonalForm& D) {
            int eta = 1;
            for (auto x : D.diagonal) eta *= Fq.eta(x);
            return eta;
        };
        const DiagonalForm DA = diagonalize(Fq, A), DB = diagonalize(Fq, B);
        ASSERT_EQ(DA.rank, DB.rank);
        ASSERT_EQ(DA.diagonal.size(), DA.rank);
        ASSERT_EQ(product_eta(DA), product_eta(DB));
    }
}

TEST(Diagonalize, AllZeroDiagonalNeedsFixUp) {
    auto F = FiniteField::build(3, 2);
    Subfield Fq(F, 2);
    SymmetricMatrix A(2);
    A.at(0, 1) = A.at(1, 0) = Subfield::from_index(0);  // the form 2xy
    const DiagonalForm D = diagonalize(Fq, A);
    EXPECT_EQ(D.rank, 2u);
    // 2xy is a hyperbolic plane: discriminant class of -1
    EXPECT_EQ(Fq.eta(D.diagonal[0]) * Fq.eta(D.diagonal[1]), Fq.eta(Fq.neg(Subfield::from_index(0))));
}

TEST(Census, ExhaustiveMatchesCorrectedClosedForm) {
    for (auto [p, m, k] : {std::tuple{3u, 4u, 1u}, std::tuple{3u, 6u, 4u}}) {
        Instance S(p, m, k);
        EXPECT_EQ(S.ctx.rank_census(), rank_census_closed(S.params)) << p << m << k;
    }
    Instance S(3, 4, 1);
    const RankCensus c = S.ctx.rank_census();
    EXPECT_EQ(c.n0, 4140u);
    EXPECT_EQ(c.n1, 2160u);
    EXPECT_EQ(c.n2, 260u);
    EXPECT_EQ(c.total(), 6560u);
}

TEST(Census, BudgetRefusal) {
    Instance S(3, 6, 4);
    EXPECT_EQ(kind_of([&] { S.ctx.rank_census(1000); }), ErrorKind::BudgetExceeded);
}

TEST(Companion, AtLeastOneFormHasFullRank) {
    for (auto [p, m, k] : {std::tuple{3u, 4u, 1u}, std::tuple{3u, 6u, 4u}, std::tuple{3u, 6u, 1u}}) {
        Instance S(p, m, k);
        const FieldElement twist = S.ctx.twist(), minus_pi = S.F.neg(S.F.primitive());
        EXPECT_EQ(twist, S.F.pow(S.F.primitive(), static_cast<std::int64_t>((ipow(p, k) + 1) / 2)));
        for (std::uint32_t a = 0; a < S.F.size(); ++a) {
            for (std::uint32_t b = 0; b < S.F.size(); ++b) {
                if (a == 0 && b == 0) continue;
                const auto rf = S.ctx.classify({a}, {b}).rank;
                const auto rg = S.ctx.classify(S.F.mul({a}, twist), S.F.mul({b}, minus_pi)).rank;
                ASSERT_EQ(std::max(rf, rg), S.params.s) << a << "," << b;
            }
        }
    }
}
