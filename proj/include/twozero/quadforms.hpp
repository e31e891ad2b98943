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

// The family of quadratic forms f(x) = Tr_d^m(alpha x^(p^k+1) + beta x^2)
// over F_q, q = p^d, d = gcd(m, k), viewed on F_{p^m} = F_q^s.

#ifndef TWOZERO_QUADFORMS_HPP
#define TWOZERO_QUADFORMS_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "twozero/gf.hpp"

namespace twozero {

enum class CaseLabel { CaseA, CaseBOddK, CaseBEvenK, OddSOutOfScope };

std::string_view to_string(CaseLabel c) noexcept;

struct CodeParams {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t k = 0;
    std::uint32_t d = 0;
    std::uint32_t s = 0;
    std::uint64_t q = 0;
    CaseLabel case_label = CaseLabel::OddSOutOfScope;

    bool is_case_a() const noexcept { return case_label == CaseLabel::CaseA; }
    bool is_case_b() const noexcept {
        return case_label == CaseLabel::CaseBOddK || case_label == CaseLabel::CaseBEvenK;
    }
    bool has_closed_form() const noexcept { return is_case_a() || is_case_b(); }
    /// p^k mod 4, which selects the branch of several closed forms.
    std::uint32_t pk_mod4() const noexcept;
};

/// Throws NotOddPrime or STooSmall (s < 3).
CodeParams classify_parameters(std::uint32_t p, std::uint32_t m, std::uint32_t k);

/// Counts of (alpha, beta) != (0, 0) by rank: n[i] has rank s - i.
struct RankCensus {
    std::uint64_t n0 = 0;
    std::uint64_t n1 = 0;
    std::uint64_t n2 = 0;

    std::uint64_t total() const noexcept { return n0 + n1 + n2; }
    bool operator==(const RankCensus&) const = default;
};

/// F_q inside a FiniteField, in the log domain: element 0 is zero and
/// i + 1 stands for omega^i, where omega = pi^((p^m-1)/(q-1)).
class Subfield {
   public:
    using Element = std::uint32_t;

    Subfield(const FiniteField& F, std::uint32_t d);

    std::uint32_t d() const noexcept { return d_; }
    std::uint32_t q() const noexcept { return order_ + 1; }

    Element add(Element a, Element b) const noexcept {
        if (a == 0) return b;
        if (b == 0) return a;
        std::uint32_t t = b >= a ? b - a : b + order_ - a;
        std::uint32_t z = zech_[t];
        if (z == order_) return 0;
        std::uint32_t r = a - 1 + z;
        return (r >= order_ ? r - order_ : r) + 1;
    }
    Element neg(Element a) const noexcept {
        if (a == 0) return 0;
        std::uint32_t r = a - 1 + half_;
        return (r >= order_ ? r - order_ : r) + 1;
    }
    Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
    Element mul(Element a, Element b) const noexcept {
        if (a == 0 || b == 0) return 0;
        std::uint32_t r = a - 1 + b - 1;
        return (r >= order_ ? r - order_ : r) + 1;
    }
    /// Throws DivisionByZero.
    Element inv(Element a) const;
    /// Quadratic character of a nonzero element; throws ZeroArgument.
    int eta(Element a) const;

    FieldElement to_field(Element a) const noexcept;
    /// Throws NotInSubfield.
    Element from_field(FieldElement x) const;
    /// The element with log index L (mod q - 1) relative to omega.
    static constexpr Element from_index(std::uint32_t index) noexcept { return index + 1; }

   private:
    const FiniteField* field_;
    std::uint32_t d_;
    std::uint32_t order_;  // q - 1
    std::uint32_t half_;   // (q - 1) / 2, the index of -1
    std::uint32_t stride_;
    std::vector<std::uint32_t> zech_;  // log(1 + omega^t), or order_ when zero
};

/// Dense symmetric matrix over F_q stored as subfield elements.
struct SymmetricMatrix {
    std::uint32_t size = 0;
    std::vector<Subfield::Element> entries;

    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::uint32_t n) : size(n), entries(std::size_t{n} * n, 0) {}

    Subfield::Element& at(std::uint32_t i, std::uint32_t j) { return entries[std::size_t{i} * size + j]; }
    Subfield::Element at(std::uint32_t i, std::uint32_t j) const { return entries[std::size_t{i} * size + j]; }
    bool operator==(const SymmetricMatrix&) const = default;
};

struct DiagonalForm {
    std::uint32_t dimension = 0;
    std::uint32_t rank = 0;
    std::vector<Subfield::Element> diagonal;  // the rank nonzero entries
};

/// Congruence diagonalization: returns nonzero entries of T A T' for some
/// nonsingular T. Characteristic must be odd.
DiagonalForm diagonalize(const Subfield& Fq, SymmetricMatrix A);

/// Rank and discriminant character of a form, the only data a character sum needs.
struct FormClass {
    std::uint32_t rank = 0;
    int epsilon = 1;  // eta_d(a_1 ... a_r); +1 when rank is 0
};

/// Everything that depends on (F, p, m, k) and is shared by the form
/// computations. Immutable and safe to share between threads.
class FormContext {
   public:
    FormContext(const FiniteField& F, const CodeParams& params);

    const FiniteField& field() const noexcept { return *F_; }
    const CodeParams& params() const noexcept { return params_; }
    const Subfield& subfield() const noexcept { return Fq_; }

    /// alpha^(p^k) x^(p^(2k)) + 2 beta^(p^k) x^(p^k) + alpha x
    FieldElement phi(FieldElement alpha, FieldElement beta, FieldElement x) const;
    /// -(1/2) x^(-1) (alpha x^(p^k) + alpha^(p^(m-k)) x^(p^(m-k))); throws ZeroArgument for x = 0.
    FieldElement psi(FieldElement alpha, FieldElement x) const;
    /// f(x) = Tr_d^m(alpha x^(p^k+1) + beta x^2), an element of F_q.
    FieldElement form(FieldElement alpha, FieldElement beta, FieldElement x) const;

    /// s - dim_{F_q} ker(phi), from F_p linear algebra. Throws BothZero and,
    /// if the trichotomy is violated, InternalInconsistency.
    std::uint32_t rank(FieldElement alpha, FieldElement beta) const;
    /// F_p-nullity of phi as an m x m matrix.
    std::uint32_t phi_nullity(FieldElement alpha, FieldElement beta) const;

    /// Gram matrix in the F_q-basis pi^0, ..., pi^(s-1).
    SymmetricMatrix gram_matrix(FieldElement alpha, FieldElement beta) const;
    /// sum z_i pi^i for coordinates z in F_q^s.
    FieldElement from_coordinates(const std::vector<Subfield::Element>& z) const;

    /// Rank and discriminant character via Gram diagonalization; the hot
    /// path of the fast sum engine. (0, 0) gives rank 0.
    FormClass classify(FieldElement alpha, FieldElement beta) const;

    /// Exhaustive census over all nonzero pairs. Throws BudgetExceeded
    /// when p^(2m) exceeds max_pairs.
    RankCensus rank_census(std::uint64_t max_pairs = std::uint64_t{1} << 26, unsigned workers = 1) const;

    /// pi^((p^k+1)/2), the twist applied to alpha in the companion form.
    FieldElement twist() const noexcept { return F_->exp(half_exp_); }
    /// (p^k + 1)/2 mod (p^m - 1).
    std::uint64_t half_exponent() const noexcept { return half_exp_; }

   private:
    std::uint32_t classify_log(std::uint32_t la, bool has_a, std::uint32_t lb, bool has_b, int& epsilon) const;

    const FiniteField* F_;
    CodeParams params_;
    Subfield Fq_;
    std::uint64_t half_exp_ = 0;
    FieldElement two_inv_;
    std::vector<std::uint32_t> trd_;  // Tr_d^m(pi^L) as a subfield element, L in [0, 2n)
    // exponents (mod n) for the Gram entries: e_i^(p^k) e_j and e_i e_j
    std::vector<std::uint32_t> cross_exp_;
    Subfield::Element half_;  // 1/2 in F_q
};

/// The rank census closed forms in their corrected labelling:
/// n1 = p^(m-d)(p^m-1), n2 = (p^m-1)(p^(m-d)-1)/(p^(2d)-1).
RankCensus rank_census_closed(const CodeParams& params);

}  // namespace twozero

#endif
