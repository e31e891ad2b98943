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

#include <array>
#include <utility>

#include "twozero/error.hpp"
#include "twozero/numeric.hpp"
#include "twozero/parallel.hpp"

namespace twozero {

namespace {

constexpr std::uint32_t kMaxS = 24;

using Element = Subfield::Element;

// Symmetric Gaussian elimination on an n x n row-major block. Appends the
// pivots to diag (when given) and returns the rank; epsilon accumulates eta.
std::uint32_t eliminate(const Subfield& Fq, Element* a, std::uint32_t n, int& epsilon, Element* diag) {
    auto A = [&](std::uint32_t i, std::uint32_t j) -> Element& { return a[i * n + j]; };
    std::uint32_t r = 0;
    epsilon = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
        std::uint32_t piv = n;
        for (std::uint32_t i = k; i < n; ++i) {
            if (A(i, i) != 0) {
                piv = i;
                break;
            }
        }
        if (piv == n) {
            // every remaining diagonal entry is 0: x_i += x_j turns a_ij into a diagonal 2 a_ij
            std::uint32_t bi = n, bj = n;
            for (std::uint32_t i = k; i < n && bi == n; ++i) {
                for (std::uint32_t j = i + 1; j < n; ++j) {
                    if (A(i, j) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
                }
            }
            if (bi == n) break;
            for (std::uint32_t t = k; t < n; ++t) A(bi, t) = Fq.add(A(bi, t), A(bj, t));
            for (std::uint32_t t = k; t < n; ++t) A(t, bi) = Fq.add(A(t, bi), A(t, bj));
            piv = bi;
        }
        if (piv != k) {
            for (std::uint32_t t = k; t < n; ++t) std::swap(A(piv, t), A(k, t));
            for (std::uint32_t t = k; t < n; ++t) std::swap(A(t, piv), A(t, k));
        }
        const Element pivot = A(k, k);
        if (diag) diag[r] = pivot;
        ++r;
        epsilon *= Fq.eta(pivot);
        const Element inv = Fq.inv(pivot);
        for (std::uint32_t i = k + 1; i < n; ++i) {
            if (A(i, k) == 0) continue;
            const Element c = Fq.mul(A(i, k), inv);
            for (std::uint32_t j = k + 1; j < n; ++j) A(i, j) = Fq.sub(A(i, j), Fq.mul(c, A(k, j)));
        }
    }
    return r;
}

// Rank of an F_p matrix given as columns of base-p digit vectors.
std::uint32_t fp_rank(std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t p) {
    const std::size_t nr = rows.size(), nc = nr == 0 ? 0 : rows[0].size();
    std::uint32_t rank = 0;
    for (std::size_t c = 0; c < nc && rank < nr; ++c) {
        std::size_t piv = rank;
        while (piv < nr && rows[piv][c] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(rows[piv], rows[rank]);
        const std::uint32_t inv = static_cast<std::uint32_t>(mod_pow(rows[rank][c], p - 2, p));
        for (auto& v : rows[rank]) v = v * inv % p;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == rank || rows[i][c] == 0) continue;
            const std::uint32_t f = rows[i][c];
            for (std::size_t j = c; j < nc; ++j) rows[i][j] = (rows[i][j] + (p - f) * rows[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::string_view to_string(CaseLabel c) noexcept {
    switch (c) {
        case CaseLabel::CaseA:
            return "CaseA";
        case CaseLabel::CaseBOddK:
            return "CaseB-odd-k";
        case CaseLabel::CaseBEvenK:
            return "CaseB-even-k";
        case CaseLabel::OddSOutOfScope:
            return "OddS-out-of-scope";
    }
    return "?";
}

std::uint32_t CodeParams::pk_mod4() const noexcept { return static_cast<std::uint32_t>(mod_pow(p, k, 4)); }

CodeParams classify_parameters(std::uint32_t p, std::uint32_t m, std::uint32_t k) {
    if (p == 2 || !is_prime(p)) fail(ErrorKind::NotOddPrime, "p = " + std::to_string(p) + " is not an odd prime");
    if (m == 0 || k == 0) fail(ErrorKind::STooSmall, "m and k must be positive");
    CodeParams c;
    c.p = p;
    c.m = m;
    c.k = k;
    c.d = static_cast<std::uint32_t>(gcd(m, k));
    c.s = m / c.d;
    if (c.s < 3) fail(ErrorKind::STooSmall, "s = m/gcd(m,k) = " + std::to_string(c.s) + " but s < 3 is not allowed");
    c.q = static_cast<std::uint64_t>(ipow(p, c.d));
    const unsigned vm = v2(m), vk = v2(k);
    if (vm >= 1 && vm < vk) c.case_label = CaseLabel::CaseA;
    else if (vk < vm) c.case_label = k % 2 == 1 ? CaseLabel::CaseBOddK : CaseLabel::CaseBEvenK;
    else c.case_label = CaseLabel::OddSOutOfScope;
    return c;
}

Subfield::Subfield(const FiniteField& F, std::uint32_t d) : field_(&F), d_(d) {
    if (d == 0 || F.m() % d != 0) fail(ErrorKind::NotADivisor, "subfield degree must divide m");
    order_ = static_cast<std::uint32_t>(ipow(F.p(), d) - 1);
    half_ = order_ / 2;
    stride_ = F.unit_order() / order_;
    zech_.resize(order_);
    for (std::uint32_t t = 0; t < order_; ++t) {
        FieldElement v = F.add(F.one(), F.exp(std::uint64_t{t} * stride_));
        zech_[t] = v.is_zero() ? order_ : F.log(v) / stride_;
    }
}

Element Subfield::inv(Element a) const {
    if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in subfield");
    return (a == 1 ? 0 : order_ - (a - 1)) + 1;
}

int Subfield::eta(Element a) const {
    if (a == 0) fail(ErrorKind::ZeroArgument, "quadratic character of zero");
    return (a - 1) % 2 == 0 ? 1 : -1;
}

FieldElement Subfield::to_field(Element a) const noexcept {
    if (a == 0) return FiniteField::zero();
    return field_->exp(std::uint64_t{a - 1} * stride_);
}

Element Subfield::from_field(FieldElement x) const {
    if (x.is_zero()) return 0;
    const std::uint32_t l = field_->log(x);
    if (l % stride_ != 0) fail(ErrorKind::NotInSubfield, "element is not in the subfield");
    return l / stride_ + 1;
}

DiagonalForm diagonalize(const Subfield& Fq, SymmetricMatrix A) {
    DiagonalForm out;
    out.dimension = A.size;
    out.diagonal.resize(A.size);
    int eps = 1;
    out.rank = eliminate(Fq, A.entries.data(), A.size, eps, out.diagonal.data());
    out.diagonal.resize(out.rank);
    return out;
}

FormContext::FormContext(const FiniteField& F, const CodeParams& params)
    : F_(&F), params_(params), Fq_(F, params.d) {
    if (F.p() != params.p || F.m() != params.m) fail(ErrorKind::InternalInconsistency, "field does not match parameters");
    if (params.s > kMaxS) fail(ErrorKind::DegreeTooLarge, "s too large for the Gram kernels");
    const std::uint64_t n = F.unit_order();
    const std::uint64_t pk = mod_pow(params.p, params.k, n);
    half_exp_ = (mod_pow(params.p, params.k, 2 * n) + 1) / 2 % n;
    two_inv_ = F.inv(F.constant(2));
    half_ = Fq_.from_field(two_inv_);

    trd_.resize(2 * n);
    for (std::uint64_t L = 0; L < n; ++L) trd_[L] = trd_[L + n] = Fq_.from_field(F.trace(F.exp(L), params.d));

    const std::uint32_t s = params.s;
    cross_exp_.resize(std::size_t{s} * s);
    for (std::uint32_t i = 0; i < s; ++i) {
        for (std::uint32_t j = 0; j < s; ++j) cross_exp_[i * s + j] = static_cast<std::uint32_t>((i * pk + j) % n);
    }
}

FieldElement FormContext::phi(FieldElement alpha, FieldElement beta, FieldElement x) const {
    const FiniteField& F = *F_;
    const std::uint32_t k = params_.k;
    FieldElement t1 = F.mul(F.frobenius(alpha, k), F.frobenius(x, 2ULL * k));
    FieldElement t2 = F.mul(F.mul(F.constant(2), F.frobenius(beta, k)), F.frobenius(x, k));
    return F.add(F.add(t1, t2), F.mul(alpha, x));
}

FieldElement FormContext::psi(FieldElement alpha, FieldElement x) const {
    if (x.is_zero()) fail(ErrorKind::ZeroArgument, "psi is undefined at x = 0");
    const FiniteField& F = *F_;
    const std::uint64_t back = params_.m - params_.k % params_.m;
    FieldElement inner = F.add(F.mul(alpha, F.frobenius(x, params_.k)), F.mul(F.frobenius(alpha, back), F.frobenius(x, back)));
    return F.neg(F.mul(F.mul(two_inv_, F.inv(x)), inner));
}

FieldElement FormContext::form(FieldElement alpha, FieldElement beta, FieldElement x) const {
    const FiniteField& F = *F_;
    FieldElement v = F.add(F.mul(alpha, F.mul(F.frobenius(x, params_.k), x)), F.mul(beta, F.mul(x, x)));
    return F.trace(v, params_.d);
}

std::uint32_t FormContext::phi_nullity(FieldElement alpha, FieldElement beta) const {
    const std::uint32_t m = params_.m, p = params_.p;
    std::vector<std::vector<std::uint32_t>> rows(m, std::vector<std::uint32_t>(m));
    std::uint32_t basis = 1;
    for (std::uint32_t c = 0; c < m; ++c, basis *= p) {
        std::uint32_t image = phi(alpha, beta, {basis}).code;
        for (std::uint32_t r = 0; r < m; ++r, image /= p) rows[r][c] = image % p;
    }
    return m - fp_rank(rows, p);
}

std::uint32_t FormContext::rank(FieldElement alpha, FieldElement beta) const {
    if (alpha.is_zero() && beta.is_zero()) fail(ErrorKind::BothZero, "rank is defined for (alpha, beta) != (0, 0)");
    const std::uint32_t nu = phi_nullity(alpha, beta);
    if (nu % params_.d != 0) fail(ErrorKind::InternalInconsistency, "kernel of phi is not an F_q-space");
    const std::uint32_t dim = nu / params_.d;
    if (dim > 2) fail(ErrorKind::InternalInconsistency, "rank outside {s-2, s-1, s}");
    return params_.s - dim;
}

SymmetricMatrix FormContext::gram_matrix(FieldElement alpha, FieldElement beta) const {
    const std::uint32_t s = params_.s, n = F_->unit_order();
    SymmetricMatrix A(s);
    const bool ha = !alpha.is_zero(), hb = !beta.is_zero();
    const std::uint32_t la = ha ? F_->log(alpha) : 0, lb = hb ? F_->log(beta) : 0;
    for (std::uint32_t i = 0; i < s; ++i) {
        for (std::uint32_t j = i; j < s; ++j) {
            Element v = 0;
            if (ha) {
                Element c = Fq_.add(trd_[la + cross_exp_[i * s + j]], trd_[la + cross_exp_[j * s + i]]);
                v = Fq_.mul(c, half_);
            }
            if (hb) v = Fq_.add(v, trd_[lb + (i + j) % n]);
            A.at(i, j) = A.at(j, i) = v;
        }
    }
    return A;
}

FieldElement FormContext::from_coordinates(const std::vector<Element>& z) const {
    FieldElement x = F_->zero();
    for (std::uint32_t i = 0; i < z.size(); ++i) x = F_->add(x, F_->mul(Fq_.to_field(z[i]), F_->exp(i)));
    return x;
}

FormClass FormContext::classify(FieldElement alpha, FieldElement beta) const {
    FormClass out;
    if (alpha.is_zero() && beta.is_zero()) return out;
    const bool ha = !alpha.is_zero(), hb = !beta.is_zero();
    out.rank = classify_log(ha ? F_->log(alpha) : 0, ha, hb ? F_->log(beta) : 0, hb, out.epsilon);
    return out;
}

std::uint32_t FormContext::classify_log(std::uint32_t la, bool ha, std::uint32_t lb, bool hb, int& epsilon) const {
    const std::uint32_t s = params_.s;
    std::array<Element, kMaxS * kMaxS> buf;
    Element* a = buf.data();
    for (std::uint32_t i = 0; i < s; ++i) {
        for (std::uint32_t j = i; j < s; ++j) {
            Element v = 0;
            if (ha) {
                if (i == j) v = trd_[la + cross_exp_[i * s + i]];
                else v = Fq_.mul(Fq_.add(trd_[la + cross_exp_[i * s + j]], trd_[la + cross_exp_[j * s + i]]), half_);
            }
            if (hb) v = Fq_.add(v, trd_[lb + i + j]);
            a[i * s + j] = a[j * s + i] = v;
        }
    }
    return eliminate(Fq_, a, s, epsilon, nullptr);
}

RankCensus FormContext::rank_census(std::uint64_t max_pairs, unsigned workers) const {
    const std::uint64_t size = F_->size();
    if (size * size > max_pairs) fail(ErrorKind::BudgetExceeded, "rank census needs " + std::to_string(size * size) + " pairs");
    std::vector<RankCensus> partial(workers == 0 ? 1 : workers);
    parallel_blocks(size * size, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
        RankCensus c;
        for (std::uint64_t t = std::max<std::uint64_t>(begin, 1); t < end; ++t) {
            const std::uint32_t r = rank({static_cast<std::uint32_t>(t / size)}, {static_cast<std::uint32_t>(t % size)});
            const std::uint32_t i = params_.s - r;
            (i == 0 ? c.n0 : i == 1 ? c.n1 : c.n2)++;
        }
        partial[w] = c;
    });
    RankCensus total;
    for (const auto& c : partial) {
        total.n0 += c.n0;
        total.n1 += c.n1;
        total.n2 += c.n2;
    }
    return total;
}

RankCensus rank_census_closed(const CodeParams& c) {
    const i128 p = c.p;
    i128 pm = 1, pmd = 1, p2d = 1;
    for (std::uint32_t i = 0; i < c.m; ++i) pm *= p;
    for (std::uint32_t i = 0; i < c.m - c.d; ++i) pmd *= p;
    for (std::uint32_t i = 0; i < 2 * c.d; ++i) p2d *= p;
    RankCensus out;
    out.n1 = static_cast<std::uint64_t>(narrow(pmd * (pm - 1)));
    out.n2 = static_cast<std::uint64_t>(narrow(exact_div((pm - 1) * (pmd - 1), p2d - 1, "rank census n2")));
    out.n0 = static_cast<std::uint64_t>(narrow(pm * pm - 1)) - out.n1 - out.n2;
    return out;
}

}  // namespace twozero
