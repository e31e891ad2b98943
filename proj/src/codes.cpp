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

#include "twozero/codes.hpp"

#include <algorithm>

#include "twozero/error.hpp"
#include "twozero/numeric.hpp"
#include "twozero/parallel.hpp"

namespace twozero {

namespace {

using Histogram = std::vector<std::uint64_t>;

WeightDistribution from_histogram(Engine engine, const std::vector<Histogram>& parts) {
    WeightDistribution out;
    out.engine = engine;
    for (std::size_t w = 0; w < parts[0].size(); ++w) {
        std::uint64_t f = 0;
        for (const auto& h : parts) f += h[w];
        if (f != 0) out.rows[static_cast<std::uint32_t>(w)] = f;
    }
    return out;
}

}  // namespace

CyclicCode CyclicCode::build(std::uint32_t p, std::uint32_t m, std::uint32_t k, const FieldOptions& options) {
    CyclicCode c;
    c.params_ = classify_parameters(p, m, k);
    c.field_ = std::make_shared<const FiniteField>(FiniteField::build(p, m, options));
    c.forms_ = std::make_shared<const FormContext>(*c.field_, c.params_);
    const FiniteField& F = *c.field_;
    c.n_ = F.unit_order();

    const std::uint64_t e = c.forms_->half_exponent();
    c.h1_ = F.minimal_polynomial(F.neg(F.inv(F.primitive())));
    c.h2_ = F.minimal_polynomial(F.inv(F.exp(e)));
    if (c.h1_.degree() != static_cast<long>(m) || c.h2_.degree() != static_cast<long>(m)) {
        fail(ErrorKind::DistinctnessViolated, "h1 and h2 must both have degree m");
    }
    if (c.h1_ == c.h2_) fail(ErrorKind::DistinctnessViolated, "h1 and h2 coincide");
    // nonzero roots: no coordinate is identically zero on the code
    if (c.h1_[0] == 0 || c.h2_[0] == 0) fail(ErrorKind::InternalInconsistency, "parity-check factor has root 0");
    auto [g, r] = Polynomial::x_pow_minus_one(p, c.n_).divmod(c.h1_ * c.h2_);
    if (!r.is_zero()) fail(ErrorKind::InternalInconsistency, "h1 h2 does not divide x^n - 1");
    c.g_ = std::move(g);

    const std::uint64_t f = (c.n_ / 2 + 1) % c.n_;  // -pi = pi^(n/2 + 1)
    c.u_.resize(c.n_);
    c.w_.resize(c.n_);
    for (std::uint64_t i = 0; i < c.n_; ++i) {
        c.u_[i] = static_cast<std::uint32_t>(e * i % c.n_);
        c.w_[i] = static_cast<std::uint32_t>(f * i % c.n_);
    }
    return c;
}

std::vector<std::uint8_t> CyclicCode::codeword(FieldElement alpha, FieldElement beta) const {
    const FiniteField& F = *field_;
    std::vector<std::uint8_t> out(n_, 0);
    const auto tp = F.trace_pow_doubled();
    const bool ha = !alpha.is_zero(), hb = !beta.is_zero();
    const std::uint32_t la = ha ? F.log(alpha) : 0, lb = hb ? F.log(beta) : 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
        std::uint32_t t = (ha ? tp[la + u_[i]] : 0) + (hb ? tp[lb + w_[i]] : 0);
        out[i] = static_cast<std::uint8_t>(t % params_.p);
    }
    return out;
}

std::uint32_t CyclicCode::codeword_weight(FieldElement alpha, FieldElement beta) const {
    const FiniteField& F = *field_;
    if (alpha.is_zero() && beta.is_zero()) return 0;
    const std::uint8_t* tp = F.trace_pow_doubled().data();
    const std::uint32_t p = params_.p;
    std::uint32_t zeros = 0;
    if (!alpha.is_zero() && !beta.is_zero()) {
        const std::uint8_t* ta = tp + F.log(alpha);
        const std::uint8_t* tb = tp + F.log(beta);
        for (std::uint32_t i = 0; i < n_; ++i) {
            const std::uint32_t t = ta[u_[i]] + tb[w_[i]];
            zeros += (t == 0) | (t == p);
        }
    } else if (!alpha.is_zero()) {
        const std::uint8_t* ta = tp + F.log(alpha);
        for (std::uint32_t i = 0; i < n_; ++i) zeros += ta[u_[i]] == 0;
    } else {
        const std::uint8_t* tb = tp + F.log(beta);
        for (std::uint32_t i = 0; i < n_; ++i) zeros += tb[w_[i]] == 0;
    }
    return n_ - zeros;
}

std::string_view to_string(Engine e) noexcept {
    switch (e) {
        case Engine::Brute:
            return "brute";
        case Engine::Sums:
            return "sums";
        case Engine::Closed:
            return "closed";
    }
    return "?";
}

std::uint64_t WeightDistribution::total() const {
    std::uint64_t t = 0;
    for (const auto& [w, f] : rows) t += f;
    return t;
}

std::optional<std::uint32_t> WeightDistribution::minimum_distance() const {
    for (const auto& [w, f] : rows) {
        if (w != 0 && f != 0) return w;
    }
    return std::nullopt;
}

WeightDistribution weight_distribution_brute(const CyclicCode& code, const EngineOptions& opts) {
    const std::uint64_t size = code.field().size(), n = code.length();
    const std::uint64_t need = size * size * n;
    if (need > opts.brute_budget) {
        fail(ErrorKind::BudgetExceeded, "brute enumeration needs " + std::to_string(need) + " coordinate checks, budget is " +
                                            std::to_string(opts.brute_budget));
    }
    const unsigned workers = std::max(1u, opts.workers);
    std::vector<Histogram> parts(workers, Histogram(n + 1, 0));
    parallel_blocks(size * size, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
        auto& hist = parts[w];
        for (std::uint64_t t = begin; t < end; ++t) {
            ++hist[code.codeword_weight({static_cast<std::uint32_t>(t / size)}, {static_cast<std::uint32_t>(t % size)})];
        }
    });
    return from_histogram(Engine::Brute, parts);
}

WeightDistribution weight_distribution_sums(const CyclicCode& code, const EngineOptions& opts) {
    const FormContext& ctx = code.forms();
    const CodeParams& P = code.params();
    const FiniteField& F = code.field();
    const std::uint64_t size = F.size();
    const std::uint32_t n = F.unit_order(), p = P.p;
    const unsigned workers = std::max(1u, opts.workers);
    const auto table = classify_all(ctx, workers, opts.pair_budget);

    // cyclotomic image of every possible T value, indexed like the table
    std::vector<std::vector<std::int64_t>> image(2 * (P.s + 1));
    for (std::uint32_t c = 0; c < image.size(); ++c) {
        image[c] = form_sum_value(P, {c / 2, c % 2 == 1 ? -1 : 1}).image().coefficients();
    }
    std::vector<std::uint32_t> lu(p - 1);  // logs of F_p^*
    for (std::uint32_t j = 0; j < p - 1; ++j) lu[j] = j * (n / (p - 1));
    const std::uint32_t e = static_cast<std::uint32_t>(ctx.half_exponent()), f = (n / 2 + 1) % n;
    const auto exp = F.exp_table();
    const std::int64_t base2p = 2 * static_cast<std::int64_t>(p) * (ipow(p, P.m) - ipow(p, P.m - 1));

    std::vector<Histogram> parts(workers, Histogram(n + 1, 0));
    parallel_blocks(size * size, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
        auto& hist = parts[w];
        std::vector<std::int64_t> acc(p - 1);
        for (std::uint64_t t = begin; t < end; ++t) {
            const std::uint32_t a = static_cast<std::uint32_t>(t / size), b = static_cast<std::uint32_t>(t % size);
            const std::uint32_t la = a ? F.log({a}) : 0, lb = b ? F.log({b}) : 0;
            std::fill(acc.begin(), acc.end(), 0);
            for (std::uint32_t j = 0; j < p - 1; ++j) {
                const std::uint64_t a1 = a ? exp[(la + lu[j]) % n] : 0, b1 = b ? exp[(lb + lu[j]) % n] : 0;
                const std::uint64_t a2 = a ? exp[(la + lu[j] + e) % n] : 0, b2 = b ? exp[(lb + lu[j] + f) % n] : 0;
                const auto& i1 = image[table[a1 * size + b1]];
                const auto& i2 = image[table[a2 * size + b2]];
                for (std::uint32_t c = 0; c + 1 < p; ++c) acc[c] += i1[c] + i2[c];
            }
            for (std::uint32_t c = 1; c + 1 < p; ++c) {
                if (acc[c] != 0) fail(ErrorKind::NonRationalSum, "sum over u of S(u alpha, u beta) is not rational");
            }
            const std::int64_t num = base2p - acc[0];
            if (num % (2 * p) != 0 || num < 0 || num / (2 * p) > n) {
                fail(ErrorKind::NonIntegralWeight, "weight formula gives a non-integral or out-of-range weight");
            }
            ++hist[num / (2 * p)];
        }
    });
    return from_histogram(Engine::Sums, parts);
}

WeightDistribution weight_distribution_closed(const CodeParams& c) {
    if (!c.has_closed_form()) fail(ErrorKind::UnsupportedCase, "no closed-form weight table for " + std::string(to_string(c.case_label)));
    auto P = [&](std::int64_t e) {
        if (e < 0) fail(ErrorKind::InternalInconsistency, "negative exponent in weight table");
        i128 r = 1;
        for (std::int64_t i = 0; i < e; ++i) r *= c.p;
        return r;
    };
    const std::int64_t m = c.m, d = c.d;
    const i128 p = c.p, pm = P(m), pm1 = pm - 1, pd = P(d), p2d1 = P(2 * d) - 1;
    const i128 base = P(m - 1) * (p - 1);
    const i128 unit = P(m / 2 - 1) * (p - 1);  // (p-1) p^(m/2-1)
    WeightDistribution out;
    out.engine = Engine::Closed;
    auto row = [&](i128 weight2, i128 freq) {  // weight given doubled, to keep the halves exact
        const i128 w = exact_div(weight2, 2, "weight table");
        if (w < 0 || w > pm1 || freq < 0) fail(ErrorKind::InternalInconsistency, "weight table row out of range");
        out.rows[static_cast<std::uint32_t>(w)] += static_cast<std::uint64_t>(narrow(freq));
    };
    out.rows[0] = 1;
    const i128 zero_row = exact_div((P(m + d) - 3 * pm + pd + 1) * pm1, 2 * (pd - 1), "weight table");
    row(2 * base, zero_row);
    if (c.is_case_a()) {
        const i128 h = P((m - d) / 2), rd = P(d / 2);
        const i128 f_pm = exact_div((P(m - d) - 1) * pm1, p2d1, "weight table");
        const i128 f_minus = exact_div(h * (h - 1) * pm1, 2, "weight table");
        const i128 f_plus = exact_div(h * (h + 1) * pm1, 2, "weight table");
        const i128 f_two = exact_div((pd - 1) * (P(2 * m) - 1), 4 * (pd + 1), "weight table");
        row(2 * base + (pd - 1) * unit, f_pm);
        row(2 * base - (pd - 1) * unit, f_pm);
        row(2 * base + (rd - 1) * unit, f_minus);
        row(2 * base + (rd + 1) * unit, f_minus);
        row(2 * base - (rd + 1) * unit, f_plus);
        row(2 * base - (rd - 1) * unit, f_plus);
        row(2 * base + 2 * unit, f_two);
        row(2 * base - 2 * unit, f_two);
    } else {
        const i128 h = P(m / 2), hd = P(m / 2 - d);
        row(2 * base - (pd - 1) * unit, exact_div((hd + 1) * (h - 1) * pm1, p2d1, "weight table"));
        row(2 * base + (pd - 1) * unit, exact_div((hd - 1) * (h + 1) * pm1, p2d1, "weight table"));
        const i128 f_two_plus = exact_div((h - 1) * (h - 1) * (pd - 1) * pm1, 4 * (pd + 1), "weight table");
        const i128 f_two_minus = exact_div((h + 1) * (h + 1) * (pd - 1) * pm1, 4 * (pd + 1), "weight table");
        if (c.case_label == CaseLabel::CaseBOddK) {
            row(2 * base + unit, hd * (h - 1) * pm1);
            row(2 * base - unit, hd * (h + 1) * pm1);
        } else {
            const i128 rd = P(d / 2);
            const i128 f_minus = exact_div(hd * (h - 1) * pm1, 2, "weight table");
            const i128 f_plus = exact_div(hd * (h + 1) * pm1, 2, "weight table");
            row(2 * base - (rd - 1) * unit, f_minus);
            row(2 * base + (rd + 1) * unit, f_minus);
            row(2 * base - (rd + 1) * unit, f_plus);
            row(2 * base + (rd - 1) * unit, f_plus);
        }
        row(2 * base + 2 * unit, f_two_plus);
        row(2 * base - 2 * unit, f_two_minus);
    }
    return out;
}

WeightDistribution weight_distribution(const CyclicCode& code, Engine engine, const EngineOptions& opts) {
    switch (engine) {
        case Engine::Brute:
            return weight_distribution_brute(code, opts);
        case Engine::Sums:
            return weight_distribution_sums(code, opts);
        case Engine::Closed:
            return weight_distribution_closed(code.params());
    }
    fail(ErrorKind::InternalInconsistency, "unknown engine");
}

bool pless_first_moment_holds(const WeightDistribution& dist, const CodeParams& c) {
    i128 lhs = 0;
    for (const auto& [w, f] : dist.rows) lhs += i128{w} * f;
    i128 pw = 1;
    for (std::uint32_t i = 0; i + 1 < 2 * c.m; ++i) pw *= c.p;
    const i128 n = i128{ipow(c.p, c.m)} - 1;
    return lhs == n * (c.p - 1) * pw;
}

bool CodeReport::all_agree() const {
    return std::all_of(agreement.begin(), agreement.end(), [](const EngineAgreement& a) { return a.agree; });
}

std::string CodeReport::summary() const {
    std::string s = "[" + std::to_string(length) + ", " + std::to_string(dimension);
    if (minimum_distance) s += ", " + std::to_string(*minimum_distance);
    return s + "]";
}

CodeReport code_report(const CyclicCode& code, const std::vector<Engine>& engines, const EngineOptions& opts) {
    CodeReport r;
    r.params = code.params();
    r.length = code.length();
    r.dimension = code.dimension();
    r.h1 = code.h1().to_string();
    r.h2 = code.h2().to_string();
    r.generator = code.generator().to_string();
    for (Engine e : engines) {
        try {
            r.distributions.emplace(e, weight_distribution(code, e, opts));
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::BudgetExceeded && err.kind() != ErrorKind::UnsupportedCase) throw;
            r.unavailable[e] = err.what();
        }
    }
    for (auto i = r.distributions.begin(); i != r.distributions.end(); ++i) {
        for (auto j = std::next(i); j != r.distributions.end(); ++j) {
            r.agreement.push_back({i->first, j->first, i->second.same_rows(j->second)});
        }
    }
    if (!r.distributions.empty()) r.minimum_distance = r.distributions.begin()->second.minimum_distance();
    return r;
}

}  // namespace twozero
