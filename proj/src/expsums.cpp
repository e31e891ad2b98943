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

#include <algorithm>

#include "twozero/error.hpp"
#include "twozero/numeric.hpp"
#include "twozero/parallel.hpp"

namespace twozero {

namespace {

// p^e as a 128-bit integer; e may be given as a signed expression but must be >= 0.
struct Powers {
    std::uint32_t p;
    i128 operator()(std::int64_t e) const {
        if (e < 0) fail(ErrorKind::InternalInconsistency, "negative exponent in closed form");
        i128 r = 1;
        for (std::int64_t i = 0; i < e; ++i) r *= p;
        return r;
    }
};

std::uint64_t as_count(i128 v) {
    if (v < 0) fail(ErrorKind::InternalInconsistency, "negative frequency in closed form");
    return static_cast<std::uint64_t>(narrow(v));
}

void require_budget(std::uint64_t need, std::uint64_t budget, const char* what) {
    if (need > budget) {
        fail(ErrorKind::BudgetExceeded, std::string(what) + " needs " + std::to_string(need) + " steps, budget is " +
                                            std::to_string(budget));
    }
}

// Per-context tables for direct summation in the log domain: for x = pi^i,
// Tr(alpha x^(p^k+1)) = tp[log alpha + U[i]] and Tr(beta x^2) = tp[log beta + W[i]].
class DirectKernel {
   public:
    explicit DirectKernel(const FormContext& ctx)
        : p_(ctx.params().p), n_(ctx.field().unit_order()), tp_(ctx.field().trace_pow_doubled()), U_(n_), W_(n_) {
        const std::uint64_t pk1 = (mod_pow(p_, ctx.params().k, n_) + 1) % n_;
        for (std::uint32_t i = 0; i < n_; ++i) {
            U_[i] = static_cast<std::uint32_t>(std::uint64_t{i} * pk1 % n_);
            W_[i] = static_cast<std::uint32_t>(2ULL * i % n_);
        }
        half_exp_ = static_cast<std::uint32_t>(ctx.half_exponent());
        minus_pi_ = static_cast<std::uint32_t>((1 + n_ / 2) % n_);
    }

    std::uint32_t n() const noexcept { return n_; }

    // Adds the trace-value counts of (alpha, beta), given by logs (ha/hb false for zero), to out[0..p).
    void accumulate(std::uint32_t la, bool ha, std::uint32_t lb, bool hb, std::int64_t* out) const {
        out[0] += 1;  // x = 0
        if (!ha && !hb) {
            out[0] += n_;
            return;
        }
        const std::uint8_t* tp = tp_.data();
        if (ha && hb) {
            const std::uint8_t* ta = tp + la;
            const std::uint8_t* tb = tp + lb;
            for (std::uint32_t i = 0; i < n_; ++i) {
                std::uint32_t t = ta[U_[i]] + tb[W_[i]];
                out[t >= p_ ? t - p_ : t]++;
            }
        } else if (ha) {
            const std::uint8_t* ta = tp + la;
            for (std::uint32_t i = 0; i < n_; ++i) out[ta[U_[i]]]++;
        } else {
            const std::uint8_t* tb = tp + lb;
            for (std::uint32_t i = 0; i < n_; ++i) out[tb[W_[i]]]++;
        }
    }

    // Log of the companion pair's entries.
    std::uint32_t companion_alpha(std::uint32_t la) const noexcept { return (la + half_exp_) % n_; }
    std::uint32_t companion_beta(std::uint32_t lb) const noexcept { return (lb + minus_pi_) % n_; }

   private:
    std::uint32_t p_;
    std::uint32_t n_;
    std::span<const std::uint8_t> tp_;
    std::vector<std::uint32_t> U_;
    std::vector<std::uint32_t> W_;
    std::uint32_t half_exp_ = 0;
    std::uint32_t minus_pi_ = 0;
};

struct LogPair {
    std::uint32_t la, lb;
    bool ha, hb;
};

LogPair logs_of(const FiniteField& F, std::uint32_t a, std::uint32_t b) {
    LogPair lp{0, 0, a != 0, b != 0};
    if (lp.ha) lp.la = F.log({a});
    if (lp.hb) lp.lb = F.log({b});
    return lp;
}

// Visit every (alpha, beta) with the S trace counts (both terms accumulated).
template <class Visit>
void for_each_s_counts(const FormContext& ctx, const DirectKernel& K, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
    const FiniteField& F = ctx.field();
    const std::uint32_t size = F.size(), p = ctx.params().p;
    std::vector<std::int64_t> counts(p);
    for (std::uint64_t t = begin; t < end; ++t) {
        const std::uint32_t a = static_cast<std::uint32_t>(t / size), b = static_cast<std::uint32_t>(t % size);
        const LogPair lp = logs_of(F, a, b);
        std::fill(counts.begin(), counts.end(), 0);
        K.accumulate(lp.la, lp.ha, lp.lb, lp.hb, counts.data());
        K.accumulate(K.companion_alpha(lp.la), lp.ha, K.companion_beta(lp.lb), lp.hb, counts.data());
        visit(a, b, counts);
    }
}

template <class Census>
void merge_into(Census& total, const Census& part) {
    for (const auto& [v, f] : part) total[v] += f;
}

SymbolicSumValue gauss_sum_of_subfield(const CodeParams& c) {
    const int pstar = c.p % 4 == 1 ? 1 : -1;
    if (c.d % 2 == 1) {
        // g_p^d = (p*)^((d-1)/2) g_p = sign * sqrt(q*) under the canonical root
        const int sign = ((c.d - 1) / 2) % 2 == 0 ? 1 : pstar;
        return SymbolicSumValue(c.p, c.d, 0, sign);
    }
    const int sign = (c.d / 2) % 2 == 0 ? 1 : pstar;
    return SymbolicSumValue::rational(c.p, c.d, -sign * ipow(c.p, c.d / 2));
}

}  // namespace

std::pair<FieldElement, FieldElement> companion(const FormContext& ctx, FieldElement alpha, FieldElement beta) {
    const FiniteField& F = ctx.field();
    return {F.mul(ctx.twist(), alpha), F.neg(F.mul(F.primitive(), beta))};
}

std::vector<std::int64_t> trace_value_counts(const FormContext& ctx, FieldElement alpha, FieldElement beta) {
    const FiniteField& F = ctx.field();
    std::vector<std::int64_t> counts(ctx.params().p, 0);
    const std::uint64_t pk = mod_pow(ctx.params().p, ctx.params().k, F.unit_order());
    for (std::uint32_t c = 0; c < F.size(); ++c) {
        const FieldElement x{c};
        const FieldElement v = F.add(F.mul(alpha, F.mul(F.pow(x, static_cast<std::int64_t>(pk)), x)), F.mul(beta, F.mul(x, x)));
        ++counts[F.trace(v)];
    }
    return counts;
}

CyclotomicInteger T_direct(const FormContext& ctx, FieldElement alpha, FieldElement beta) {
    return CyclotomicInteger::from_counts(ctx.params().p, trace_value_counts(ctx, alpha, beta));
}

CyclotomicInteger S_direct(const FormContext& ctx, FieldElement alpha, FieldElement beta) {
    auto [a2, b2] = companion(ctx, alpha, beta);
    return T_direct(ctx, alpha, beta) + T_direct(ctx, a2, b2);
}

SymbolicSumValue form_sum_value(const CodeParams& c, FormClass cls) {
    const SymbolicSumValue Gq = gauss_sum_of_subfield(c);
    return Gq.pow(cls.rank) * SymbolicSumValue(c.p, c.d, cls.epsilon, 0, c.d * (c.s - cls.rank));
}

SymbolicSumValue T_fast(const FormContext& ctx, FieldElement alpha, FieldElement beta) {
    return form_sum_value(ctx.params(), ctx.classify(alpha, beta));
}

SymbolicSumValue S_fast(const FormContext& ctx, FieldElement alpha, FieldElement beta) {
    auto [a2, b2] = companion(ctx, alpha, beta);
    return T_fast(ctx, alpha, beta) + T_fast(ctx, a2, b2);
}

CyclotomicCensus t_census_direct(const FormContext& ctx, unsigned workers, std::uint64_t budget) {
    const FiniteField& F = ctx.field();
    const std::uint64_t size = F.size(), p = ctx.params().p;
    require_budget(size * size * size, budget, "direct T census");
    const DirectKernel K(ctx);
    std::vector<CyclotomicCensus> parts(std::max(1u, workers));
    parallel_blocks(size * size, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
        std::vector<std::int64_t> counts(p);
        for (std::uint64_t t = begin; t < end; ++t) {
            const LogPair lp = logs_of(F, static_cast<std::uint32_t>(t / size), static_cast<std::uint32_t>(t % size));
            std::fill(counts.begin(), counts.end(), 0);
            K.accumulate(lp.la, lp.ha, lp.lb, lp.hb, counts.data());
            parts[w][CyclotomicInteger::from_counts(static_cast<std::uint32_t>(p), counts)]++;
        }
    });
    CyclotomicCensus total;
    for (const auto& part : parts) merge_into(total, part);
    return total;
}

CyclotomicCensus s_census_direct(const FormContext& ctx, unsigned workers, std::uint64_t budget) {
    const std::uint64_t size = ctx.field().size();
    const std::uint32_t p = ctx.params().p;
    require_budget(2 * size * size * size, budget, "direct S census");
    const DirectKernel K(ctx);
    std::vector<CyclotomicCensus> parts(std::max(1u, workers));
    parallel_blocks(size * size, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
        for_each_s_counts(ctx, K, begin, end, [&](std::uint32_t, std::uint32_t, const std::vector<std::int64_t>& counts) {
            parts[w][CyclotomicInteger::from_counts(p, counts)]++;
        });
    });
    CyclotomicCensus total;
    for (const auto& part : parts) merge_into(total, part);
    return total;
}

std::vector<std::uint8_t> classify_all(const FormContext& ctx, unsigned workers, std::uint64_t budget) {
    const std::uint64_t size = ctx.field().size();
    require_budget(size * size, budget, "form classification");
    std::vector<std::uint8_t> table(size * size);
    parallel_blocks(size * size, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
        for (std::uint64_t t = begin; t < end; ++t) {
            const FormClass c = ctx.classify({static_cast<std::uint32_t>(t / size)}, {static_cast<std::uint32_t>(t % size)});
            table[t] = static_cast<std::uint8_t>(c.rank * 2 + (c.epsilon < 0 ? 1 : 0));
        }
    });
    return table;
}

namespace {

FormClass unpack(std::uint8_t code) { return {static_cast<std::uint32_t>(code / 2), code % 2 == 1 ? -1 : 1}; }

}  // namespace

ValueDistribution t_census_fast(const FormContext& ctx, unsigned workers, std::uint64_t budget) {
    const auto table = classify_all(ctx, workers, budget);
    std::vector<std::uint64_t> hist(256, 0);
    for (std::uint8_t c : table) ++hist[c];
    ValueDistribution out;
    for (std::uint32_t c = 0; c < hist.size(); ++c) {
        if (hist[c] != 0) out.add(form_sum_value(ctx.params(), unpack(static_cast<std::uint8_t>(c))), hist[c]);
    }
    return out;
}

ValueDistribution s_census_fast(const FormContext& ctx, unsigned workers, std::uint64_t budget) {
    const auto table = classify_all(ctx, workers, budget);
    const FiniteField& F = ctx.field();
    const std::uint64_t size = F.size();
    const DirectKernel K(ctx);
    const auto exp = F.exp_table();
    // histogram over (class of the pair, class of its companion)
    std::vector<std::vector<std::uint64_t>> parts(std::max(1u, workers), std::vector<std::uint64_t>(256 * 256, 0));
    parallel_blocks(size * size, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
        auto& hist = parts[w];
        for (std::uint64_t t = begin; t < end; ++t) {
            const LogPair lp = logs_of(F, static_cast<std::uint32_t>(t / size), static_cast<std::uint32_t>(t % size));
            const std::uint64_t a2 = lp.ha ? exp[K.companion_alpha(lp.la)] : 0;
            const std::uint64_t b2 = lp.hb ? exp[K.companion_beta(lp.lb)] : 0;
            ++hist[table[t] * 256 + table[a2 * size + b2]];
        }
    });
    ValueDistribution out;
    for (std::uint32_t c = 0; c < 256 * 256; ++c) {
        std::uint64_t f = 0;
        for (const auto& h : parts) f += h[c];
        if (f == 0) continue;
        const CodeParams& P = ctx.params();
        out.add(form_sum_value(P, unpack(static_cast<std::uint8_t>(c / 256))) +
                    form_sum_value(P, unpack(static_cast<std::uint8_t>(c % 256))),
                f);
    }
    return out;
}

ValueDistribution t_distribution_closed(const CodeParams& c) {
    const Powers P{c.p};
    const std::int64_t m = c.m, d = c.d, s = c.s;
    const i128 pm1 = P(m) - 1, p2d1 = P(2 * d) - 1;
    auto val = [&](std::int64_t a, std::int64_t b, std::int64_t e) {
        return SymbolicSumValue(c.p, c.d, a, b, static_cast<std::uint32_t>(e));
    };
    ValueDistribution out;
    out.add(val(1, 0, m), 1);
    if (s % 2 == 1) {
        const i128 f1 = exact_div(P(2 * d) * (P(m) - P(m - d) - P(m - 2 * d) + 1) * pm1, 2 * p2d1, "T table");
        const i128 h = P((m - d) / 2);
        const i128 f2 = exact_div(h * (h + 1) * pm1, 2, "T table");
        const i128 f3 = exact_div(h * (h - 1) * pm1, 2, "T table");
        const i128 f4 = exact_div((P(m - d) - 1) * pm1, 2 * p2d1, "T table");
        for (int sign : {1, -1}) {
            out.add(val(0, sign, d * (s - 1) / 2), as_count(f1));
            out.add(val(0, sign, d * (s + 1) / 2), as_count(f4));
        }
        out.add(val(1, 0, (m + d) / 2), as_count(f2));
        out.add(val(-1, 0, (m + d) / 2), as_count(f3));
    } else {
        const i128 h = P(m / 2), hd = P(m / 2 - d);
        const i128 base = P(m) - P(m - d) - P(m - 2 * d) + 1;
        const i128 f1 = exact_div(P(2 * d) * (base + h - hd) * pm1, 2 * p2d1, "T table");
        const i128 f2 = exact_div(P(2 * d) * (base - h + hd) * pm1, 2 * p2d1, "T table");
        const i128 f3 = exact_div(P(m - d) * pm1, 2, "T table");
        const i128 f4 = exact_div((h - 1) * (hd + 1) * pm1, 2 * p2d1, "T table");
        const i128 f5 = exact_div((h + 1) * (hd - 1) * pm1, 2 * p2d1, "T table");
        out.add(val(1, 0, m / 2), as_count(f1));
        out.add(val(-1, 0, m / 2), as_count(f2));
        out.add(val(0, 1, d * s / 2), as_count(f3));
        out.add(val(0, -1, d * s / 2), as_count(f3));
        out.add(val(1, 0, m / 2 + d), as_count(f4));
        out.add(val(-1, 0, m / 2 + d), as_count(f5));
    }
    return out;
}

ValueDistribution s_distribution_closed(const CodeParams& c) {
    if (!c.has_closed_form()) fail(ErrorKind::UnsupportedCase, "no closed-form S table for this case");
    const Powers P{c.p};
    const std::int64_t m = c.m, d = c.d;
    const i128 pm1 = P(m) - 1, pd = P(d);
    auto val = [&](std::int64_t a, std::int64_t b, std::int64_t e) {
        return SymbolicSumValue(c.p, c.d, a, b, static_cast<std::uint32_t>(e));
    };
    const std::int64_t half = m / 2;  // m is even in both cases
    ValueDistribution out;
    out.add(val(2, 0, m), 1);
    out.add(val(0, 0, 0), as_count(exact_div((P(m + d) - 3 * P(m) + pd + 1) * pm1, 2 * (pd - 1), "S table")));
    const std::int64_t pd64 = narrow(pd);
    if (c.is_case_a()) {
        const i128 h = P((m - d) / 2);
        const std::int64_t rd = ipow(c.p, c.d / 2);
        const auto f_pm = as_count(exact_div((P(m - d) - 1) * pm1, P(2 * d) - 1, "S table"));
        const auto f_minus = as_count(exact_div(h * (h - 1) * pm1, 2, "S table"));
        const auto f_plus = as_count(exact_div(h * (h + 1) * pm1, 2, "S table"));
        const auto f_two = as_count(exact_div((pd - 1) * (P(2 * m) - 1), 4 * (pd + 1), "S table"));
        for (int sign : {1, -1}) {
            out.add(val(sign * (pd64 - 1), 0, half), f_pm);
            out.add(val(sign - rd, 0, half), f_minus);
            out.add(val(sign + rd, 0, half), f_plus);
            out.add(val(2 * sign, 0, half), f_two);
        }
    } else {
        const i128 h = P(half), hd = P(half - d), p2d1 = P(2 * d) - 1;
        out.add(val(pd64 - 1, 0, half), as_count(exact_div((hd + 1) * (h - 1) * pm1, p2d1, "S table")));
        out.add(val(1 - pd64, 0, half), as_count(exact_div((hd - 1) * (h + 1) * pm1, p2d1, "S table")));
        const auto f_minus = as_count(exact_div(hd * (h - 1) * pm1, 2, "S table"));
        const auto f_plus = as_count(exact_div(hd * (h + 1) * pm1, 2, "S table"));
        for (int sign : {1, -1}) {
            out.add(val(-1, sign, half), f_minus);
            out.add(val(1, sign, half), f_plus);
        }
        out.add(val(2, 0, half), as_count(exact_div((h + 1) * (h + 1) * (pd - 1) * pm1, 4 * (pd + 1), "S table")));
        out.add(val(-2, 0, half), as_count(exact_div((h - 1) * (h - 1) * (pd - 1) * pm1, 4 * (pd + 1), "S table")));
    }
    return out;
}

std::uint64_t count_E1(const FormContext& ctx, CountMode mode, std::uint64_t budget) {
    const CodeParams& c = ctx.params();
    if (mode == CountMode::Closed) {
        const std::uint64_t full = 2 * static_cast<std::uint64_t>(ipow(c.p, c.m)) - 1;
        if (c.is_case_a()) return full;
        if (c.is_case_b()) return c.pk_mod4() == 1 ? full : 1;
        fail(ErrorKind::UnsupportedCase, "E1 closed form needs CaseA or CaseB");
    }
    const FiniteField& F = ctx.field();
    const std::uint64_t size = F.size();
    require_budget(size * size, budget, "E1 enumeration");
    const std::int64_t pk1 = static_cast<std::int64_t>(mod_pow(c.p, c.k, F.unit_order()) + 1);
    std::vector<FieldElement> sq(size), pw(size);
    for (std::uint32_t x = 0; x < size; ++x) {
        sq[x] = F.mul({x}, {x});
        pw[x] = F.pow({x}, pk1);
    }
    std::uint64_t count = 0;
    for (std::uint32_t x = 0; x < size; ++x) {
        for (std::uint32_t y = 0; y < size; ++y) {
            if (F.add(sq[x], sq[y]).is_zero() && F.add(pw[x], pw[y]).is_zero()) ++count;
        }
    }
    return count;
}

std::uint64_t count_E2(const FormContext& ctx, CountMode mode, std::uint64_t budget) {
    const CodeParams& c = ctx.params();
    if (mode == CountMode::Closed) {
        if (!c.is_case_b()) fail(ErrorKind::UnsupportedCase, "E2 closed form needs CaseB");
        return c.pk_mod4() == 1 ? 2 * static_cast<std::uint64_t>(ipow(c.p, c.m)) - 1 : 1;
    }
    const FiniteField& F = ctx.field();
    const std::uint64_t size = F.size();
    require_budget(size * size * size, budget, "E2 enumeration");
    const std::int64_t pk1 = static_cast<std::int64_t>(mod_pow(c.p, c.k, F.unit_order()) + 1);
    std::vector<FieldElement> sq(size), pw(size), zsq(size), zpw(size);
    for (std::uint32_t x = 0; x < size; ++x) {
        sq[x] = F.mul({x}, {x});
        pw[x] = F.pow({x}, pk1);
        zsq[x] = F.neg(F.mul(F.primitive(), sq[x]));
        zpw[x] = F.mul(ctx.twist(), pw[x]);
    }
    std::uint64_t count = 0;
    for (std::uint32_t x = 0; x < size; ++x) {
        for (std::uint32_t y = 0; y < size; ++y) {
            const FieldElement A = F.add(sq[x], sq[y]), B = F.add(pw[x], pw[y]);
            for (std::uint32_t z = 0; z < size; ++z) {
                if (F.add(A, zsq[z]).is_zero() && F.add(B, zpw[z]).is_zero()) ++count;
            }
        }
    }
    return count;
}

std::vector<IdentityCheck> verify_power_identities(const FormContext& ctx, unsigned workers, std::uint64_t budget) {
    const CodeParams& c = ctx.params();
    if (!c.has_closed_form()) fail(ErrorKind::UnsupportedCase, "power identities need CaseA or CaseB");
    const std::uint64_t size = ctx.field().size();
    require_budget(2 * size * size * size, budget, "power identities");
    const std::uint32_t p = c.p;
    const DirectKernel K(ctx);

    struct Sums {
        CyclotomicInteger s1, s2, s3, n1_s1, n2_s1, n1_s2, n2_s2;
    };
    std::vector<Sums> parts(std::max(1u, workers));
    for (auto& part : parts) {
        part = {CyclotomicInteger(p), CyclotomicInteger(p), CyclotomicInteger(p), CyclotomicInteger(p),
                CyclotomicInteger(p), CyclotomicInteger(p), CyclotomicInteger(p)};
    }
    parallel_blocks(size * size, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
        Sums& acc = parts[w];
        for_each_s_counts(ctx, K, begin, end, [&](std::uint32_t a, std::uint32_t b, const std::vector<std::int64_t>& counts) {
            const CyclotomicInteger S = CyclotomicInteger::from_counts(p, counts);
            const CyclotomicInteger S2 = S * S;
            acc.s1 += S;
            acc.s2 += S2;
            acc.s3 += S2 * S;
            if (a == 0 && b == 0) return;
            const std::uint32_t r = ctx.classify({a}, {b}).rank;
            if (r + 1 == c.s) {
                acc.n1_s1 += S;
                acc.n1_s2 += S2;
            } else if (r + 2 == c.s) {
                acc.n2_s1 += S;
                acc.n2_s2 += S2;
            }
        });
    });
    Sums t = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
        t.s1 += parts[i].s1;
        t.s2 += parts[i].s2;
        t.s3 += parts[i].s3;
        t.n1_s1 += parts[i].n1_s1;
        t.n2_s1 += parts[i].n2_s1;
        t.n1_s2 += parts[i].n1_s2;
        t.n2_s2 += parts[i].n2_s2;
    }

    const Powers P{p};
    const std::int64_t m = c.m, d = c.d;
    const i128 pm = P(m), pd = P(d);
    std::vector<IdentityCheck> out;
    auto check = [&](std::string name, const CyclotomicInteger& lhs, i128 rhs) {
        const CyclotomicInteger r = CyclotomicInteger::rational(p, narrow(rhs));
        out.push_back({std::move(name), lhs.to_string(), r.to_string(), lhs == r});
    };
    const std::int64_t w1 = narrow(pd - 1), w2 = narrow(pd * pd - 1);
    if (c.is_case_a()) {
        check("sum S^2 = 4p^(3m)", t.s2, 4 * pm * pm * pm);
        check("(p^d-1) sum_N1 S^2 + (p^2d-1) sum_N2 S^2", t.n1_s2.scaled(w1) + t.n2_s2.scaled(w2),
              pm * (pm - 1) * (2 * pm * pd - 2 * pm + 2 * pd - pd * pd - 1));
    } else {
        const bool one = c.pk_mod4() == 1;
        check("sum S = 2p^(2m)", t.s1, 2 * pm * pm);
        check(one ? "sum S^2 = 4p^(3m)" : "sum S^2 = 4p^(2m)", t.s2, one ? 4 * pm * pm * pm : 4 * pm * pm);
        const i128 tail = 2 * pm * pm * pd * (pm - 1);
        check("sum S^3", t.s3, (one ? 2 * pm * pm * (7 * pm - 3) : 2 * pm * pm * (pm + 3)) + tail);
        check("(p^d-1) sum_N1 S + (p^2d-1) sum_N2 S", t.n1_s1.scaled(w1) + t.n2_s1.scaled(w2), pm * (pd - 1) * (pm - 1));
    }
    return out;
}

}  // namespace twozero
