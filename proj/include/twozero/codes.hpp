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

// The cyclic code
//   C = { c(a, b) = (Tr(a pi^(e i) + b (-pi)^i))_{i=0}^{n-1} : a, b in F_{p^m} },
// e = (p^k+1)/2, n = p^m - 1, with parity-check polynomial h1 h2, and three
// independent ways of computing its weight distribution.

#ifndef TWOZERO_CODES_HPP
#define TWOZERO_CODES_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twozero/expsums.hpp"
#include "twozero/gf.hpp"
#include "twozero/polynomial.hpp"
#include "twozero/quadforms.hpp"

namespace twozero {

/// Default ceiling on coordinate evaluations (pairs times length) for the
/// brute engine; accepts p = 3, m = 6 and refuses p = 3, m = 8.
inline constexpr std::uint64_t kDefaultBruteBudget = 500'000'000;

class CyclicCode {
   public:
    /// Builds F_{p^m}, checks the parameters, and derives h1, h2, g.
    /// Throws the classify_parameters errors and DistinctnessViolated.
    static CyclicCode build(std::uint32_t p, std::uint32_t m, std::uint32_t k, const FieldOptions& options = {});

    const CodeParams& params() const noexcept { return params_; }
    const FiniteField& field() const noexcept { return *field_; }
    const FormContext& forms() const noexcept { return *forms_; }

    std::uint32_t length() const noexcept { return n_; }
    std::uint32_t dimension() const noexcept { return static_cast<std::uint32_t>(h1_.degree() + h2_.degree()); }
    /// Minimal polynomial of -pi^(-1).
    const Polynomial& h1() const noexcept { return h1_; }
    /// Minimal polynomial of pi^(-(p^k+1)/2).
    const Polynomial& h2() const noexcept { return h2_; }
    /// (x^n - 1) / (h1 h2).
    const Polynomial& generator() const noexcept { return g_; }

    std::vector<std::uint8_t> codeword(FieldElement alpha, FieldElement beta) const;
    std::uint32_t codeword_weight(FieldElement alpha, FieldElement beta) const;

    /// Log offsets of the two coordinate sequences: pi^(e i) and (-pi)^i = pi^(f i).
    const std::vector<std::uint32_t>& alpha_offsets() const noexcept { return u_; }
    const std::vector<std::uint32_t>& beta_offsets() const noexcept { return w_; }

   private:
    CyclicCode() = default;

    CodeParams params_;
    std::shared_ptr<const FiniteField> field_;
    std::shared_ptr<const FormContext> forms_;
    std::uint32_t n_ = 0;
    Polynomial h1_, h2_, g_;
    std::vector<std::uint32_t> u_, w_;
};

enum class Engine { Brute, Sums, Closed };

std::string_view to_string(Engine e) noexcept;

struct WeightDistribution {
    Engine engine = Engine::Brute;
    std::map<std::uint32_t, std::uint64_t> rows;  // weight -> frequency

    std::uint64_t total() const;
    std::optional<std::uint32_t> minimum_distance() const;
    /// Same multiset, regardless of which engine produced it.
    bool same_rows(const WeightDistribution& other) const { return rows == other.rows; }
};

struct EngineOptions {
    unsigned workers = 1;
    std::uint64_t brute_budget = kDefaultBruteBudget;
    std::uint64_t pair_budget = kDefaultPairBudget;
};

WeightDistribution weight_distribution_brute(const CyclicCode& code, const EngineOptions& opts = {});
WeightDistribution weight_distribution_sums(const CyclicCode& code, const EngineOptions& opts = {});
/// Tables for CaseA, CaseB with odd k, CaseB with even k; equal weights merge.
WeightDistribution weight_distribution_closed(const CodeParams& params);
WeightDistribution weight_distribution(const CyclicCode& code, Engine engine, const EngineOptions& opts = {});

/// sum w A_w == n (p-1) p^(2m-1).
bool pless_first_moment_holds(const WeightDistribution& dist, const CodeParams& params);

struct EngineAgreement {
    Engine a;
    Engine b;
    bool agree;
};

struct CodeReport {
    CodeParams params;
    std::uint32_t length = 0;
    std::uint32_t dimension = 0;
    std::string h1, h2, generator;
    std::map<Engine, WeightDistribution> distributions;
    std::map<Engine, std::string> unavailable;  // engine -> reason (budget or case)
    std::vector<EngineAgreement> agreement;
    std::optional<std::uint32_t> minimum_distance;

    bool all_agree() const;
    /// "[n, k, d]" or "[n, k]" when no engine ran.
    std::string summary() const;
};

CodeReport code_report(const CyclicCode& code, const std::vector<Engine>& engines, const EngineOptions& opts = {});

}  // namespace twozero

#endif
