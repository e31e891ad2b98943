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

// twozero: command-line front end.
//
//   twozero analyze 3 6 4
//   twozero weights 3 6 4 --engines brute,sums,closed --format json
//   twozero sums 3 4 1 --sum S --engines brute,closed
//   twozero verify 3 4 1
//   twozero census 3 6 4
//
// Exit codes: 0 pass, 1 mismatch or failed check, 2 invalid parameters,
// 3 refused (budget exceeded or no closed form for the case).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "twozero/codes.hpp"
#include "twozero/error.hpp"
#include "twozero/expsums.hpp"
#include "twozero/numeric.hpp"
#include "twozero/quadforms.hpp"
#include "twozero/symbolic.hpp"

namespace {

using namespace twozero;
using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitRefused = 3;

struct RunConfig {
    std::uint32_t p = 0, m = 0, k = 0;
    std::vector<std::string> engines;
    std::string format = "markdown";
    std::string output;
    unsigned workers = 1;
    std::optional<std::uint64_t> budget;
    std::vector<std::string> checks;
    std::size_t modulus_index = 0;
    std::string sum = "both";
};

bool is_refusal(const Error& e) {
    return e.kind() == ErrorKind::BudgetExceeded || e.kind() == ErrorKind::UnsupportedCase;
}

Engine parse_engine(const std::string& name) {
    if (name == "brute") return Engine::Brute;
    if (name == "sums") return Engine::Sums;
    if (name == "closed") return Engine::Closed;
    throw CLI::ValidationError("--engines", "unknown engine '" + name + "' (expected brute, sums, closed)");
}

std::vector<Engine> parse_engines(const std::vector<std::string>& names) {
    std::vector<Engine> out;
    for (const auto& n : names) {
        Engine e = parse_engine(n);
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
    if (out.empty()) out.push_back(Engine::Sums);
    return out;
}

/// 12 significant digits; the imaginary part only when it is not negligible.
std::string embedding(std::complex<double> z) {
    char buf[96];
    const double scale = std::max(1.0, std::abs(z));
    const double re = std::abs(z.real()) < 1e-9 * scale ? 0.0 : z.real();
    const double im = std::abs(z.imag()) < 1e-9 * scale ? 0.0 : z.imag();
    if (im == 0.0) {
        std::snprintf(buf, sizeof buf, "%.12g", re);
    } else {
        std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re, im);
    }
    return buf;
}

json params_json(const CodeParams& c) {
    json j;
    j["p"] = c.p;
    j["m"] = c.m;
    j["k"] = c.k;
    j["d"] = c.d;
    j["s"] = c.s;
    j["case"] = std::string(to_string(c.case_label));
    return j;
}

json code_json(const CyclicCode& code) {
    json j = params_json(code.params());
    j["n"] = code.length();
    j["dimension"] = code.dimension();
    return j;
}

std::string code_heading(const CodeParams& c) {
    return "(p, m, k) = (" + std::to_string(c.p) + ", " + std::to_string(c.m) + ", " + std::to_string(c.k) + "), " +
           std::string(to_string(c.case_label));
}

// ---------------------------------------------------------------- analyze

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
    auto code = CyclicCode::build(cfg.p, cfg.m, cfg.k, FieldOptions{cfg.modulus_index});
    const CodeParams& c = code.params();
    const std::int64_t qstar = qstar_sign(c.p, c.d) * static_cast<std::int64_t>(c.q);
    const std::string summary = "[" + std::to_string(code.length()) + ", " + std::to_string(code.dimension()) + "]";
    if (cfg.format == "json") {
        json j = code_json(code);
        j["q"] = c.q;
        j["qstar"] = qstar;
        j["code"] = summary;
        j["modulus"] = code.field().modulus().to_string();
        j["h1"] = code.h1().to_string();
        j["h2"] = code.h2().to_string();
        j["g"] = code.generator().to_string();
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "key,value\n";
        out << "p," << c.p << "\nm," << c.m << "\nk," << c.k << "\nd," << c.d << "\ns," << c.s << "\nq," << c.q << "\nqstar," << qstar
            << "\ncase," << to_string(c.case_label) << "\nn," << code.length() << "\ndimension," << code.dimension() << "\nmodulus,"
            << code.field().modulus().to_string() << "\nh1," << code.h1().to_string() << "\nh2," << code.h2().to_string() << "\ng,"
            << code.generator().to_string() << "\n";
    } else {
        out << "# " << summary << " cyclic code, " << code_heading(c) << "\n\n";
        out << "| | |\n|---|---|\n";
        out << "| d, s | " << c.d << ", " << c.s << " |\n";
        out << "| q, q* | " << c.q << ", " << qstar << " |\n";
        out << "| case | " << to_string(c.case_label) << " |\n";
        out << "| n, dimension | " << code.length() << ", " << code.dimension() << " |\n";
        out << "| modulus | " << code.field().modulus().to_string() << " |\n";
        out << "| h1 | " << code.h1().to_string() << " |\n";
        out << "| h2 | " << code.h2().to_string() << " |\n";
        out << "| g | " << code.generator().to_string() << " |\n";
    }
    return kExitPass;
}

// ---------------------------------------------------------------- weights

EngineOptions engine_options(const RunConfig& cfg) {
    EngineOptions o;
    o.workers = cfg.workers;
    if (cfg.budget) o.brute_budget = o.pair_budget = *cfg.budget;
    return o;
}

std::string distribution_diff(const WeightDistribution& a, const WeightDistribution& b) {
    std::map<std::uint32_t, std::pair<std::uint64_t, std::uint64_t>> both;
    for (const auto& [w, f] : a.rows) both[w].first = f;
    for (const auto& [w, f] : b.rows) both[w].second = f;
    std::ostringstream s;
    for (const auto& [w, fs] : both) {
        if (fs.first != fs.second) {
            s << "  weight " << w << ": " << to_string(a.engine) << "=" << fs.first << " " << to_string(b.engine) << "=" << fs.second
              << "\n";
        }
    }
    return s.str();
}

int cmd_weights(const RunConfig& cfg, std::ostream& out) {
    auto code = CyclicCode::build(cfg.p, cfg.m, cfg.k, FieldOptions{cfg.modulus_index});
    const auto engines = parse_engines(cfg.engines);
    const CodeReport report = code_report(code, engines, engine_options(cfg));

    int status = kExitPass;
    for (const auto& [e, reason] : report.unavailable) {
        std::cerr << "twozero: " << to_string(e) << " engine refused: " << reason << "\n";
        status = kExitRefused;
    }
    for (const auto& a : report.agreement) {
        if (!a.agree) {
            std::cerr << "twozero: " << to_string(a.a) << " and " << to_string(a.b) << " disagree\n"
                      << distribution_diff(report.distributions.at(a.a), report.distributions.at(a.b));
            status = kExitMismatch;
        }
    }

    if (cfg.format == "json") {
        json doc;
        doc["code"] = code_json(code);
        doc["code"]["summary"] = report.summary();
        doc["distributions"] = json::array();
        for (Engine e : engines) {
            auto it = report.distributions.find(e);
            if (it == report.distributions.end()) continue;
            json d = code_json(code);
            d["engine"] = std::string(to_string(e));
            d["rows"] = json::array();
            for (const auto& [w, f] : it->second.rows) d["rows"].push_back({{"weight", w}, {"frequency", f}});
            doc["distributions"].push_back(d);
        }
        doc["agreement"] = json::array();
        for (const auto& a : report.agreement) {
            doc["agreement"].push_back({{"engines", {std::string(to_string(a.a)), std::string(to_string(a.b))}}, {"agree", a.agree}});
        }
        json unavailable = json::object();
        for (const auto& [e, reason] : report.unavailable) unavailable[std::string(to_string(e))] = reason;
        doc["unavailable"] = unavailable;
        doc["all_agree"] = report.all_agree();
        out << doc.dump(2) << "\n";
        return status;
    }
    if (report.distributions.empty()) return status;
    const WeightDistribution* first = nullptr;
    for (Engine e : engines) {
        if (auto it = report.distributions.find(e); it != report.distributions.end()) {
            first = &it->second;
            break;
        }
    }
    if (cfg.format == "csv") {
        out << "weight,frequency\n";
        for (const auto& [w, f] : first->rows) out << w << "," << f << "\n";
        return status;
    }
    out << "# " << report.summary() << " cyclic code, " << code_heading(code.params()) << "\n\n";
    std::vector<Engine> shown;
    for (Engine e : engines) {
        if (report.distributions.count(e)) shown.push_back(e);
    }
    const bool agree = report.all_agree();
    auto table = [&](const WeightDistribution& d) {
        out << "| Weight | Frequency |\n|---:|---:|\n";
        for (const auto& [w, f] : d.rows) out << "| " << w << " | " << f << " |\n";
    };
    if (agree) {
        table(*first);
    } else {
        for (Engine e : shown) {
            out << "## " << to_string(e) << "\n\n";
            table(report.distributions.at(e));
            out << "\n";
        }
    }
    out << "\nengines:";
    for (Engine e : shown) out << " " << to_string(e);
    out << (shown.size() > 1 ? (agree ? " (agree)" : " (DISAGREE)") : "") << "\n";
    return status;
}

// ---------------------------------------------------------------- sums

struct CensusRow {
    std::optional<SymbolicSumValue> symbolic;
    CyclotomicInteger image;
    std::uint64_t frequency;
};

std::vector<CensusRow> census_rows(const CyclotomicCensus& census, std::uint32_t d) {
    std::vector<CensusRow> rows;
    for (const auto& [v, f] : census) rows.push_back({SymbolicSumValue::from_cyclotomic(v, d), v, f});
    std::stable_sort(rows.begin(), rows.end(), [](const CensusRow& a, const CensusRow& b) {
        if (a.symbolic && b.symbolic) return *a.symbolic < *b.symbolic;
        if (a.symbolic != std::nullopt || b.symbolic != std::nullopt) return a.symbolic.has_value();
        return a.image < b.image;
    });
    return rows;
}

std::string value_string(const CensusRow& r) { return r.symbolic ? r.symbolic->to_string() : r.image.to_string(); }

std::string census_string(const CyclotomicCensus& census, std::uint32_t d) {
    std::string s;
    for (const auto& r : census_rows(census, d)) {
        if (!s.empty()) s += ", ";
        s += value_string(r) + ":" + std::to_string(r.frequency);
    }
    return "{" + s + "}";
}

CyclotomicCensus sum_census(const FormContext& ctx, char which, Engine e, const RunConfig& cfg) {
    const std::uint64_t direct_budget = cfg.budget.value_or(kDefaultDirectBudget);
    const std::uint64_t pair_budget = cfg.budget.value_or(kDefaultPairBudget);
    switch (e) {
        case Engine::Brute:
            return which == 'T' ? t_census_direct(ctx, cfg.workers, direct_budget) : s_census_direct(ctx, cfg.workers, direct_budget);
        case Engine::Sums:
            return (which == 'T' ? t_census_fast(ctx, cfg.workers, pair_budget) : s_census_fast(ctx, cfg.workers, pair_budget))
                .image_census();
        case Engine::Closed:
            return (which == 'T' ? t_distribution_closed(ctx.params()) : s_distribution_closed(ctx.params())).image_census();
    }
    fail(ErrorKind::InternalInconsistency, "unknown engine");
}

int cmd_sums(const RunConfig& cfg, std::ostream& out) {
    const CodeParams params = classify_parameters(cfg.p, cfg.m, cfg.k);
    const FiniteField F = FiniteField::build(cfg.p, cfg.m, FieldOptions{cfg.modulus_index});
    const FormContext ctx(F, params);
    const auto engines = parse_engines(cfg.engines);
    std::vector<char> which;
    if (cfg.sum == "T" || cfg.sum == "both") which.push_back('T');
    if (cfg.sum == "S" || cfg.sum == "both") which.push_back('S');

    int status = kExitPass;
    json doc;
    doc["censuses"] = json::array();
    std::ostringstream md, csv;
    csv << "sum,engine,value,embedding,frequency\n";
    md << "# Exponential sum censuses, " << code_heading(params) << "\n";
    for (char w : which) {
        std::map<Engine, CyclotomicCensus> got;
        for (Engine e : engines) {
            try {
                got.emplace(e, sum_census(ctx, w, e, cfg));
            } catch (const Error& err) {
                if (!is_refusal(err)) throw;
                std::cerr << "twozero: " << w << " census, " << to_string(e) << " engine refused: " << err.what() << "\n";
                status = std::max(status, kExitRefused);
            }
        }
        bool agree = true;
        for (auto i = got.begin(); i != got.end(); ++i) {
            for (auto j = std::next(i); j != got.end(); ++j) {
                if (i->second != j->second) {
                    agree = false;
                    std::cerr << "twozero: " << w << " census: " << to_string(i->first) << " and " << to_string(j->first) << " disagree\n";
                    status = kExitMismatch;
                }
            }
        }
        for (Engine e : engines) {
            auto it = got.find(e);
            if (it == got.end()) continue;
            json d = params_json(params);
            d["n"] = F.unit_order();
            d["sum"] = std::string(1, w);
            d["engine"] = std::string(to_string(e));
            d["rows"] = json::array();
            for (const auto& r : census_rows(it->second, params.d)) {
                const std::string emb = embedding(r.image.embed());
                d["rows"].push_back({{"value", value_string(r)}, {"embedding", emb}, {"frequency", r.frequency}});
                csv << w << "," << to_string(e) << ",\"" << value_string(r) << "\"," << emb << "," << r.frequency << "\n";
            }
            doc["censuses"].push_back(d);
        }
        if (!got.empty()) {
            md << "\n## " << w << "\n\n| Value | Decimal | Frequency |\n|---|---:|---:|\n";
            for (const auto& r : census_rows(got.begin()->second, params.d)) {
                md << "| " << value_string(r) << " | " << embedding(r.image.embed()) << " | " << r.frequency << " |\n";
            }
            md << "\nengines:";
            for (const auto& [e, c] : got) md << " " << to_string(e);
            md << (got.size() > 1 ? (agree ? " (agree)" : " (DISAGREE)") : "") << "\n";
        }
    }
    if (cfg.format == "json") {
        out << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << csv.str();
    } else {
        out << md.str();
    }
    return status;
}

// ---------------------------------------------------------------- census

std::string census_text(const RankCensus& c) {
    return "n0=" + std::to_string(c.n0) + " n1=" + std::to_string(c.n1) + " n2=" + std::to_string(c.n2);
}

int cmd_census(const RunConfig& cfg, std::ostream& out) {
    const CodeParams params = classify_parameters(cfg.p, cfg.m, cfg.k);
    const FiniteField F = FiniteField::build(cfg.p, cfg.m, FieldOptions{cfg.modulus_index});
    const FormContext ctx(F, params);
    const RankCensus got = ctx.rank_census(cfg.budget.value_or(kDefaultPairBudget), cfg.workers);
    const RankCensus closed = rank_census_closed(params);
    const bool agree = got == closed;
    if (cfg.format == "json") {
        json j = params_json(params);
        j["census"] = {{"rank_s", got.n0}, {"rank_s_minus_1", got.n1}, {"rank_s_minus_2", got.n2}};
        j["closed"] = {{"rank_s", closed.n0}, {"rank_s_minus_1", closed.n1}, {"rank_s_minus_2", closed.n2}};
        j["agree"] = agree;
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "rank,count,closed\n";
        out << "s," << got.n0 << "," << closed.n0 << "\ns-1," << got.n1 << "," << closed.n1 << "\ns-2," << got.n2 << "," << closed.n2
            << "\n";
    } else {
        out << "# Rank census, " << code_heading(params) << "\n\n| Rank | Pairs | Closed form |\n|---|---:|---:|\n";
        out << "| s = " << params.s << " | " << got.n0 << " | " << closed.n0 << " |\n";
        out << "| s-1 | " << got.n1 << " | " << closed.n1 << " |\n";
        out << "| s-2 | " << got.n2 << " | " << closed.n2 << " |\n";
        out << "\n" << (agree ? "agree" : "DISAGREE") << "\n";
    }
    return agree ? kExitPass : kExitMismatch;
}

// ---------------------------------------------------------------- verify

struct CheckLine {
    std::string name;
    std::string status;  // pass, fail, skipped
    std::string lhs, rhs, note;
};

const std::vector<std::string> kAllChecks = {"census", "t-census", "s-census", "t-fast", "e1", "e2", "identities", "engines", "example"};

/// Reference enumerators, (p, m, k) -> weight distribution.
const std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, std::map<std::uint32_t, std::uint64_t>> kExamples = {
    {{3, 6, 4}, {{0, 1}, {414, 728}, {450, 32760}, {468, 139048}, {486, 199472}, {504, 132496}, {522, 26208}, {558, 728}}},
    {{3, 6, 1}, {{0, 1}, {468, 95004}, {477, 183456}, {486, 728}, {495, 170352}, {504, 81900}}},
};

std::string rows_string(const std::map<std::uint32_t, std::uint64_t>& rows) {
    std::string s;
    for (const auto& [w, f] : rows) s += (s.empty() ? "" : ", ") + std::to_string(w) + ":" + std::to_string(f);
    return "{" + s + "}";
}

CheckLine compare(std::string name, std::string lhs, std::string rhs, bool ok) {
    return {std::move(name), ok ? "pass" : "fail", std::move(lhs), std::move(rhs), ""};
}

std::vector<CheckLine> run_check(const std::string& name, const CyclicCode& code, const RunConfig& cfg) {
    const FormContext& ctx = code.forms();
    const CodeParams& c = code.params();
    const std::uint64_t direct_budget = cfg.budget.value_or(kDefaultDirectBudget);
    if (name == "census") {
        const RankCensus got = ctx.rank_census(cfg.budget.value_or(kDefaultPairBudget), cfg.workers);
        const RankCensus closed = rank_census_closed(c);
        return {compare(name, census_text(got), census_text(closed), got == closed)};
    }
    if (name == "t-census") {
        const auto direct = t_census_direct(ctx, cfg.workers, direct_budget);
        const auto closed = t_distribution_closed(c).image_census();
        return {compare(name, census_string(direct, c.d), census_string(closed, c.d), direct == closed)};
    }
    if (name == "s-census") {
        const auto closed = s_distribution_closed(c).image_census();
        const auto direct = s_census_direct(ctx, cfg.workers, direct_budget);
        return {compare(name, census_string(direct, c.d), census_string(closed, c.d), direct == closed)};
    }
    if (name == "t-fast") {
        const std::uint64_t size = code.field().size();
        const std::uint64_t need = size * size * size;
        if (need > cfg.budget.value_or(std::uint64_t{1} << 26)) {
            fail(ErrorKind::BudgetExceeded, "pairwise comparison needs " + std::to_string(need) + " evaluations");
        }
        std::uint64_t mismatches = 0;
        for (std::uint32_t a = 0; a < size; ++a) {
            for (std::uint32_t b = 0; b < size; ++b) mismatches += T_fast(ctx, {a}, {b}).image() != T_direct(ctx, {a}, {b});
        }
        return {compare(name, std::to_string(size * size - mismatches) + " pairs equal",
                        std::to_string(size * size) + " pairs", mismatches == 0)};
    }
    if (name == "e1" || name == "e2") {
        const bool one = name == "e1";
        const std::uint64_t brute = one ? count_E1(ctx, CountMode::Brute, cfg.budget.value_or(kDefaultPairBudget))
                                        : count_E2(ctx, CountMode::Brute, cfg.budget.value_or(kDefaultTripleBudget));
        const std::uint64_t closed = one ? count_E1(ctx, CountMode::Closed) : count_E2(ctx, CountMode::Closed);
        return {compare(name, "brute " + std::to_string(brute), "closed " + std::to_string(closed), brute == closed)};
    }
    if (name == "identities") {
        std::vector<CheckLine> out;
        for (const auto& id : verify_power_identities(ctx, cfg.workers, direct_budget)) {
            out.push_back(compare("identity " + id.name, id.lhs, id.rhs, id.pass));
        }
        return out;
    }
    if (name == "engines" || name == "example") {
        std::optional<std::map<std::uint32_t, std::uint64_t>> expected;
        if (name == "example") {
            auto it = kExamples.find({c.p, c.m, c.k});
            if (it == kExamples.end()) fail(ErrorKind::UnsupportedCase, "no reference enumerator for these parameters");
            expected = it->second;
        }
        const CodeReport r = code_report(code, {Engine::Brute, Engine::Sums, Engine::Closed}, engine_options(cfg));
        if (r.distributions.empty()) fail(ErrorKind::BudgetExceeded, "no engine ran within budget");
        std::vector<CheckLine> out;
        for (const auto& [e, d] : r.distributions) {
            const std::string label = name + " " + std::string(to_string(e));
            if (expected) {
                out.push_back(compare(label, rows_string(d.rows), rows_string(*expected), d.rows == *expected));
            } else {
                i128 moment = 0;
                for (const auto& [w, f] : d.rows) moment += i128{w} * f;
                const i128 expected_moment = i128{code.length()} * (c.p - 1) * ipow(c.p, 2 * c.m - 1);
                out.push_back(compare(label + " pless", to_string(moment), to_string(expected_moment), pless_first_moment_holds(d, c)));
            }
        }
        if (!expected) {
            std::string ran;
            for (const auto& [e, d] : r.distributions) ran += (ran.empty() ? "" : ",") + std::string(to_string(e));
            if (r.distributions.size() < 2) fail(ErrorKind::BudgetExceeded, "fewer than two engines ran within budget");
            out.push_back(compare(name + " agreement", ran, rows_string(r.distributions.begin()->second.rows), r.all_agree()));
        }
        for (const auto& [e, why] : r.unavailable) out.push_back({name + " " + std::string(to_string(e)), "skipped", "", "", why});
        return out;
    }
    throw CLI::ValidationError("--checks", "unknown check '" + name + "'");
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    auto code = CyclicCode::build(cfg.p, cfg.m, cfg.k, FieldOptions{cfg.modulus_index});
    const bool explicit_checks = !cfg.checks.empty();
    const std::vector<std::string> checks = explicit_checks ? cfg.checks : kAllChecks;
    for (const auto& name : checks) {
        if (std::find(kAllChecks.begin(), kAllChecks.end(), name) == kAllChecks.end()) {
            throw CLI::ValidationError("--checks", "unknown check '" + name + "'");
        }
    }
    std::vector<CheckLine> lines;
    int status = kExitPass;
    for (const auto& name : checks) {
        try {
            for (auto& l : run_check(name, code, cfg)) lines.push_back(std::move(l));
        } catch (const Error& e) {
            if (!is_refusal(e)) throw;
            lines.push_back({name, "skipped", "", "", e.what()});
            if (explicit_checks) status = std::max(status, kExitRefused);
        }
    }
    bool all_pass = true;
    for (const auto& l : lines) all_pass = all_pass && l.status != "fail";
    if (!all_pass) status = kExitMismatch;

    if (cfg.format == "json") {
        json j = code_json(code);
        j["checks"] = json::array();
        for (const auto& l : lines) {
            j["checks"].push_back({{"name", l.name}, {"status", l.status}, {"lhs", l.lhs}, {"rhs", l.rhs}, {"note", l.note}});
        }
        j["all_pass"] = all_pass;
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "name,status,lhs,rhs,note\n";
        auto q = [](const std::string& s) { return "\"" + s + "\""; };
        for (const auto& l : lines) out << q(l.name) << "," << l.status << "," << q(l.lhs) << "," << q(l.rhs) << "," << q(l.note) << "\n";
    } else {
        out << "# Verification, " << code_heading(code.params()) << "\n\n";
        for (const auto& l : lines) {
            std::string tag = l.status == "pass" ? "PASS" : l.status == "fail" ? "FAIL" : "SKIP";
            out << tag << " " << l.name;
            if (l.status == "skipped") {
                out << ": " << l.note << "\n";
            } else {
                out << ": " << l.lhs << (l.status == "pass" ? " == " : " != ") << l.rhs << "\n";
            }
        }
        out << "\n" << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-zero p-ary cyclic codes: construction, exponential sums and weight distributions"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.workers = std::max(1u, std::thread::hardware_concurrency());

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("p", cfg.p, "odd prime")->required();
        sub->add_option("m", cfg.m, "extension degree")->required();
        sub->add_option("k", cfg.k, "exponent parameter")->required();
        sub->add_option("--format", cfg.format, "json, csv or markdown")->check(CLI::IsMember({"json", "csv", "markdown"}));
        sub->add_option("--output,-o", cfg.output, "write to this file instead of standard output");
        sub->add_option("--modulus-index", cfg.modulus_index, "use the i-th smallest irreducible modulus");
    };
    auto add_compute = [&](CLI::App* sub) {
        sub->add_option("--workers,-j", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--budget", cfg.budget, "override every enumeration budget");
    };

    auto* analyze = app.add_subcommand("analyze", "parameters, case label and code polynomials");
    add_common(analyze);
    auto* weights = app.add_subcommand("weights", "weight distribution");
    add_common(weights);
    add_compute(weights);
    weights->add_option("--engines", cfg.engines, "comma list of brute, sums, closed")->delimiter(',');
    auto* sums = app.add_subcommand("sums", "value censuses of T and S");
    add_common(sums);
    add_compute(sums);
    sums->add_option("--engines", cfg.engines, "comma list of brute (direct), sums (fast), closed")->delimiter(',');
    sums->add_option("--sum", cfg.sum, "T, S or both")->check(CLI::IsMember({"T", "S", "both"}));
    auto* verify = app.add_subcommand("verify", "run named checks");
    add_common(verify);
    add_compute(verify);
    verify->add_option("--checks", cfg.checks, "comma list of census, t-census, s-census, t-fast, e1, e2, identities, engines, example")
        ->delimiter(',');
    auto* census = app.add_subcommand("census", "rank census of the quadratic forms");
    add_common(census);
    add_compute(census);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInvalid;
    }

    std::ostringstream buffer;
    int status = kExitPass;
    try {
        if (analyze->parsed()) status = cmd_analyze(cfg, buffer);
        if (weights->parsed()) status = cmd_weights(cfg, buffer);
        if (sums->parsed()) status = cmd_sums(cfg, buffer);
        if (verify->parsed()) status = cmd_verify(cfg, buffer);
        if (census->parsed()) status = cmd_census(cfg, buffer);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "twozero: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const Error& e) {
        std::cerr << "twozero: " << e.what() << "\n";
        if (e.is_invalid_input()) return kExitInvalid;
        if (is_refusal(e)) return kExitRefused;
        return kExitMismatch;
    }

    if (cfg.output.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream f(cfg.output, std::ios::binary);
        f << buffer.str();
        if (!f) {
            std::cerr << "twozero: cannot write " << cfg.output << "\n";
            return kExitMismatch;
        }
    }
    return status;
}
