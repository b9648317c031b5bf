// Copyright 2026 The pfcycles Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pfcycles/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfcycles/core.hpp"
#include "pfcycles/exact.hpp"
#include "pfcycles/harness.hpp"
#include "pfcycles/harness_io.hpp"
#include "pfcycles/rng.hpp"
#include "pfcycles/sample.hpp"
#include "pfcycles/specfun.hpp"

namespace pfc {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    UsageError(const std::string& flag, const std::string& msg) : std::runtime_error(flag + ": " + msg) {}
};

constexpr std::size_t kMaxSampleN = 10'000'000;
constexpr std::size_t kMaxCountN = 5000;
constexpr double kMaxDickmanX = 1000;

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("--out", "cannot open '" + path + "' for writing");
    f << text;
}

double parse_number(std::string_view token, const std::string& flag) {
    double v = 0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
        throw UsageError(flag, "cannot parse '" + std::string(token) + "' as a number");
    }
    return v;
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto end = comma == std::string::npos ? text.size() : comma;
        out.push_back(parse_number(std::string_view(text).substr(pos, end - pos), flag));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<std::size_t> parse_n_grid(const std::string& text) {
    std::vector<std::size_t> out;
    for (double v : parse_list(text, "--n-grid")) {
        if (!(v >= 2) || v > 1e8 || std::floor(v) != v) {
            throw UsageError("--n-grid", "entries must be integers in [2, 1e8], got " + format_double(v));
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

std::string csv_join(std::span<const std::uint32_t> xs, char sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

std::string csv_join(std::span<const std::size_t> xs, char sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

// ---------------------------------------------------------------------------

struct SampleArgs {
    std::size_t n = 0;
    std::uint64_t count = 1;
    std::uint64_t seed = 0;
    std::string variant = "classical";
    std::string format = "json";
    std::string out;
};

void cmd_sample(const SampleArgs& a, std::ostream& out) {
    if (a.n < 1 || a.n > kMaxSampleN) throw UsageError("--n", "must be in [1, 10^7]");
    if (a.count < 1) throw UsageError("--count", "must be >= 1");
    const Variant v = parse_variant(a.variant);
    std::string text = a.format == "csv" ? "index,prefs,cyclic_points,num_cycles,cycle_lengths\n" : "";
    for (std::uint64_t i = 0; i < a.count; ++i) {
        RngStream rng(a.seed, i);
        const ParkingFunction pf = sample(v, a.n, rng);
        const CycleStats st = cycle_stats(build_digraph(pf.sequence()));
        if (a.format == "csv") {
            text += std::to_string(i) + ',' + csv_join(pf.sequence().values(), ' ') + ',' +
                    std::to_string(st.cyclic_points) + ',' + std::to_string(st.num_cycles) + ',' +
                    csv_join(st.cycle_lengths, ' ') + '\n';
        } else {
            const auto prefs = pf.sequence().values();
            json rec = {{"index", i},
                        {"variant", a.variant},
                        {"prefs", std::vector<std::uint32_t>(prefs.begin(), prefs.end())},
                        {"cyclic_points", st.cyclic_points},
                        {"num_cycles", st.num_cycles},
                        {"cycle_lengths", st.cycle_lengths}};
            text += rec.dump() + '\n';
        }
    }
    write_output(text, a.out, out);
}

// ---------------------------------------------------------------------------

struct CountArgs {
    std::size_t n = 0;
    std::optional<std::size_t> k;
    std::string variant = "classical";
    std::string format = "json";
    std::string out;
};

void cmd_count(const CountArgs& a, std::ostream& out) {
    if (a.n < 1 || a.n > kMaxCountN) throw UsageError("--n", "must be in [1, 5000]");
    const Variant v = parse_variant(a.variant);
    const std::size_t kmax = max_cyclic_points(v, a.n);
    std::string text;
    if (a.k) {
        if (*a.k < 1 || *a.k > kmax) {
            if (v == Variant::prime) {
                throw UsageError("--k", "prime parking functions of length n have between 1 and n-1 cyclic points "
                                        "(n = 1 allows k = 1); got k = " + std::to_string(*a.k));
            }
            throw UsageError("--k", "must satisfy 1 <= k <= n; got k = " + std::to_string(*a.k));
        }
        const std::string c = count_cyclic(v, a.n, *a.k).get_str();
        if (a.format == "csv") {
            text = "variant,n,k,count\n" + a.variant + ',' + std::to_string(a.n) + ',' + std::to_string(*a.k) + ',' +
                   c + '\n';
        } else {
            text = json{{"variant", a.variant}, {"n", a.n}, {"k", *a.k}, {"count", c}}.dump() + '\n';
        }
    } else {
        const CyclicPointCensus census = census_closed_form(a.n, v);
        if (a.format == "csv") {
            text = "k,count\n";
            for (const auto& [k, c] : census.counts) text += std::to_string(k) + ',' + c.get_str() + '\n';
            text += "total," + census.total().get_str() + '\n';
        } else {
            json counts = json::object();
            for (const auto& [k, c] : census.counts) counts[std::to_string(k)] = c.get_str();
            text = json{{"variant", a.variant}, {"n", a.n}, {"counts", counts}, {"total", census.total().get_str()}}
                       .dump() +
                   '\n';
        }
    }
    write_output(text, a.out, out);
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::size_t n_max = 5;
    std::optional<std::string> variant;
    bool allow_8 = false;
    unsigned workers = 0;
    std::string format = "json";
    std::string out;
};

std::string census_mismatch(const CyclicPointCensus& brute, const CyclicPointCensus& closed) {
    std::ostringstream s;
    s << "n=" << brute.n << " variant=" << to_string(brute.variant) << ':';
    std::set<std::size_t> keys;
    for (const auto& [k, c] : brute.counts) keys.insert(k);
    for (const auto& [k, c] : closed.counts) keys.insert(k);
    for (auto k : keys) {
        const auto b = brute.counts.count(k) ? brute.counts.at(k) : ExactCount(0);
        const auto c = closed.counts.count(k) ? closed.counts.at(k) : ExactCount(0);
        s << " k=" << k << " brute=" << b.get_str() << " closed=" << c.get_str() << (b == c ? "" : " <-- differs");
    }
    return s.str();
}

bool cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    if (a.n_max < 1) throw UsageError("--n-max", "must be >= 1");
    if (a.n_max > 8 || (a.n_max == 8 && !a.allow_8)) {
        throw UsageError("--n-max", "brute force enumerates n^n sequences (7^7 = 823543 per variant; 8^8 = 16.7M "
                                    "needs --allow-8); larger n is refused");
    }
    std::vector<Variant> variants = {Variant::classical, Variant::prime};
    if (a.variant) variants = {parse_variant(*a.variant)};

    struct Row {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Row> rows;
    std::string first_failure;
    auto record = [&](std::string name, bool pass, std::string detail) {
        if (!pass && first_failure.empty()) first_failure = name + ": " + detail;
        rows.push_back({std::move(name), pass, std::move(detail)});
    };

    for (Variant v : variants) {
        const std::string vs(to_string(v));
        for (std::size_t n = 1; n <= a.n_max; ++n) {
            const auto brute = census_oracle_bruteforce(n, v, a.allow_8, a.workers);
            const auto closed = census_closed_form(n, v);
            const bool same = brute == closed;
            record("census " + vs + " n=" + std::to_string(n), same,
                   same ? "closed form matches enumeration" : census_mismatch(brute, closed));
            const auto total = count_total(v, n);
            record("total " + vs + " n=" + std::to_string(n), brute.total() == total,
                   "enumerated " + brute.total().get_str() + ", expected " + total.get_str());
            if (v == Variant::classical) {
                for (std::size_t k = 1; k < n; ++k) {
                    const auto lhs = census_oracle_partition_sum(n, k);
                    const auto rhs = count_pf_cyclic(n, k);
                    record("partition-sum n=" + std::to_string(n) + " k=" + std::to_string(k), lhs == rhs,
                           "sum " + lhs.get_str() + ", closed " + rhs.get_str());
                }
            }
        }
    }
    for (std::size_t n = 2; n <= std::min<std::size_t>(a.n_max, 6); ++n) {
        const auto rep = shift_uniqueness_audit(n);
        std::string detail = std::to_string(rep.sequences_checked) + " prime sequences, " +
                             std::to_string(rep.classical_sequences_checked) + " classical sequences";
        if (rep.first_violation) detail += "; first violation u=" + csv_join(*rep.first_violation, ' ');
        record("shift-audit n=" + std::to_string(n), rep.ok(), detail);
    }

    bool all = true;
    for (const auto& r : rows) all = all && r.pass;
    std::string text;
    if (a.format == "csv") {
        text = "check,pass,detail\n";
        for (const auto& r : rows) text += r.name + ',' + (r.pass ? "true" : "false") + ",\"" + r.detail + "\"\n";
    } else {
        json checks = json::array();
        for (const auto& r : rows) checks.push_back({{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        text = json{{"checks", checks}, {"all_passed", all}}.dump(2) + '\n';
    }
    write_output(text, a.out, out);
    if (!all) err << "verification failed: " << first_failure << '\n';
    return all;
}

// ---------------------------------------------------------------------------

struct SpecArgs {
    long r = 1;
    double x = 0;
    std::string format = "json";
    std::string out;
};

void cmd_constants(const SpecArgs& a, std::ostream& out) {
    std::string text;
    const double g = static_cast<double>(constants::euler_gamma);
    const double s = static_cast<double>(constants::sqrt_pi_over_2);
    const double p = static_cast<double>(constants::pi_sq_over_8);
    if (a.format == "csv") {
        text = "name,r,value,abs_error_estimate\n";
        text += "euler_gamma,," + format_double(g) + ",0\n";
        text += "sqrt_pi_over_2,," + format_double(s) + ",0\n";
        text += "pi_sq_over_8,," + format_double(p) + ",0\n";
    }
    json table = json::array();
    for (long r = 1; r <= 10; ++r) {
        const auto gr = golomb_dickman_g(r);
        const double lim = s * gr.value;
        if (a.format == "csv") {
            text += "shepp_lloyd_g," + std::to_string(r) + ',' + format_double(gr.value) + ',' +
                    format_double(gr.abs_error_estimate) + '\n';
            text += "longest_cycle_limit_mean," + std::to_string(r) + ',' + format_double(lim) + ',' +
                    format_double(s * gr.abs_error_estimate) + '\n';
        } else {
            table.push_back({{"r", r},
                             {"g", gr.value},
                             {"abs_error_estimate", gr.abs_error_estimate},
                             {"longest_cycle_limit_mean", lim}});
        }
    }
    if (a.format != "csv") {
        text = json{{"euler_gamma", g}, {"sqrt_pi_over_2", s}, {"pi_sq_over_8", p}, {"shepp_lloyd", table}}.dump(2) +
               '\n';
    }
    write_output(text, a.out, out);
}

void cmd_dickman(const SpecArgs& a, std::ostream& out) {
    if (a.r < 0) throw UsageError("--r", "must be >= 0");
    if (!(a.x >= 0)) throw UsageError("--x", "must be >= 0");
    if (a.x > kMaxDickmanX) throw UsageError("--x", "must be <= 1000");
    if (a.r > 50) throw UsageError("--r", "must be <= 50");
    const auto res = dickman_rho(a.r, a.x);
    std::string text;
    if (a.format == "csv") {
        text = "r,x,value,abs_error_estimate\n" + std::to_string(a.r) + ',' + format_double(a.x) + ',' +
               format_double(res.value) + ',' + format_double(res.abs_error_estimate) + '\n';
    } else {
        text = json{{"r", a.r}, {"x", a.x}, {"value", res.value}, {"abs_error_estimate", res.abs_error_estimate}}
                   .dump() +
               '\n';
    }
    write_output(text, a.out, out);
}

void cmd_rate(const SpecArgs& a, std::ostream& out) {
    if (std::isnan(a.x)) throw UsageError("--x", "must be a number");
    const double v = ldp_rate(a.x);
    std::string text;
    if (a.format == "csv") {
        text = "x,rate\n" + format_double(a.x) + ',' + format_double(v) + '\n';
    } else {
        const json value = std::isfinite(v) ? json(v) : json("inf");
        text = json{{"x", a.x}, {"rate", value}}.dump() + '\n';
    }
    write_output(text, a.out, out);
}

// ---------------------------------------------------------------------------

struct ExperimentArgs {
    std::size_t n = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::string variant = "classical";
    std::size_t r = 1;
    std::size_t k = 1;
    unsigned workers = 0;
    std::uint64_t validate_stride = kReleaseValidateStride;
    bool timing = false;
    bool strict = false;
    std::string format;
    std::string out;
    // mgf
    std::optional<double> t;
    std::string t_grid = "-1,-0.5,0.5,1";
    std::string n_grid = "1e3,1e4,1e5,1e6";
};

void print_checks(const ExperimentSummary& s, std::ostream& os) {
    for (const auto& st : s.statistics) {
        for (const auto& c : st.checks) {
            os << to_string(st.statistic) << ' ' << c.name << ": observed=" << format_double(c.observed)
               << " target=" << format_double(c.target) << " tol=" << format_double(c.tolerance) << ' '
               << (c.pass ? "PASS" : "FAIL") << '\n';
        }
    }
}

bool cmd_experiment(Statistic stat, const ExperimentArgs& a, std::ostream& out, std::ostream& err) {
    ExperimentConfig cfg;
    cfg.variant = parse_variant(a.variant);
    cfg.n = a.n;
    cfg.samples = a.samples;
    cfg.seed = a.seed;
    cfg.statistics = {stat};
    cfg.r = a.r;
    cfg.k = a.k;
    cfg.workers = a.workers;
    cfg.validate_stride = a.validate_stride;
    cfg.timing = a.timing;
    if (a.n < 1) throw UsageError("--n", "must be >= 1");
    if (stat == Statistic::cycle_count && a.n < 2) throw UsageError("--n", "cycle-count needs n >= 2");
    if (a.samples < 1) throw UsageError("--samples", "must be >= 1");
    if (a.r < 1) throw UsageError("--r", "must be >= 1");
    if (a.k < 1) throw UsageError("--k", "must be >= 1");
    if (a.validate_stride < 1) throw UsageError("--validate-stride", "must be >= 1");

    const ExperimentSummary s = run_experiment(cfg);
    const std::string text = a.format == "csv" ? histogram_csv(s) : summary_to_json(s);
    write_output(text, a.out, out);
    print_checks(s, a.out.empty() ? err : out);
    return !a.strict || s.all_passed();
}

bool cmd_mgf(const ExperimentArgs& a, const CLI::App& sub, std::ostream& out, std::ostream& err) {
    if (a.t && sub.count("--t-grid") > 0) throw UsageError("--t", "give either --t or --t-grid, not both");
    const std::vector<double> ts = a.t ? std::vector<double>{*a.t} : parse_list(a.t_grid, "--t-grid");
    for (double t : ts) {
        if (!std::isfinite(t) || std::abs(t) > 50) throw UsageError(a.t ? "--t" : "--t-grid", "t must lie in [-50, 50]");
    }
    const auto ns = parse_n_grid(a.n_grid);
    const Variant v = parse_variant(a.variant);
    const auto rows = run_mgf_scaling_experiment(ns, ts, v);
    std::string text;
    if (a.format == "json") {
        text = json{{"rows", rows}, {"errors_decreasing", mgf_errors_decreasing(rows)}}.dump(2) + '\n';
    } else {
        text = mgf_table_csv(rows);
    }
    write_output(text, a.out, out);
    std::ostream& os = a.out.empty() ? err : out;
    const bool decreasing = mgf_errors_decreasing(rows);
    os << "mgf errors_decreasing_along_n_grid: " << (decreasing ? "PASS" : "FAIL") << '\n';
    return !a.strict || decreasing;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"pfcycles: cycle statistics of uniform (prime) parking functions"};
    app.name("pfcycles");
    app.require_subcommand(1);
    const auto variants = CLI::IsMember({"classical", "prime"});
    const auto formats = CLI::IsMember({"json", "csv"});

    SampleArgs sa;
    auto* sample_cmd = app.add_subcommand("sample", "Draw uniform parking functions with their cycle statistics");
    sample_cmd->add_option("--n", sa.n, "Length")->required();
    sample_cmd->add_option("--count,--samples", sa.count, "Number of records");
    sample_cmd->add_option("--seed", sa.seed, "Seed (record i uses stream i)");
    sample_cmd->add_option("--variant", sa.variant)->check(variants);
    sample_cmd->add_option("--format", sa.format)->check(formats);
    sample_cmd->add_option("--out", sa.out, "Output path (default stdout)");

    CountArgs ca;
    auto* count_cmd = app.add_subcommand("count", "Exact counts by number of cyclic points");
    count_cmd->add_option("--n", ca.n)->required();
    count_cmd->add_option("--k", ca.k, "Number of cyclic points (omit for the full census)");
    count_cmd->add_option("--variant", ca.variant)->check(variants);
    count_cmd->add_option("--format", ca.format)->check(formats);
    count_cmd->add_option("--out", ca.out);

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check closed forms against independent oracles");
    verify_cmd->add_option("--n-max", va.n_max, "Largest n to enumerate (<= 7, or 8 with --allow-8)");
    verify_cmd->add_option("--variant", va.variant, "Restrict to one variant")->check(variants);
    verify_cmd->add_flag("--allow-8", va.allow_8, "Permit n = 8 brute force");
    verify_cmd->add_option("--workers", va.workers, "Thread cap (default: all cores)");
    verify_cmd->add_option("--format", va.format)->check(formats);
    verify_cmd->add_option("--out", va.out);

    SpecArgs consts_a, dick_a, rate_a;
    auto* constants_cmd = app.add_subcommand("constants", "Named constants and Shepp-Lloyd G_{r,1}, r <= 10");
    constants_cmd->add_option("--format", consts_a.format)->check(formats);
    constants_cmd->add_option("--out", consts_a.out);
    auto* dickman_cmd = app.add_subcommand("dickman", "Generalized Dickman function rho_r(x)");
    dickman_cmd->add_option("--r", dick_a.r)->required();
    dickman_cmd->add_option("--x", dick_a.x)->required();
    dickman_cmd->add_option("--format", dick_a.format)->check(formats);
    dickman_cmd->add_option("--out", dick_a.out);
    auto* rate_cmd = app.add_subcommand("rate", "Large-deviation rate function of K_n/log n");
    rate_cmd->add_option("--x", rate_a.x)->required();
    rate_cmd->add_option("--format", rate_a.format)->check(formats);
    rate_cmd->add_option("--out", rate_a.out);

    const auto experiment_blurb = [](Statistic st) -> std::string {
        switch (st) {
            case Statistic::cyclic_points: return "Cyclic points / sqrt(n) against the Rayleigh law";
            case Statistic::cycle_count: return "Number of cycles: mean, variance, normal fit, tails";
            case Statistic::longest_cycle: return "r-th longest cycle / sqrt(n) against its limit mean";
            case Statistic::small_cycle: return "Cycles of length k against Poisson(1/k)";
        }
        return {};
    };
    ExperimentArgs ea;
    auto* exp_cmd = app.add_subcommand("experiment", "Monte Carlo and deterministic limit-law experiments");
    exp_cmd->require_subcommand(1);
    std::vector<std::pair<CLI::App*, Statistic>> mc_cmds;
    for (auto st : {Statistic::cyclic_points, Statistic::cycle_count, Statistic::longest_cycle,
                    Statistic::small_cycle}) {
        auto* c = exp_cmd->add_subcommand(std::string(to_string(st)), experiment_blurb(st));
        c->add_option("--n", ea.n, "Length of the parking functions")->required();
        c->add_option("--samples", ea.samples, "Number of independent samples")->required();
        c->add_option("--seed", ea.seed, "Seed; sample i uses RNG stream (seed, i)");
        c->add_option("--variant", ea.variant)->check(variants);
        if (st == Statistic::longest_cycle) c->add_option("--r", ea.r, "Rank (1 = longest)");
        if (st == Statistic::small_cycle) c->add_option("--k", ea.k, "Cycle length");
        c->add_option("--workers", ea.workers, "Thread cap (default: all cores; never changes output)");
        c->add_option("--validate-stride", ea.validate_stride, "Predicate-check every stride-th sample");
        c->add_flag("--timing", ea.timing, "Include runtime_ms (makes output run-dependent)");
        c->add_flag("--strict", ea.strict, "Exit 1 when a tolerance check fails");
        c->add_option("--format", ea.format, "json summary or csv histogram")->check(formats);
        c->add_option("--out", ea.out, "Write output here instead of stdout");
        mc_cmds.emplace_back(c, st);
    }
    auto* mgf_cmd = exp_cmd->add_subcommand("mgf", "Scaled log-MGF of K_n against its limit (no sampling)");
    mgf_cmd->add_option("--t", ea.t, "Single t");
    mgf_cmd->add_option("--t-grid", ea.t_grid, "Comma-separated t values");
    mgf_cmd->add_option("--n-grid", ea.n_grid, "Comma-separated n values (1e3 notation allowed)");
    mgf_cmd->add_option("--variant", ea.variant)->check(variants);
    mgf_cmd->add_flag("--strict", ea.strict, "Exit 1 unless errors decrease along the n-grid");
    mgf_cmd->add_option("--format", ea.format)->check(formats);
    mgf_cmd->add_option("--out", ea.out);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sample_cmd->parsed()) {
            cmd_sample(sa, out);
        } else if (count_cmd->parsed()) {
            cmd_count(ca, out);
        } else if (verify_cmd->parsed()) {
            return cmd_verify(va, out, err) ? kExitOk : kExitFailure;
        } else if (constants_cmd->parsed()) {
            cmd_constants(consts_a, out);
        } else if (dickman_cmd->parsed()) {
            cmd_dickman(dick_a, out);
        } else if (rate_cmd->parsed()) {
            cmd_rate(rate_a, out);
        } else if (mgf_cmd->parsed()) {
            if (ea.format.empty()) ea.format = "csv";
            return cmd_mgf(ea, *mgf_cmd, out, err) ? kExitOk : kExitFailure;
        } else {
            for (const auto& [c, st] : mc_cmds) {
                if (c->parsed()) {
                    if (ea.format.empty()) ea.format = "json";
                    return cmd_experiment(st, ea, out, err) ? kExitOk : kExitFailure;
                }
            }
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace pfc
