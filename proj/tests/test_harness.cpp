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

#include <doctest.h>

#include <cmath>
#include <random>

#include "pfcycles/exact.hpp"
#include "pfcycles/harness.hpp"
#include "pfcycles/harness_io.hpp"
#include "pfcycles/rng.hpp"
#include "pfcycles/specfun.hpp"

using namespace pfc;

namespace {

ExperimentConfig small_config(Variant v = Variant::classical) {
    ExperimentConfig c;
    c.variant = v;
    c.n = 60;
    c.samples = 9000;
    c.seed = 17;
    c.statistics = {Statistic::cyclic_points, Statistic::cycle_count, Statistic::longest_cycle,
                    Statistic::small_cycle};
    c.r = 1;
    c.k = 1;
    c.validate_stride = 1;
    return c;
}

double identity(double v) { return v; }

}  // namespace

TEST_CASE("KS distance edge cases") {
    const auto uniform_cdf = [](double x) { return std::clamp(x, 0.0, 1.0); };
    CHECK(ks_distance({0.5}, uniform_cdf) == doctest::Approx(0.5));
    CHECK(ks_distance(std::vector<double>(100, 0.3), uniform_cdf) >= 0.5);
    CHECK_THROWS_AS(ks_distance(std::vector<double>{}, uniform_cdf), std::invalid_argument);

    RngStream rng(4, 0);
    std::vector<double> xs(20000);
    for (auto& x : xs) x = rng.uniform01();
    CHECK(ks_distance(xs, uniform_cdf) < 1.95 / std::sqrt(20000.0));  // 0.001 tail of the KS law
}

TEST_CASE("tally KS matches the sample KS") {
    std::mt19937_64 gen(3);
    std::poisson_distribution<int> pois(4.0);
    std::vector<double> xs;
    Tally t;
    for (int i = 0; i < 5000; ++i) {
        const int v = pois(gen);
        xs.push_back(v);
        ++t[static_cast<std::uint64_t>(v)];
    }
    const auto cdf = [](double x) { return normal_cdf((x - 4.0) / 2.0); };
    CHECK(ks_distance(t, identity, cdf) == doctest::Approx(ks_distance(xs, cdf)).epsilon(1e-14));
    CHECK(ks_distance_corrected(t, identity, cdf) < ks_distance(t, identity, cdf));
}

TEST_CASE("TV distance to Poisson") {
    // the exact Poisson(1) law scaled to 10^6 has TV ~ rounding only
    Tally t;
    std::uint64_t total = 0;
    for (std::uint64_t j = 0; j <= 12; ++j) {
        const auto c = static_cast<std::uint64_t>(std::llround(1e6 * poisson_pmf(j, 1.0)));
        t[j] = c;
        total += c;
    }
    CHECK(tv_distance_poisson(t, 1.0) < 1e-5);
    // all mass at 0 against Poisson(1): TV = 1 - e^{-1}
    CHECK(tv_distance_poisson(Tally{{0, 10}}, 1.0) == doctest::Approx(1 - std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("moments and histograms from tallies") {
    const Tally t{{1, 2}, {2, 1}, {5, 1}};  // samples 1,1,2,5
    const auto m = tally_moments(t, identity);
    CHECK(m.mean == doctest::Approx(2.25));
    CHECK(m.variance == doctest::Approx((1.5625 * 2 + 0.0625 + 7.5625) / 4));
    CHECK(m.second_raw == doctest::Approx((1 + 1 + 4 + 25) / 4.0));
    CHECK_FALSE(m.degenerate);
    CHECK(tally_moments(Tally{{3, 1}}, identity).degenerate);
    CHECK(tally_moments(Tally{{3, 1}}, identity).variance == 0.0);

    const auto h = tally_histogram(t, identity, 0.0, 1.0, 3);  // 5 clips into the last bin
    CHECK(h.counts == std::vector<std::uint64_t>{0, 2, 2});
    CHECK(h.total() == 4);
}

TEST_CASE("tally merges are associative and commutative") {
    std::mt19937_64 gen(8);
    std::vector<Tally> parts(6);
    for (auto& p : parts) {
        for (int i = 0; i < 50; ++i) ++p[gen() % 20];
    }
    Tally left, right, grouped;
    for (const auto& p : parts) merge_into(left, p);
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) merge_into(right, *it);
    Tally a, b;
    for (int i = 0; i < 3; ++i) merge_into(a, parts[i]);
    for (int i = 3; i < 6; ++i) merge_into(b, parts[i]);
    merge_into(grouped, b);
    merge_into(grouped, a);
    CHECK(left == right);
    CHECK(left == grouped);
}

TEST_CASE("config validation") {
    auto c = small_config();
    CHECK_NOTHROW(c.validate());
    c.n = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = small_config();
    c.samples = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = small_config();
    c.statistics.clear();
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = small_config();
    c.r = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = small_config();
    c.n = 1;
    CHECK_THROWS_AS(run_cycle_count_experiment(c), std::invalid_argument);
    CHECK(parse_statistic("small-cycle") == Statistic::small_cycle);
    CHECK_THROWS_AS(parse_statistic("medium-cycle"), std::invalid_argument);
}

TEST_CASE("results do not depend on the worker count") {
    auto c = small_config();
    c.workers = 1;
    const auto one = run_experiment(c);
    const std::string bytes = summary_to_json(one);
    for (unsigned w : {2u, 3u, 5u}) {
        c.workers = w;
        const auto s = run_experiment(c);
        CHECK(s == one);
        CHECK(summary_to_json(s) == bytes);
    }
    CHECK(one.merge_count == (c.samples + kChunkSize - 1) / kChunkSize);
    for (const auto& st : one.statistics) CHECK(st.histogram.total() == c.samples);
    CHECK(one.joint.has_value());
    CHECK_FALSE(one.runtime_ms.has_value());
}

TEST_CASE("single-sample experiment is degenerate") {
    auto c = small_config();
    c.samples = 1;
    const auto s = run_experiment(c);
    CHECK(s.get(Statistic::cyclic_points).moments.degenerate);
    CHECK(s.get(Statistic::cyclic_points).moments.variance == 0.0);
}

TEST_CASE("sampled cyclic points and cycle counts match exact finite-n moments") {
    for (Variant v : {Variant::classical, Variant::prime}) {
        ExperimentConfig c;
        c.variant = v;
        c.n = 200;
        c.samples = 40000;
        c.seed = 5;
        c.statistics = {Statistic::cyclic_points, Statistic::cycle_count};
        const auto s = run_experiment(c);

        // E[lambda] from the exact pmf
        double mean_lambda = 0;
        for (std::size_t k = 1; k <= max_cyclic_points(v, c.n); ++k) mean_lambda += k * pmf_cyclic(c.n, k, v).get_d();
        const auto& lam = s.get(Statistic::cyclic_points);
        const double root = std::sqrt(200.0);
        const double se_l = std::sqrt(lam.moments.variance / c.samples);
        CHECK(std::abs(lam.moments.mean - mean_lambda / root) < 4 * se_l);

        const auto& k = s.get(Statistic::cycle_count);
        const auto exact = exact_kn_mean_var(c.n, v);
        const double se_k = std::sqrt(k.moments.variance / c.samples);
        CHECK(std::abs(k.moments.mean - exact.mean.get_d()) < 4 * se_k);
    }
}

TEST_CASE("prime and classical experiments agree within 3 pooled standard errors") {
    auto c = small_config();
    c.n = 2000;
    c.samples = 20000;
    c.validate_stride = 100;
    const auto a = run_experiment(c);
    c.variant = Variant::prime;
    c.seed = 99;
    const auto b = run_experiment(c);
    for (auto st : {Statistic::cyclic_points, Statistic::longest_cycle, Statistic::small_cycle}) {
        const auto& x = a.get(st).moments;
        const auto& y = b.get(st).moments;
        const double pooled = std::sqrt((x.variance + y.variance) / static_cast<double>(c.samples));
        INFO(to_string(st));
        CHECK(std::abs(x.mean - y.mean) < 3 * pooled);
    }
}

TEST_CASE("JSON round-trip") {
    auto c = small_config();
    c.samples = 3000;
    c.r = 2;
    c.k = 2;
    auto s = run_experiment(c);
    CHECK(summary_from_json(summary_to_json(s)) == s);
    s.runtime_ms = 12.5;
    CHECK(summary_from_json(summary_to_json(s)) == s);
    const auto text = summary_to_json(s);
    CHECK(text.find("\"runtime_ms\"") != std::string::npos);
    CHECK(text.find("\"histogram\"") != std::string::npos);
    CHECK(text.find("\"ks\"") != std::string::npos);
    CHECK(text.find("\"moments\"") != std::string::npos);

    const std::vector<std::size_t> ns = {10, 100};
    const std::vector<double> ts = {-0.5, 1};
    const auto rows = run_mgf_scaling_experiment(ns, ts, Variant::prime);
    const nlohmann::json j = rows;
    CHECK(j.get<std::vector<MgfRow>>() == rows);
}

TEST_CASE("MGF scaling table") {
    const std::vector<std::size_t> ns = {1000, 10000, 100000};
    const std::vector<double> zero = {0.0};
    for (const auto& row : run_mgf_scaling_experiment(ns, zero, Variant::classical)) {
        CHECK(row.scaled_log_mgf == 0.0);
        CHECK(row.target == 0.0);
    }
    CHECK(mgf_errors_decreasing(run_mgf_scaling_experiment(ns, zero, Variant::classical)));
    auto stalled = run_mgf_scaling_experiment(ns, std::vector<double>{1.0}, Variant::classical);
    stalled[2].abs_error = stalled[1].abs_error;
    CHECK_FALSE(mgf_errors_decreasing(stalled));
    const std::vector<double> ts = {-0.5, 0.5, 1.0};
    const auto rows = run_mgf_scaling_experiment(ns, ts, Variant::classical);
    CHECK(rows.size() == 9);
    CHECK(rows[0].t == -0.5);
    CHECK(rows[0].n == 1000);
    CHECK(mgf_errors_decreasing(rows));
    CHECK_THROWS_AS(run_mgf_scaling_experiment(std::span<const std::size_t>{}, ts, Variant::classical),
                    std::invalid_argument);
}

TEST_CASE("CSV output is locale-free with fixed headers") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-1e-300) == "-1e-300");
    const std::vector<std::size_t> ns = {10};
    const std::vector<double> ts = {1.0};
    const auto csv = mgf_table_csv(run_mgf_scaling_experiment(ns, ts, Variant::classical));
    CHECK(csv.rfind("variant,n,t,scaled_log_mgf,target,abs_error\n", 0) == 0);
    CHECK(csv.find("classical,10,1,") != std::string::npos);

    auto c = small_config();
    c.samples = 100;
    c.statistics = {Statistic::cyclic_points};
    const auto h = histogram_csv(run_experiment(c));
    CHECK(h.rfind("statistic,bin_lo,bin_hi,count\n", 0) == 0);
    CHECK(h.find("cyclic-points,0,0.05,") != std::string::npos);
}
