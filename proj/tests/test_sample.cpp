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

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "pfcycles/core.hpp"
#include "pfcycles/sample.hpp"

using namespace pfc;
using Seq = std::vector<std::uint32_t>;

namespace {

std::vector<Seq> enumerate(std::size_t n, Variant v) {
    std::vector<Seq> out;
    Seq s(n, 1);
    for (;;) {
        if (satisfies(v, s)) out.push_back(s);
        std::size_t i = 0;
        while (i < n && s[i] == n) s[i++] = 1;
        if (i == n) return out;
        ++s[i];
    }
}

double chi2_critical(double df, double alpha) {
    return boost::math::quantile(boost::math::complement(boost::math::chi_squared(df), alpha));
}

// Uniformity of `draw` over the enumerated set, `per_element` draws per element.
template <class Draw>
void check_uniform(std::size_t n, Variant v, std::uint64_t per_element, Draw&& draw) {
    const auto support = enumerate(n, v);
    std::map<Seq, std::uint64_t> hist;
    for (const auto& s : support) hist[s] = 0;
    const std::uint64_t total = per_element * support.size();
    for (std::uint64_t i = 0; i < total; ++i) {
        RngStream rng(2024, i);
        const Seq s = draw(rng);
        const auto it = hist.find(s);
        REQUIRE(it != hist.end());
        ++it->second;
    }
    if (support.size() == 1) return;
    double chi2 = 0;
    const double expect = static_cast<double>(per_element);
    for (const auto& [s, c] : hist) chi2 += (c - expect) * (c - expect) / expect;
    INFO("n=" << n << " variant=" << to_string(v) << " chi2=" << chi2);
    CHECK(chi2 < chi2_critical(static_cast<double>(support.size() - 1), 0.001));
}

Seq values(const ParkingFunction& pf) {
    const auto v = pf.sequence().values();
    return Seq(v.begin(), v.end());
}

}  // namespace

TEST_CASE("degenerate sizes") {
    for (std::uint64_t i = 0; i < 20; ++i) {
        RngStream a(1, i), b(1, i), c(1, i);
        CHECK(values(sample_pf(1, a)) == Seq{1});
        CHECK(values(sample_ppf(1, b)) == Seq{1});
        CHECK(values(sample_ppf(2, c)) == Seq{1, 1});
    }
}

TEST_CASE("classical sampler is uniform for n <= 4") {
    for (std::size_t n = 1; n <= 4; ++n) {
        check_uniform(n, Variant::classical, 10000, [n](RngStream& r) { return values(sample_pf(n, r)); });
    }
}

TEST_CASE("prime sampler is uniform for n <= 4") {
    for (std::size_t n = 1; n <= 4; ++n) {
        check_uniform(n, Variant::prime, 10000, [n](RngStream& r) { return values(sample_ppf(n, r)); });
    }
}

TEST_CASE("n=2 classical frequencies are each 1/3 within 3 sigma") {
    std::map<Seq, int> hist;
    constexpr int total = 90000;
    for (int i = 0; i < total; ++i) {
        RngStream rng(77, static_cast<std::uint64_t>(i));
        ++hist[values(sample_pf(2, rng))];
    }
    REQUIRE(hist.size() == 3);
    const double sigma = std::sqrt(total * (1.0 / 3) * (2.0 / 3));
    for (const auto& [s, c] : hist) CHECK(std::abs(c - total / 3.0) < 3 * sigma);
}

TEST_CASE("rotation scan and prefix-minimum shift pick the same prime rotation") {
    for (std::size_t n = 2; n <= 40; ++n) {
        for (std::uint64_t i = 0; i < 50; ++i) {
            RngStream a(5, i), b(5, i);
            REQUIRE(sample_ppf(n, a) == sample_ppf_by_shift_scan(n, b));
        }
    }
}

TEST_CASE("samples are valid and reproducible at moderate n") {
    PfSampler pf(1000);
    PpfSampler ppf(1000);
    for (std::uint64_t i = 0; i < 200; ++i) {
        RngStream a(9, i), b(9, i);
        const auto x = pf.draw(a);
        const Seq xs(x.begin(), x.end());
        CHECK(is_parking_function(xs));
        CHECK(xs == values(sample_pf(1000, b)));
        RngStream c(9, i), d(9, i);
        const auto y = ppf.draw(c);
        const Seq ys(y.begin(), y.end());
        CHECK(is_prime_parking_function(ys));
        CHECK(ys == values(sample_ppf(1000, d)));
    }
}

TEST_CASE("rejection sampler") {
    RngStream one(0, 0);
    const auto r1 = rejection_sample_pf(1, one, 10);
    CHECK(r1.tries == 1);
    CHECK(values(r1.pf) == Seq{1});

    std::uint64_t tries = 0;
    constexpr std::uint64_t accepted = 20000;
    for (std::uint64_t i = 0; i < accepted; ++i) {
        RngStream rng(31, i);
        tries += rejection_sample_pf(5, rng, 1000).tries;
    }
    const double rate = static_cast<double>(accepted) / static_cast<double>(tries);
    // geometric tries: sd of the mean try count is sqrt(1-p)/p/sqrt(N)
    const double p = 1296.0 / 3125.0;
    const double sd_tries = std::sqrt(1 - p) / p / std::sqrt(static_cast<double>(accepted));
    CHECK(std::abs(1 / rate - 1 / p) < 4 * sd_tries);

    RngStream hopeless(1, 1);
    CHECK_THROWS_AS(rejection_sample_pf(40, hopeless, 3), RejectionExhausted);
}

TEST_CASE("rejection and circular samplers agree in law at n = 3 and n = 5") {
    for (std::size_t n : {3u, 5u}) {
        std::map<Seq, std::pair<double, double>> hist;
        constexpr std::uint64_t total = 60000;
        for (std::uint64_t i = 0; i < total; ++i) {
            RngStream a(100, i), b(200, i);
            hist[values(sample_pf(n, a))].first += 1;
            hist[values(rejection_sample_pf(n, b, 100000).pf)].second += 1;
        }
        // two-sample chi-square with equal sample sizes
        double chi2 = 0;
        for (const auto& [s, c] : hist) chi2 += (c.first - c.second) * (c.first - c.second) / (c.first + c.second);
        INFO("n=" << n << " chi2=" << chi2 << " cells=" << hist.size());
        CHECK(chi2 < chi2_critical(static_cast<double>(hist.size() - 1), 0.001));
    }
}

TEST_CASE("counting and parking routes find the same empty spot") {
    // every preference vector for n <= 5
    for (std::uint32_t n = 1; n <= 5; ++n) {
        Seq u(n, 0);
        for (;;) {
            REQUIRE(empty_spot(u) == empty_spot_by_parking(u));
            std::size_t i = 0;
            while (i < n && u[i] == n) u[i++] = 0;
            if (i == n) break;
            ++u[i];
        }
    }
    for (std::size_t n : {17u, 400u, 5000u}) {
        for (std::uint64_t i = 0; i < 40; ++i) {
            RngStream rng(12, i);
            Seq u(n);
            for (auto& x : u) x = rng.uniform_below(static_cast<std::uint32_t>(n + 1));
            const auto e = empty_spot(u);
            REQUIRE(e == empty_spot_by_parking(u));
            CHECK(std::count(u.begin(), u.end(), e) == 0);
        }
    }
    CHECK_THROWS_AS(empty_spot(Seq{0, 3}), std::invalid_argument);
}

TEST_CASE("shift uniqueness audit") {
    const auto r2 = shift_uniqueness_audit(2);
    CHECK(r2.sequences_checked == 1);
    CHECK(r2.ok());
    const auto r3 = shift_uniqueness_audit(3);
    CHECK(r3.sequences_checked == 8);
    CHECK(r3.pass_count_histogram == std::map<std::size_t, std::uint64_t>{{1, 8}});
    CHECK(r3.classical_checked);
    const auto r4 = shift_uniqueness_audit(4);
    CHECK(r4.sequences_checked == 81);
    CHECK(r4.ok());
    for (std::size_t n = 5; n <= 6; ++n) {
        const auto r = shift_uniqueness_audit(n);
        CHECK(r.ok());
        CHECK(r.violations == 0);
        CHECK_FALSE(r.first_violation.has_value());
    }
    CHECK_THROWS_AS(shift_uniqueness_audit(1), std::invalid_argument);
    CHECK_THROWS_AS(shift_uniqueness_audit(7), std::invalid_argument);
}
