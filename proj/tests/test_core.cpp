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
#include <numeric>
#include <random>
#include <set>

#include "pfcycles/core.hpp"

using namespace pfc;
using Seq = std::vector<std::uint32_t>;

namespace {

// Cars arrive in order and take the first free spot at or after their
// preference; the sequence is a parking function iff nobody drives off.
bool parks_sequentially(const Seq& prefs, std::size_t spots) {
    std::vector<bool> taken(spots + 1, false);
    for (auto p : prefs) {
        std::size_t s = p;
        while (s <= spots && taken[s]) ++s;
        if (s > spots) return false;
        taken[s] = true;
    }
    return true;
}

// Prime: deleting some coordinate equal to 1 leaves a parking function of
// length n-1. The single-car case counts as prime.
bool prime_by_deletion(const Seq& prefs) {
    if (prefs.size() == 1) return prefs[0] == 1;
    for (std::size_t i = 0; i < prefs.size(); ++i) {
        if (prefs[i] != 1) continue;
        Seq rest;
        for (std::size_t j = 0; j < prefs.size(); ++j) {
            if (j != i) rest.push_back(prefs[j]);
        }
        if (parks_sequentially(rest, rest.size())) return true;
    }
    return false;
}

// Walk every orbit explicitly; vertex v is cyclic iff f^m(v) = v for some m <= n.
CycleStats naive_cycles(const Seq& f) {
    const std::size_t n = f.size();
    std::vector<std::pair<std::size_t, std::uint32_t>> found;  // (length, smallest vertex)
    std::set<std::uint32_t> seen;
    for (std::uint32_t v = 1; v <= n; ++v) {
        std::uint32_t w = v;
        std::size_t m = 0;
        do {
            w = f[w - 1];
            ++m;
        } while (w != v && m <= n);
        if (w != v || seen.count(v)) continue;
        std::uint32_t smallest = v;
        w = v;
        do {
            seen.insert(w);
            smallest = std::min(smallest, w);
            w = f[w - 1];
        } while (w != v);
        found.emplace_back(m, smallest);
    }
    std::sort(found.begin(), found.end(), [](auto a, auto b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    CycleStats s;
    s.n = n;
    s.num_cycles = found.size();
    for (auto [len, v] : found) {
        s.cycle_lengths.push_back(len);
        s.cyclic_points += len;
    }
    return s;
}

template <class F>
void for_each_sequence(std::size_t n, F&& f) {
    Seq s(n, 1);
    for (;;) {
        f(s);
        std::size_t i = 0;
        while (i < n && s[i] == n) s[i++] = 1;
        if (i == n) return;
        ++s[i];
    }
}

}  // namespace

TEST_CASE("PrefSequence rejects empty input and out-of-range entries") {
    CHECK_THROWS_AS(PrefSequence(Seq{}), std::invalid_argument);
    CHECK_THROWS_AS(PrefSequence(Seq{0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(PrefSequence(Seq{1, 3}), std::invalid_argument);
    CHECK_NOTHROW(PrefSequence(Seq{2, 1}));
}

TEST_CASE("variant names round-trip") {
    CHECK(parse_variant(to_string(Variant::classical)) == Variant::classical);
    CHECK(parse_variant(to_string(Variant::prime)) == Variant::prime);
    CHECK_THROWS_AS(parse_variant("tertiary"), std::invalid_argument);
}

TEST_CASE("parking predicate examples") {
    CHECK(is_parking_function(PrefSequence({1, 2, 3})));
    CHECK_FALSE(is_parking_function(PrefSequence({2, 2, 3})));
    CHECK(is_parking_function(PrefSequence({1, 1, 2})));
    CHECK(is_prime_parking_function(PrefSequence({1, 1})));
    CHECK_FALSE(is_prime_parking_function(PrefSequence({1, 2})));
    CHECK(is_prime_parking_function(PrefSequence({1, 1, 2})));
    CHECK(is_prime_parking_function(PrefSequence({1})));
    CHECK_THROWS_AS(ParkingFunction(PrefSequence({1, 2}), Variant::prime), std::invalid_argument);
    CHECK_NOTHROW(ParkingFunction(PrefSequence({1, 2}), Variant::classical));
}

TEST_CASE("predicates agree with sequential parking and deletion oracles for n <= 6") {
    for (std::size_t n = 1; n <= 6; ++n) {
        std::uint64_t pf = 0, ppf = 0;
        for_each_sequence(n, [&](const Seq& s) {
            const bool c = is_parking_function(s);
            const bool p = is_prime_parking_function(s);
            REQUIRE(c == parks_sequentially(s, n));
            REQUIRE(p == prime_by_deletion(s));
            REQUIRE((!p || c));
            pf += c;
            ppf += p;
        });
        std::uint64_t want_pf = 1, want_ppf = 1;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            want_pf *= n + 1;
            want_ppf *= n - 1;
        }
        CHECK(pf == want_pf);
        CHECK(ppf == want_ppf);
    }
}

TEST_CASE("exhaustive counts at n = 7") {
    std::uint64_t pf = 0, ppf = 0;
    for_each_sequence(7, [&](const Seq& s) {
        pf += is_parking_function(s);
        ppf += is_prime_parking_function(s);
    });
    CHECK(pf == 262144);   // 8^6
    CHECK(ppf == 46656);   // 6^6
}

TEST_CASE("predicates are invariant under coordinate permutations") {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 1 + gen() % 12;
        Seq s(n);
        // bias towards small values so that both outcomes occur
        for (auto& x : s) x = 1 + static_cast<std::uint32_t>(gen() % std::max<std::size_t>(1, (n + 1) / 2 + gen() % n));
        for (auto& x : s) x = std::min<std::uint32_t>(x, static_cast<std::uint32_t>(n));
        Seq t = s;
        std::shuffle(t.begin(), t.end(), gen);
        REQUIRE(is_parking_function(s) == is_parking_function(t));
        REQUIRE(is_prime_parking_function(s) == is_prime_parking_function(t));
    }
}

TEST_CASE("digraph construction") {
    const auto g = build_digraph(PrefSequence({1, 1, 2}));
    CHECK(g.successor(1) == 1);
    CHECK(g.successor(2) == 1);
    CHECK(g.successor(3) == 2);
    CHECK(build_digraph(PrefSequence({2, 3, 1})).successors()[2] == 1);
    CHECK(build_digraph(PrefSequence({1})).size() == 1);
    CHECK_THROWS_AS(FunctionalDigraph(Seq{1, 4, 2}), std::invalid_argument);
}

TEST_CASE("cycle statistics examples") {
    auto stats = [](Seq s) { return cycle_stats(build_digraph(PrefSequence(std::move(s)))); };
    const auto id = stats({1, 2, 3});
    CHECK(id.cyclic_points == 3);
    CHECK(id.num_cycles == 3);
    CHECK(id.cycle_lengths == std::vector<std::size_t>{1, 1, 1});

    const auto one = stats({1, 1, 2});
    CHECK(one.cyclic_points == 1);
    CHECK(one.num_cycles == 1);

    const auto fig = stats({18, 4, 2, 19, 12, 2, 2, 6, 10, 13, 5, 5, 18, 15, 9, 1, 17, 3, 10, 4});
    CHECK(fig.cyclic_points == 10);
    CHECK(fig.num_cycles == 3);
    CHECK(fig.cycle_lengths == std::vector<std::size_t>{7, 2, 1});
    CHECK(fig.longest(1) == 7);
    CHECK(fig.longest(3) == 1);
    CHECK(fig.longest(4) == 0);
    CHECK(fig.cycles_of_length(2) == 1);
    CHECK(fig.cycles_of_length(5) == 0);
    CHECK_THROWS_AS(fig.longest(0), std::invalid_argument);
}

TEST_CASE("batch analysis") {
    const std::vector<PrefSequence> seqs = {PrefSequence({1}), PrefSequence({1, 1})};
    const auto out = cycle_stats_batch(seqs);
    REQUIRE(out.size() == 2);
    CHECK(out[0].cyclic_points == 1);
    CHECK(out[1].num_cycles == 1);
    CHECK(cycle_stats_batch(std::span<const PrefSequence>{}).empty());
    const std::vector<Seq> raw = {{2, 3, 1}};
    const auto three = cycle_stats_batch(raw);
    CHECK(three[0].cycle_lengths == std::vector<std::size_t>{3});
    const std::vector<Seq> bad = {{1, 1}, {3, 1}};
    CHECK_THROWS_AS(cycle_stats_batch(bad), std::invalid_argument);
}

TEST_CASE("cycle statistics agree with orbit walking on random maps") {
    std::mt19937_64 gen(5);
    CycleAnalyzer analyzer;
    for (int trial = 0; trial < 3000; ++trial) {
        const std::size_t n = 1 + gen() % 40;
        Seq f(n);
        for (auto& x : f) x = 1 + static_cast<std::uint32_t>(gen() % n);
        const auto got = analyzer.analyze(f);
        const auto want = naive_cycles(f);
        REQUIRE(got == want);
        // invariants
        REQUIRE(std::accumulate(got.cycle_lengths.begin(), got.cycle_lengths.end(), std::size_t{0}) ==
                got.cyclic_points);
        REQUIRE(got.num_cycles >= 1);
        REQUIRE(got.num_cycles <= got.cyclic_points);
        REQUIRE(got.cyclic_points <= n);
    }
}

TEST_CASE("bijections are all cyclic and relabelling preserves the cycle type") {
    std::mt19937_64 gen(9);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + gen() % 30;
        Seq perm(n);
        std::iota(perm.begin(), perm.end(), 1u);
        std::shuffle(perm.begin(), perm.end(), gen);
        CHECK(cycle_stats(FunctionalDigraph(perm)).cyclic_points == n);

        Seq f(n);
        for (auto& x : f) x = 1 + static_cast<std::uint32_t>(gen() % n);
        // g = sigma f sigma^-1 has the same cycle lengths
        Seq g(n);
        for (std::size_t v = 1; v <= n; ++v) g[perm[v - 1] - 1] = perm[f[v - 1] - 1];
        const auto a = cycle_stats(FunctionalDigraph(f));
        const auto b = cycle_stats(FunctionalDigraph(g));
        CHECK(a.cycle_lengths == b.cycle_lengths);
        CHECK(a.cyclic_points == b.cyclic_points);
    }
}
