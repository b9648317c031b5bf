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

#include <array>
#include <vector>

#include "pfcycles/rng.hpp"

using namespace pfc;

TEST_CASE("Philox4x32-10 known-answer vectors") {
    CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) == PhiloxCounter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          PhiloxCounter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          PhiloxCounter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are reproducible and distinct") {
    RngStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
    std::vector<std::uint32_t> va, vb, vc, vd;
    for (int i = 0; i < 100; ++i) {
        va.push_back(a.next_u32());
        vb.push_back(b.next_u32());
        vc.push_back(c.next_u32());
        vd.push_back(d.next_u32());
    }
    CHECK(va == vb);
    CHECK(va != vc);
    CHECK(va != vd);
    CHECK(a.seed() == 42);
    CHECK(a.stream_id() == 7);
}

TEST_CASE("uniform_below stays in range and is flat") {
    RngStream rng(1, 0);
    constexpr std::uint32_t bound = 7;
    constexpr int draws = 700000;
    std::array<int, bound> hist{};
    for (int i = 0; i < draws; ++i) {
        const auto v = rng.uniform_below(bound);
        REQUIRE(v < bound);
        ++hist[v];
    }
    double chi2 = 0;
    const double expect = static_cast<double>(draws) / bound;
    for (int h : hist) chi2 += (h - expect) * (h - expect) / expect;
    CHECK(chi2 < 22.46);  // chi-square(6) upper 0.001 point
    CHECK(rng.uniform_below(1) == 0);
}

TEST_CASE("uniform01 lies in [0, 1) with the right mean") {
    RngStream rng(3, 3);
    double sum = 0;
    constexpr int draws = 200000;
    for (int i = 0; i < draws; ++i) {
        const double u = rng.uniform01();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(sum / draws == doctest::Approx(0.5).epsilon(0.005));
}
