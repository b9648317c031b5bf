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

#pragma once

/**
 * @file sample.hpp
 * @brief Exact uniform samplers for classical and prime parking functions.
 *
 * Classical: park n cars with preferences uniform on {0..n} around a circle
 * of n+1 spots; exactly one spot stays empty and rotating it to position 0
 * yields a parking function. Every parking function has exactly n+1
 * preimages, so the output is uniform on PF_n.
 *
 * Prime: draw u uniform on {1..n-1}^n; exactly one of its n-1 rotations is a
 * prime parking function. The rotation is located in O(n) from prefix sums
 * of the excess counts (a_p - 1), which total +1: the good rotation starts
 * right after the last minimum of the prefix sums.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "pfcycles/core.hpp"
#include "pfcycles/rng.hpp"

namespace pfc {

/// Spot left empty when cars with preferences `prefs` (values 0..n) park
/// circularly on spots 0..n, found by simulating the parking with
/// path-compressed next-free pointers. `next_free` is scratch.
std::uint32_t empty_spot_by_parking(std::span<const std::uint32_t> prefs);
std::uint32_t empty_spot_by_parking(std::span<const std::uint32_t> prefs, std::vector<std::uint32_t>& next_free);
/// Same spot without simulation: the first strict minimum of the running
/// surplus (cars preferring spots 0..s) - (s + 1).
std::uint32_t empty_spot(std::span<const std::uint32_t> prefs);

/// Classical sampler with reusable buffers. draw() does not re-check the
/// predicate; sample_pf() does.
class PfSampler {
public:
    explicit PfSampler(std::size_t n);
    std::size_t size() const noexcept { return n_; }
    /// 1-indexed preferences; valid until the next draw().
    std::span<const std::uint32_t> draw(RngStream& rng);

private:
    std::size_t n_;
    std::vector<std::uint32_t> raw_;
    std::vector<std::uint32_t> next_free_;
    std::vector<std::uint32_t> out_;
};

class PpfSampler {
public:
    explicit PpfSampler(std::size_t n);
    std::size_t size() const noexcept { return n_; }
    std::span<const std::uint32_t> draw(RngStream& rng);

private:
    std::size_t n_;
    std::vector<std::uint32_t> raw_;
    std::vector<std::int64_t> counts_;
    std::vector<std::uint32_t> out_;
};

ParkingFunction sample_pf(std::size_t n, RngStream& rng);
ParkingFunction sample_ppf(std::size_t n, RngStream& rng);

/// Prime sampler that tests all n-1 rotations explicitly (O(n^2)). Consumes
/// the stream exactly like sample_ppf and must return the same sequence.
/// Throws InvariantViolation unless exactly one rotation is prime.
ParkingFunction sample_ppf_by_shift_scan(std::size_t n, RngStream& rng);

/// Draws from a stream for either variant.
ParkingFunction sample(Variant v, std::size_t n, RngStream& rng);

class RejectionExhausted : public std::runtime_error {
public:
    explicit RejectionExhausted(std::uint64_t tries);
    std::uint64_t tries() const noexcept { return tries_; }

private:
    std::uint64_t tries_;
};

struct RejectionResult {
    ParkingFunction pf;
    std::uint64_t tries;
};

/// Uniform draws from [n]^n until one parks. Independent uniformity oracle.
RejectionResult rejection_sample_pf(std::size_t n, RngStream& rng, std::uint64_t max_tries);

struct ShiftAuditReport {
    std::size_t n = 0;
    // prime: every u in {1..n-1}^n
    std::uint64_t sequences_checked = 0;
    std::uint64_t violations = 0;
    /// number of prime rotations -> number of sequences with that many
    std::map<std::size_t, std::uint64_t> pass_count_histogram;
    std::optional<std::vector<std::uint32_t>> first_violation;
    // classical: every u in {0..n}^n (only run for n <= 5)
    bool classical_checked = false;
    std::uint64_t classical_sequences_checked = 0;
    std::uint64_t classical_violations = 0;

    bool ok() const noexcept { return violations == 0 && classical_violations == 0; }
};

/// Exhaustive check of the rotation arguments behind both samplers.
/// Requires 2 <= n <= 6; throws std::invalid_argument otherwise.
ShiftAuditReport shift_uniqueness_audit(std::size_t n);

}  // namespace pfc
