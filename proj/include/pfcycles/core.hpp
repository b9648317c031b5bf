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
 * @file core.hpp
 * @brief Preference sequences, parking predicates and the cycle structure
 *        of the functional digraph i -> pi(i).
 *
 * Everything user-facing is 1-indexed: a preference sequence of length n
 * holds values in 1..n and vertex i of the digraph points at pi(i).
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pfc {

enum class Variant { classical, prime };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view s);

/// Raised when an internal invariant fails (an implementation bug, never a
/// user error).
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A length-n sequence with every entry in 1..n.
class PrefSequence {
public:
    /// Throws std::invalid_argument if empty or any entry is outside 1..n.
    explicit PrefSequence(std::vector<std::uint32_t> prefs);

    std::size_t size() const noexcept { return prefs_.size(); }
    std::span<const std::uint32_t> values() const noexcept { return prefs_; }
    std::uint32_t operator[](std::size_t i) const { return prefs_[i]; }

    bool operator==(const PrefSequence&) const = default;

private:
    std::vector<std::uint32_t> prefs_;
};

bool is_parking_function(std::span<const std::uint32_t> prefs);
bool is_prime_parking_function(std::span<const std::uint32_t> prefs);

inline bool is_parking_function(const PrefSequence& seq) { return is_parking_function(seq.values()); }
inline bool is_prime_parking_function(const PrefSequence& seq) {
    return is_prime_parking_function(seq.values());
}

bool satisfies(Variant v, std::span<const std::uint32_t> prefs);

/// A preference sequence known to satisfy the predicate of its variant.
class ParkingFunction {
public:
    /// Throws std::invalid_argument if seq fails the predicate for `variant`.
    ParkingFunction(PrefSequence seq, Variant variant);

    const PrefSequence& sequence() const noexcept { return seq_; }
    Variant variant() const noexcept { return variant_; }
    std::size_t size() const noexcept { return seq_.size(); }

    bool operator==(const ParkingFunction&) const = default;

private:
    PrefSequence seq_;
    Variant variant_;
};

/// Digraph with one outgoing edge i -> successor(i) per vertex, 1-indexed.
class FunctionalDigraph {
public:
    /// Throws std::invalid_argument if some successor is outside 1..n.
    explicit FunctionalDigraph(std::vector<std::uint32_t> successor);

    std::size_t size() const noexcept { return succ_.size(); }
    std::uint32_t successor(std::uint32_t vertex) const { return succ_.at(vertex - 1); }
    std::span<const std::uint32_t> successors() const noexcept { return succ_; }

    bool operator==(const FunctionalDigraph&) const = default;

private:
    std::vector<std::uint32_t> succ_;
};

FunctionalDigraph build_digraph(const PrefSequence& seq);

struct CycleStats {
    std::size_t n = 0;
    std::size_t cyclic_points = 0;
    std::size_t num_cycles = 0;
    /// Descending; equal lengths ordered by ascending smallest vertex.
    std::vector<std::size_t> cycle_lengths;

    /// Length of the r-th longest cycle (r >= 1), 0 when r > num_cycles.
    std::size_t longest(std::size_t r) const;
    /// Number of cycles of length exactly k.
    std::size_t cycles_of_length(std::size_t k) const;

    bool operator==(const CycleStats&) const = default;
};

/// Reusable scratch space for cycle extraction. One instance per thread.
class CycleAnalyzer {
public:
    /// `successors` is 1-indexed (values in 1..n). Runs in O(n).
    CycleStats analyze(std::span<const std::uint32_t> successors);

private:
    std::vector<std::uint32_t> indegree_;
    std::vector<std::uint32_t> stack_;
    std::vector<std::uint8_t> state_;
    std::vector<std::pair<std::size_t, std::uint32_t>> cycles_;
};

CycleStats cycle_stats(const FunctionalDigraph& g);

/// Elementwise cycle_stats; order preserving.
std::vector<CycleStats> cycle_stats_batch(std::span<const PrefSequence> seqs);
/// As above, validating each raw sequence first; the first invalid element
/// throws std::invalid_argument.
std::vector<CycleStats> cycle_stats_batch(std::span<const std::vector<std::uint32_t>> raw);

}  // namespace pfc
