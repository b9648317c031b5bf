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

#include "pfcycles/core.hpp"

#include <algorithm>

namespace pfc {

std::string_view to_string(Variant v) {
    return v == Variant::classical ? "classical" : "prime";
}

Variant parse_variant(std::string_view s) {
    if (s == "classical") return Variant::classical;
    if (s == "prime") return Variant::prime;
    throw std::invalid_argument("unknown variant '" + std::string(s) + "' (expected classical|prime)");
}

PrefSequence::PrefSequence(std::vector<std::uint32_t> prefs) : prefs_(std::move(prefs)) {
    if (prefs_.empty()) throw std::invalid_argument("preference sequence must have length >= 1");
    const auto n = prefs_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (prefs_[i] < 1 || prefs_[i] > n) {
            throw std::invalid_argument("preference " + std::to_string(prefs_[i]) + " at position " +
                                        std::to_string(i + 1) + " outside 1.." + std::to_string(n));
        }
    }
}

namespace {

// counts[v] = #{i : prefs[i] == v}; false if some entry is out of range.
bool tally(std::span<const std::uint32_t> prefs, std::vector<std::uint32_t>& counts) {
    const auto n = prefs.size();
    counts.assign(n + 1, 0);
    for (auto p : prefs) {
        if (p < 1 || p > n) return false;
        ++counts[p];
    }
    return true;
}

}  // namespace

// Counting-sort form of "sorted pi_(i) <= i": at least i preferences are <= i.
bool is_parking_function(std::span<const std::uint32_t> prefs) {
    if (prefs.empty()) return false;
    std::vector<std::uint32_t> counts;
    if (!tally(prefs, counts)) return false;
    std::size_t cum = 0;
    for (std::size_t i = 1; i <= prefs.size(); ++i) {
        cum += counts[i];
        if (cum < i) return false;
    }
    return true;
}

bool is_prime_parking_function(std::span<const std::uint32_t> prefs) {
    if (prefs.empty()) return false;
    std::vector<std::uint32_t> counts;
    if (!tally(prefs, counts)) return false;
    const auto n = prefs.size();
    std::size_t cum = 0;
    for (std::size_t j = 1; j + 1 <= n; ++j) {
        cum += counts[j];
        if (cum < j + 1) return false;
    }
    return true;
}

bool satisfies(Variant v, std::span<const std::uint32_t> prefs) {
    return v == Variant::classical ? is_parking_function(prefs) : is_prime_parking_function(prefs);
}

ParkingFunction::ParkingFunction(PrefSequence seq, Variant variant)
    : seq_(std::move(seq)), variant_(variant) {
    if (!satisfies(variant_, seq_.values())) {
        throw std::invalid_argument("sequence is not a " + std::string(to_string(variant_)) +
                                    " parking function");
    }
}

FunctionalDigraph::FunctionalDigraph(std::vector<std::uint32_t> successor) : succ_(std::move(successor)) {
    const auto n = succ_.size();
    for (auto s : succ_) {
        if (s < 1 || s > n) throw std::invalid_argument("successor outside 1..n");
    }
}

FunctionalDigraph build_digraph(const PrefSequence& seq) {
    return FunctionalDigraph({seq.values().begin(), seq.values().end()});
}

std::size_t CycleStats::longest(std::size_t r) const {
    if (r == 0) throw std::invalid_argument("cycle rank r must be >= 1");
    return r <= cycle_lengths.size() ? cycle_lengths[r - 1] : 0;
}

std::size_t CycleStats::cycles_of_length(std::size_t k) const {
    return static_cast<std::size_t>(std::count(cycle_lengths.begin(), cycle_lengths.end(), k));
}

CycleStats CycleAnalyzer::analyze(std::span<const std::uint32_t> successors) {
    const auto n = successors.size();
    CycleStats out;
    out.n = n;
    if (n == 0) return out;

    indegree_.assign(n, 0);
    for (auto s : successors) ++indegree_[s - 1];

    // Peel indegree-0 vertices; whatever survives lies on a cycle.
    enum : std::uint8_t { peeled = 0, cyclic = 1, visited = 2 };
    state_.assign(n, cyclic);
    stack_.clear();
    for (std::uint32_t v = 0; v < n; ++v) {
        if (indegree_[v] == 0) stack_.push_back(v);
    }
    while (!stack_.empty()) {
        const auto v = stack_.back();
        stack_.pop_back();
        state_[v] = peeled;
        const auto w = successors[v] - 1;
        if (--indegree_[w] == 0) stack_.push_back(w);
    }

    // Ascending scan: the first vertex met on each cycle is its smallest.
    cycles_.clear();
    for (std::uint32_t v = 0; v < n; ++v) {
        if (state_[v] != cyclic) continue;
        std::size_t len = 0;
        auto w = v;
        do {
            state_[w] = visited;
            ++len;
            w = successors[w] - 1;
        } while (w != v);
        cycles_.emplace_back(len, v);
        out.cyclic_points += len;
    }
    std::stable_sort(cycles_.begin(), cycles_.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    out.num_cycles = cycles_.size();
    out.cycle_lengths.reserve(cycles_.size());
    for (const auto& c : cycles_) out.cycle_lengths.push_back(c.first);
    return out;
}

CycleStats cycle_stats(const FunctionalDigraph& g) {
    CycleAnalyzer analyzer;
    return analyzer.analyze(g.successors());
}

std::vector<CycleStats> cycle_stats_batch(std::span<const PrefSequence> seqs) {
    std::vector<CycleStats> out;
    out.reserve(seqs.size());
    CycleAnalyzer analyzer;
    for (const auto& s : seqs) out.push_back(analyzer.analyze(s.values()));
    return out;
}

std::vector<CycleStats> cycle_stats_batch(std::span<const std::vector<std::uint32_t>> raw) {
    std::vector<CycleStats> out;
    out.reserve(raw.size());
    CycleAnalyzer analyzer;
    for (const auto& r : raw) {
        PrefSequence seq(r);
        out.push_back(analyzer.analyze(seq.values()));
    }
    return out;
}

}  // namespace pfc
