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
 * @file harness.hpp
 * @brief Reproducible Monte Carlo experiments over uniform (prime) parking
 *        functions.
 *
 * Sample i always uses the RNG stream (seed, i), and every statistic is
 * accumulated as an integer tally (value -> count). Tallies merge by exact
 * integer addition, so results do not depend on the worker count or on the
 * order in which chunks finish. All floating-point post-processing runs once,
 * on the merged tally, in a fixed order.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfcycles/core.hpp"

namespace pfc {

enum class Statistic { cyclic_points, cycle_count, longest_cycle, small_cycle };
std::string_view to_string(Statistic s);
Statistic parse_statistic(std::string_view s);

inline constexpr std::uint64_t kChunkSize = 4096;
inline constexpr std::uint64_t kReleaseValidateStride = 100;

struct ExperimentConfig {
    Variant variant = Variant::classical;
    std::size_t n = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<Statistic> statistics;
    std::size_t r = 1;  ///< rank for longest_cycle
    std::size_t k = 1;  ///< cycle length for small_cycle
    /// 0 = hardware concurrency. Never affects results.
    unsigned workers = 0;
    /// Predicate-check every stride-th sample (1 = all of them).
    std::uint64_t validate_stride = kReleaseValidateStride;
    /// Record wall time; the only field that makes output nondeterministic.
    bool timing = false;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
    bool operator==(const ExperimentConfig&) const = default;
};

using Tally = std::map<std::uint64_t, std::uint64_t>;
using PairTally = std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t>;

void merge_into(Tally& dst, const Tally& src);
void merge_into(PairTally& dst, const PairTally& src);

struct Moments {
    double mean = 0;
    double variance = 0;  ///< population (1/N) central second moment
    double central3 = 0;
    double central4 = 0;
    double second_raw = 0;  ///< E[X^2]
    bool degenerate = false;  ///< N == 1 or all samples equal
    bool operator==(const Moments&) const = default;
};

struct Histogram {
    double lo = 0;
    double width = 0;
    std::vector<std::uint64_t> counts;  ///< bin i covers [lo + i w, lo + (i+1) w)
    std::uint64_t total() const;
    bool operator==(const Histogram&) const = default;
};

struct Check {
    std::string name;
    double observed = 0;
    double target = 0;
    double tolerance = 0;  ///< absolute
    bool pass = false;
    bool operator==(const Check&) const = default;
};

struct PmfEntry {
    std::uint64_t value = 0;
    double empirical = 0;
    double reference = 0;
    bool operator==(const PmfEntry&) const = default;
};

struct StatisticSummary {
    Statistic statistic = Statistic::cyclic_points;
    std::string quantity;   ///< how raw values are scaled, e.g. "lambda/sqrt(n)"
    std::string reference;  ///< reference law name
    Tally tally;            ///< raw integer values
    Moments moments;        ///< of the scaled quantity
    Histogram histogram;    ///< of the scaled quantity
    std::optional<double> ks;            ///< sup |F_emp - F_ref|
    std::optional<double> ks_corrected;  ///< lattice half-step correction (diagnostic)
    std::map<std::string, double> extras;
    std::vector<PmfEntry> pmf;
    std::vector<Check> checks;
    bool operator==(const StatisticSummary&) const = default;
};

struct JointHistogram {
    double width = 0.25;
    std::size_t bins = 20;  ///< per axis, both starting at 0
    std::vector<std::uint64_t> counts;  ///< row-major [x_bin * bins + y_bin]
    std::vector<double> reference_mass;  ///< limit-density mass per cell
    double total_variation = 0;
    bool operator==(const JointHistogram&) const = default;
};

struct ExperimentSummary {
    ExperimentConfig config;  ///< workers/validate_stride normalized away
    std::vector<StatisticSummary> statistics;
    std::optional<JointHistogram> joint;  ///< (lambda/sqrt n, L_r/sqrt n)
    std::uint64_t merge_count = 0;
    std::optional<double> runtime_ms;

    bool all_passed() const;
    const StatisticSummary& get(Statistic s) const;
    bool operator==(const ExperimentSummary&) const = default;
};

/// One sampling pass serving every statistic in cfg.statistics.
ExperimentSummary run_experiment(const ExperimentConfig& cfg);

ExperimentSummary run_cyclic_points_experiment(ExperimentConfig cfg);
ExperimentSummary run_cycle_count_experiment(ExperimentConfig cfg);
ExperimentSummary run_longest_cycle_experiment(ExperimentConfig cfg);
ExperimentSummary run_small_cycle_experiment(ExperimentConfig cfg);

struct MgfRow {
    Variant variant = Variant::classical;
    std::size_t n = 0;
    double t = 0;
    double scaled_log_mgf = 0;  ///< log E[e^{t K_n}] / log n
    double target = 0;          ///< (e^t - 1)/2
    double abs_error = 0;
    bool operator==(const MgfRow&) const = default;
};

/// Deterministic; rows ordered by t, then n (as given).
std::vector<MgfRow> run_mgf_scaling_experiment(std::span<const std::size_t> n_grid,
                                               std::span<const double> t_grid, Variant v);
/// True when, for every t, abs_error strictly decreases along the n-grid
/// (a series that is exactly zero throughout counts as converged).
bool mgf_errors_decreasing(std::span<const MgfRow> rows);

/// sup |F_emp - F| over sorted samples, O(N log N). Throws on empty input.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);
/// Same distance from a tally; `scale` maps raw values to the compared quantity.
double ks_distance(const Tally& tally, const std::function<double(double)>& scale,
                   const std::function<double(double)>& cdf);
/// Integer-lattice variant evaluating F at scale(v + 1/2).
double ks_distance_corrected(const Tally& tally, const std::function<double(double)>& scale,
                             const std::function<double(double)>& cdf);

/// (1/2) sum_j |p_emp(j) - Poisson(mean)(j)| including the reference tail
/// beyond the observed support.
double tv_distance_poisson(const Tally& tally, double mean);

Moments tally_moments(const Tally& tally, const std::function<double(double)>& scale);
Histogram tally_histogram(const Tally& tally, const std::function<double(double)>& scale, double lo,
                          double width, std::size_t bins);

}  // namespace pfc
