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
 * @file exact.hpp
 * @brief Exact counts of (prime) parking functions by number of cyclic
 *        points, the induced pmf of lambda_n, and exact/log-space moments
 *        and MGF of the cycle count K_n.
 *
 * K_n given lambda_n = k is distributed as the cycle count of a uniform
 * permutation of k symbols, i.e. a sum of independent Bernoulli(1/j),
 * j = 1..k. All moment routines condition on lambda_n this way.
 *
 * Two independent oracles live here as well: brute-force enumeration of
 * [n]^n, and the unsimplified inclusion-exclusion double sum over cycle
 * types.
 */

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pfcycles/core.hpp"

namespace pfc {

using ExactCount = mpz_class;
using ExactRational = mpq_class;

struct CyclicPointCensus {
    std::size_t n = 0;
    Variant variant = Variant::classical;
    /// k -> number of sequences with exactly k cyclic points (k >= 1).
    std::map<std::size_t, ExactCount> counts;

    ExactCount total() const;
    bool operator==(const CyclicPointCensus&) const = default;
};

ExactCount count_pf(std::size_t n);
/// (n-1)^(n-1) with 0^0 = 1.
ExactCount count_ppf(std::size_t n);
ExactCount count_total(Variant v, std::size_t n);

/// |PF_n^(k)|, 1 <= k <= n.
ExactCount count_pf_cyclic(std::size_t n, std::size_t k);
/// |PPF_n^(k)|, n >= 2 and 1 <= k <= n-1.
ExactCount count_ppf_cyclic(std::size_t n, std::size_t k);
ExactCount count_cyclic(Variant v, std::size_t n, std::size_t k);

/// Largest feasible number of cyclic points (n, or n-1 for prime n >= 2).
std::size_t max_cyclic_points(Variant v, std::size_t n);

/// P(lambda_n = k). For the prime variant at n = 1 the only element (1) has
/// one cyclic point.
ExactRational pmf_cyclic(std::size_t n, std::size_t k, Variant v);

CyclicPointCensus census_closed_form(std::size_t n, Variant v);

/// Enumerates [n]^n. n <= 7, or n == 8 with allow_n8. Throws
/// std::invalid_argument otherwise. `workers` = 0 picks hardware concurrency.
CyclicPointCensus census_oracle_bruteforce(std::size_t n, Variant v, bool allow_n8 = false,
                                           unsigned workers = 0);

/// The inclusion-exclusion double sum over cycle-type vectors, evaluated
/// term by term without simplification. 1 <= k < n, n <= 16.
ExactCount census_oracle_partition_sum(std::size_t n, std::size_t k);

template <class T>
struct MeanVar {
    T mean;
    T variance;
};

/// H_m and sum (1/j - 1/j^2) for a uniform permutation of m symbols.
MeanVar<ExactRational> permutation_cycle_moments(std::size_t m);

/// E[K_n], Var[K_n] exactly, by conditioning on lambda_n.
MeanVar<ExactRational> exact_kn_mean_var(std::size_t n, Variant v);

/// Above this n the real-valued route skips exact rationals.
inline constexpr std::size_t kExactMomentCutoff = 1000;

/// Real-valued E[K_n], Var[K_n]: exact rationals for n <= kExactMomentCutoff,
/// extended-precision floating point above.
MeanVar<long double> kn_mean_var(std::size_t n, Variant v);

/// log P(lambda_n = k) for k = 0..n (entry 0 and infeasible k are -inf),
/// built from the ratio P(k+1)/P(k) so nothing underflows.
std::vector<long double> log_pmf_cyclic(std::size_t n, Variant v);

/// E[exp(t K_n)] in floating point, log-space products.
double exact_kn_mgf(std::size_t n, double t, Variant v);
/// log E[exp(t K_n)] (avoids overflow for large t n).
long double exact_kn_log_mgf(std::size_t n, double t, Variant v);

}  // namespace pfc
