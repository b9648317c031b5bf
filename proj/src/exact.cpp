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

#include "pfcycles/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace pfc {

namespace {

ExactCount factorial(std::size_t m) {
    ExactCount f;
    mpz_fac_ui(f.get_mpz_t(), m);
    return f;
}

ExactCount binomial(std::size_t n, std::size_t k) {
    ExactCount b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

ExactCount power(std::size_t base, std::size_t exp) {
    ExactCount p;
    mpz_ui_pow_ui(p.get_mpz_t(), base, exp);
    return p;
}

// base^exp for a possibly negative exponent.
ExactRational rational_power(std::size_t base, long exp) {
    if (exp >= 0) return ExactRational(power(base, static_cast<std::size_t>(exp)));
    ExactRational r(ExactCount(1), power(base, static_cast<std::size_t>(-exp)));
    r.canonicalize();
    return r;
}

ExactCount require_integral(const ExactRational& q, const char* what) {
    if (q.get_den() != 1) {
        throw InvariantViolation(std::string(what) + ": closed form is not integral");
    }
    return q.get_num();
}

void require_n(std::size_t n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
}

}  // namespace

ExactCount CyclicPointCensus::total() const {
    ExactCount t = 0;
    for (const auto& [k, c] : counts) t += c;
    return t;
}

ExactCount count_pf(std::size_t n) {
    require_n(n);
    return power(n + 1, n - 1);
}

ExactCount count_ppf(std::size_t n) {
    require_n(n);
    return power(n - 1, n - 1);  // GMP: 0^0 = 1
}

ExactCount count_total(Variant v, std::size_t n) {
    return v == Variant::classical ? count_pf(n) : count_ppf(n);
}

ExactCount count_pf_cyclic(std::size_t n, std::size_t k) {
    require_n(n);
    if (k < 1 || k > n) {
        throw std::out_of_range("cyclic points k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
    }
    if (k == n) return factorial(n);
    ExactRational q(binomial(n + 1, k) * k * factorial(k));
    q *= rational_power(n + 1, static_cast<long>(n) - static_cast<long>(k) - 2);
    return require_integral(q, "count_pf_cyclic");
}

ExactCount count_ppf_cyclic(std::size_t n, std::size_t k) {
    if (n < 2) throw std::out_of_range("prime counts by cyclic points need n >= 2");
    if (k < 1 || k > n - 1) {
        throw std::out_of_range("cyclic points k=" + std::to_string(k) + " outside 1.." + std::to_string(n - 1) +
                                " (a prime parking function cannot have n cyclic points)");
    }
    ExactRational q(ExactCount(k) * factorial(k) * binomial(n - 1, k));
    q *= rational_power(n - 1, static_cast<long>(n) - static_cast<long>(k) - 2);
    return require_integral(q, "count_ppf_cyclic");
}

ExactCount count_cyclic(Variant v, std::size_t n, std::size_t k) {
    if (v == Variant::prime && n == 1) {
        if (k != 1) throw std::out_of_range("prime n=1 has exactly one cyclic point");
        return 1;
    }
    return v == Variant::classical ? count_pf_cyclic(n, k) : count_ppf_cyclic(n, k);
}

std::size_t max_cyclic_points(Variant v, std::size_t n) {
    require_n(n);
    if (v == Variant::classical || n == 1) return n;
    return n - 1;
}

ExactRational pmf_cyclic(std::size_t n, std::size_t k, Variant v) {
    ExactRational p(count_cyclic(v, n, k), count_total(v, n));
    p.canonicalize();
    return p;
}

CyclicPointCensus census_closed_form(std::size_t n, Variant v) {
    CyclicPointCensus c;
    c.n = n;
    c.variant = v;
    for (std::size_t k = 1; k <= max_cyclic_points(v, n); ++k) c.counts[k] = count_cyclic(v, n, k);
    return c;
}

CyclicPointCensus census_oracle_bruteforce(std::size_t n, Variant v, bool allow_n8, unsigned workers) {
    require_n(n);
    if (n > 8 || (n == 8 && !allow_n8)) {
        throw std::invalid_argument("brute-force census over [n]^n refused for n=" + std::to_string(n) +
                                    " (n <= 7, or n = 8 when explicitly allowed)");
    }
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(n));

    // Block b fixes the last coordinate to b+1; blocks are dealt round-robin.
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(n + 1, 0));
    auto work = [&](unsigned w) {
        CycleAnalyzer analyzer;
        std::vector<std::uint32_t> seq(n);
        auto& local = partial[w];
        for (std::size_t block = w; block < n; block += workers) {
            std::fill(seq.begin(), seq.end(), 1u);
            seq[n - 1] = static_cast<std::uint32_t>(block + 1);
            while (true) {
                if (satisfies(v, seq)) ++local[analyzer.analyze(seq).cyclic_points];
                std::size_t i = 0;
                while (i + 1 < n && seq[i] == n) seq[i++] = 1;
                if (i + 1 >= n) break;
                ++seq[i];
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
        work(0);
    }

    CyclicPointCensus c;
    c.n = n;
    c.variant = v;
    for (std::size_t k = 1; k <= n; ++k) {
        std::uint64_t total = 0;
        for (const auto& p : partial) total += p[k];
        if (total > 0) c.counts[k] = ExactCount(static_cast<unsigned long>(total));
    }
    return c;
}

namespace {

// All partitions of j as multiplicity vectors mult[1..n] (mult[0] unused).
void partitions_of(std::size_t j, std::size_t max_part, std::size_t n, std::vector<std::size_t>& mult,
                   std::vector<std::vector<std::size_t>>& out) {
    if (j == 0) {
        out.push_back(mult);
        return;
    }
    for (std::size_t part = std::min(j, max_part); part >= 1; --part) {
        ++mult[part];
        partitions_of(j - part, part, n, mult, out);
        --mult[part];
    }
}

std::vector<std::vector<std::size_t>> partitions(std::size_t j, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> mult(n + 1, 0);
    partitions_of(j, j, n, mult, out);
    return out;
}

}  // namespace

ExactCount census_oracle_partition_sum(std::size_t n, std::size_t k) {
    if (n < 2 || n > 16) throw std::out_of_range("partition-sum oracle needs 2 <= n <= 16");
    if (k < 1 || k >= n) throw std::out_of_range("partition-sum oracle needs 1 <= k < n");

    std::vector<ExactCount> fact(n + 2);
    fact[0] = 1;
    for (std::size_t i = 1; i <= n + 1; ++i) fact[i] = fact[i - 1] * i;

    const auto outer = partitions(k, n);
    std::vector<std::vector<std::vector<std::size_t>>> inner(n - k + 1);
    for (std::size_t j = 0; j <= n - k; ++j) inner[j] = partitions(j, n);

    ExactRational sum = 0;
    for (const auto& km : outer) {
        for (std::size_t j = 0; j <= n - k; ++j) {
            for (const auto& lm : inner[j]) {
                const std::size_t covered = k + j;  // sum_i (k_i + l_i) i
                std::size_t parts_l = 0;
                ExactCount num = fact[n + 1];
                ExactCount den = fact[n + 1 - covered];
                for (std::size_t i = 1; i <= n; ++i) {
                    const auto ki = km[i], li = lm[i];
                    parts_l += li;
                    for (std::size_t r = 0; r < ki + li; ++r) {
                        num *= fact[i - 1];
                        den *= fact[i];  // multinomial block of size i
                    }
                    den *= fact[ki] * fact[li];
                }
                ExactRational term(num, den);
                term.canonicalize();
                term *= rational_power(n + 1, static_cast<long>(n) - 1 - static_cast<long>(covered));
                if (parts_l % 2 == 1) term = -term;
                sum += term;
            }
        }
    }
    return require_integral(sum, "census_oracle_partition_sum");
}

MeanVar<ExactRational> permutation_cycle_moments(std::size_t m) {
    require_n(m);
    ExactRational mean = 0, var = 0;
    for (std::size_t j = 1; j <= m; ++j) {
        ExactRational inv(1, j);
        mean += inv;
        var += inv - inv * inv;
    }
    return {mean, var};
}

MeanVar<ExactRational> exact_kn_mean_var(std::size_t n, Variant v) {
    require_n(n);
    const auto kmax = max_cyclic_points(v, n);

    // Integer accumulation over a common denominator keeps this fast:
    // H_k * L and H2_k * L^2 are integers for L = lcm(1..kmax).
    ExactCount lcm = 1;
    for (std::size_t j = 2; j <= kmax; ++j) mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), j);
    const ExactCount lcm2 = lcm * lcm;

    ExactCount harm = 0, harm2 = 0;  // H_k * L, H2_k * L^2
    ExactCount s_h = 0, s_hh = 0, s_h2 = 0;
    for (std::size_t k = 1; k <= kmax; ++k) {
        harm += lcm / k;
        harm2 += lcm2 / (ExactCount(k) * k);
        const ExactCount c = count_cyclic(v, n, k);
        s_h += c * harm;
        s_hh += c * harm * harm;
        s_h2 += c * harm2;
    }
    const ExactCount total = count_total(v, n);

    ExactRational mean(s_h, total * lcm);
    mean.canonicalize();
    // E[Var(K|lambda)] = E[H] - E[H2];  Var[E(K|lambda)] = E[H^2] - E[H]^2
    ExactRational e_h2(s_h2, total * lcm2);
    e_h2.canonicalize();
    ExactRational e_hh(s_hh, total * lcm2);
    e_hh.canonicalize();
    ExactRational var = mean - e_h2 + e_hh - mean * mean;
    return {mean, var};
}

std::vector<long double> log_pmf_cyclic(std::size_t n, Variant v) {
    require_n(n);
    constexpr long double ninf = -std::numeric_limits<long double>::infinity();
    std::vector<long double> lp(n + 1, ninf);
    if (n == 1) {
        lp[1] = 0.0L;
        return lp;
    }
    // classical: P(k) = k n! / ((n+1)^k (n+1-k)!),  k < n
    // prime:     P(k) = k (n-2)! / ((n-1)^k (n-1-k)!), k <= n-1
    const long double base = v == Variant::classical ? static_cast<long double>(n + 1)
                                                     : static_cast<long double>(n - 1);
    lp[1] = -std::log(base);
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const long double kk = static_cast<long double>(k);
        lp[k + 1] = lp[k] + std::log((kk + 1) / kk) + std::log1p(-kk / base);
    }
    if (v == Variant::classical) {
        const long double nn = static_cast<long double>(n);
        lp[n] = std::lgamma(nn + 1) - (nn - 1) * std::log(nn + 1);
    }
    return lp;
}

MeanVar<long double> kn_mean_var(std::size_t n, Variant v) {
    if (n <= kExactMomentCutoff) {
        const auto mv = exact_kn_mean_var(n, v);
        return {static_cast<long double>(mv.mean.get_d()), static_cast<long double>(mv.variance.get_d())};
    }
    const auto lp = log_pmf_cyclic(n, v);
    const auto kmax = max_cyclic_points(v, n);
    std::vector<long double> p(kmax + 1, 0.0L), h(kmax + 1, 0.0L);
    long double harm = 0, harm2 = 0, mean = 0, within = 0;
    for (std::size_t k = 1; k <= kmax; ++k) {
        const long double kk = static_cast<long double>(k);
        harm += 1 / kk;
        harm2 += 1 / (kk * kk);
        p[k] = std::exp(lp[k]);
        h[k] = harm;
        mean += p[k] * harm;
        within += p[k] * (harm - harm2);
    }
    long double between = 0;
    for (std::size_t k = 1; k <= kmax; ++k) between += p[k] * (h[k] - mean) * (h[k] - mean);
    return {mean, within + between};
}

long double exact_kn_log_mgf(std::size_t n, double t, Variant v) {
    if (t == 0) return 0;  // E[1], not a rounded log-sum-exp of the pmf
    const auto lp = log_pmf_cyclic(n, v);
    const auto kmax = max_cyclic_points(v, n);
    const long double s_minus_1 = std::expm1(static_cast<long double>(t));
    // log prod_{j<=k} (e^t + j - 1)/j, then log-sum-exp over k
    std::vector<long double> terms(kmax + 1);
    long double log_prod = 0, peak = -std::numeric_limits<long double>::infinity();
    for (std::size_t k = 1; k <= kmax; ++k) {
        log_prod += std::log1p(s_minus_1 / static_cast<long double>(k));
        terms[k] = lp[k] + log_prod;
        peak = std::max(peak, terms[k]);
    }
    long double acc = 0;
    for (std::size_t k = 1; k <= kmax; ++k) acc += std::exp(terms[k] - peak);
    return peak + std::log(acc);
}

double exact_kn_mgf(std::size_t n, double t, Variant v) {
    return static_cast<double>(std::exp(exact_kn_log_mgf(n, t, v)));
}

}  // namespace pfc
