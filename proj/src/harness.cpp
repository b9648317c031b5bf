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

#include "pfcycles/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "pfcycles/exact.hpp"
#include "pfcycles/rng.hpp"
#include "pfcycles/sample.hpp"
#include "pfcycles/specfun.hpp"

namespace pfc {

std::string_view to_string(Statistic s) {
    switch (s) {
        case Statistic::cyclic_points: return "cyclic-points";
        case Statistic::cycle_count: return "cycle-count";
        case Statistic::longest_cycle: return "longest-cycle";
        case Statistic::small_cycle: return "small-cycle";
    }
    return "?";
}

Statistic parse_statistic(std::string_view s) {
    for (auto st : {Statistic::cyclic_points, Statistic::cycle_count, Statistic::longest_cycle,
                    Statistic::small_cycle}) {
        if (s == to_string(st)) return st;
    }
    throw std::invalid_argument("unknown statistic '" + std::string(s) + "'");
}

void ExperimentConfig::validate() const {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n > (std::size_t{1} << 31)) throw std::invalid_argument("n too large");
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (statistics.empty()) throw std::invalid_argument("statistics: at least one statistic required");
    if (validate_stride < 1) throw std::invalid_argument("validate_stride must be >= 1");
    for (auto s : statistics) {
        if (s == Statistic::longest_cycle && r < 1) throw std::invalid_argument("r must be >= 1");
        if (s == Statistic::small_cycle && k < 1) throw std::invalid_argument("k must be >= 1");
        if (s == Statistic::cycle_count && n < 2) {
            throw std::invalid_argument("n must be >= 2 for cycle-count (W_n divides by log n)");
        }
    }
}

void merge_into(Tally& dst, const Tally& src) {
    for (const auto& [v, c] : src) dst[v] += c;
}

void merge_into(PairTally& dst, const PairTally& src) {
    for (const auto& [v, c] : src) dst[v] += c;
}

std::uint64_t Histogram::total() const {
    std::uint64_t s = 0;
    for (auto c : counts) s += c;
    return s;
}

bool ExperimentSummary::all_passed() const {
    for (const auto& s : statistics) {
        for (const auto& c : s.checks) {
            if (!c.pass) return false;
        }
    }
    return true;
}

const StatisticSummary& ExperimentSummary::get(Statistic s) const {
    for (const auto& st : statistics) {
        if (st.statistic == s) return st;
    }
    throw std::out_of_range("summary has no " + std::string(to_string(s)) + " section");
}

// ---------------------------------------------------------------------------
// Distances and moments

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_distance: empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
    }
    return d;
}

namespace {
std::uint64_t tally_total(const Tally& t) {
    std::uint64_t s = 0;
    for (const auto& [v, c] : t) s += c;
    return s;
}
}  // namespace

double ks_distance(const Tally& tally, const std::function<double(double)>& scale,
                   const std::function<double(double)>& cdf) {
    const std::uint64_t total = tally_total(tally);
    if (total == 0) throw std::invalid_argument("ks_distance: empty tally");
    const double n = static_cast<double>(total);
    std::uint64_t cum = 0;
    double d = 0;
    for (const auto& [v, c] : tally) {
        const double f = cdf(scale(static_cast<double>(v)));
        const double before = static_cast<double>(cum) / n;
        cum += c;
        d = std::max({d, static_cast<double>(cum) / n - f, f - before});
    }
    return d;
}

double ks_distance_corrected(const Tally& tally, const std::function<double(double)>& scale,
                             const std::function<double(double)>& cdf) {
    const std::uint64_t total = tally_total(tally);
    if (total == 0) throw std::invalid_argument("ks_distance: empty tally");
    const double n = static_cast<double>(total);
    std::uint64_t cum = 0;
    double d = 0;
    for (const auto& [v, c] : tally) {
        const double x = static_cast<double>(v);
        // last lattice point before v, where the ECDF still equals cum / N
        d = std::max(d, std::abs(static_cast<double>(cum) / n - cdf(scale(x - 0.5))));
        cum += c;
        d = std::max(d, std::abs(static_cast<double>(cum) / n - cdf(scale(x + 0.5))));
    }
    return d;
}

double tv_distance_poisson(const Tally& tally, double mean) {
    const std::uint64_t total = tally_total(tally);
    if (total == 0) throw std::invalid_argument("tv_distance_poisson: empty tally");
    const std::uint64_t top = tally.rbegin()->first;
    double sum = 0;
    double ref_mass = 0;
    for (std::uint64_t j = 0; j <= top; ++j) {
        const auto it = tally.find(j);
        const double emp = it == tally.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(total);
        const double p = poisson_pmf(j, mean);
        ref_mass += p;
        sum += std::abs(emp - p);
    }
    sum += std::max(0.0, 1.0 - ref_mass);
    return 0.5 * sum;
}

Moments tally_moments(const Tally& tally, const std::function<double(double)>& scale) {
    const std::uint64_t total = tally_total(tally);
    if (total == 0) throw std::invalid_argument("tally_moments: empty tally");
    const long double n = static_cast<long double>(total);
    long double s1 = 0;
    long double s2raw = 0;
    for (const auto& [v, c] : tally) {
        const long double x = scale(static_cast<double>(v));
        s1 += x * c;
        s2raw += x * x * c;
    }
    const long double mean = s1 / n;
    long double m2 = 0, m3 = 0, m4 = 0;
    for (const auto& [v, c] : tally) {
        const long double d = static_cast<long double>(scale(static_cast<double>(v))) - mean;
        const long double d2 = d * d;
        m2 += d2 * c;
        m3 += d2 * d * c;
        m4 += d2 * d2 * c;
    }
    Moments m;
    m.mean = static_cast<double>(mean);
    m.variance = static_cast<double>(m2 / n);
    m.central3 = static_cast<double>(m3 / n);
    m.central4 = static_cast<double>(m4 / n);
    m.second_raw = static_cast<double>(s2raw / n);
    m.degenerate = total == 1 || tally.size() == 1;
    return m;
}

Histogram tally_histogram(const Tally& tally, const std::function<double(double)>& scale, double lo,
                          double width, std::size_t bins) {
    if (bins == 0 || !(width > 0)) throw std::invalid_argument("histogram needs bins >= 1, width > 0");
    Histogram h;
    h.lo = lo;
    h.width = width;
    h.counts.assign(bins, 0);
    for (const auto& [v, c] : tally) {
        const double pos = std::floor((scale(static_cast<double>(v)) - lo) / width);
        std::size_t idx = 0;
        if (pos >= static_cast<double>(bins)) {
            idx = bins - 1;
        } else if (pos > 0) {
            idx = static_cast<std::size_t>(pos);
        }
        h.counts[idx] += c;
    }
    return h;
}

// ---------------------------------------------------------------------------
// Sampling pass

namespace {

struct Accumulator {
    Tally cyclic;
    Tally cycles;
    Tally longest;
    Tally small;
    PairTally joint;
    std::uint64_t merges = 0;

    void merge(const Accumulator& o) {
        merge_into(cyclic, o.cyclic);
        merge_into(cycles, o.cycles);
        merge_into(longest, o.longest);
        merge_into(small, o.small);
        merge_into(joint, o.joint);
        merges += o.merges;
    }
};

struct Wanted {
    bool cyclic = false, cycles = false, longest = false, small = false;
};

void run_chunk(const ExperimentConfig& cfg, const Wanted& want, std::uint64_t begin, std::uint64_t end,
               PfSampler& pf, PpfSampler& ppf, CycleAnalyzer& analyzer, Accumulator& acc) {
    for (std::uint64_t i = begin; i < end; ++i) {
        RngStream rng(cfg.seed, i);
        const auto prefs = cfg.variant == Variant::classical ? pf.draw(rng) : ppf.draw(rng);
        if (i % cfg.validate_stride == 0 && !satisfies(cfg.variant, prefs)) {
            throw InvariantViolation("sample " + std::to_string(i) + " fails the " +
                                     std::string(to_string(cfg.variant)) + " parking predicate");
        }
        const CycleStats st = analyzer.analyze(prefs);
        std::size_t covered = 0;
        for (auto len : st.cycle_lengths) covered += len;
        if (covered != st.cyclic_points || st.cycle_lengths.size() != st.num_cycles || st.num_cycles == 0) {
            throw InvariantViolation("inconsistent cycle statistics at sample " + std::to_string(i));
        }
        if (want.cyclic) ++acc.cyclic[st.cyclic_points];
        if (want.cycles) ++acc.cycles[st.num_cycles];
        if (want.longest) {
            const std::uint64_t lr = st.longest(cfg.r);
            ++acc.longest[lr];
            ++acc.joint[{st.cyclic_points, lr}];
        }
        if (want.small) ++acc.small[st.cycles_of_length(cfg.k)];
    }
}

Accumulator sample_all(const ExperimentConfig& cfg, const Wanted& want) {
    const std::uint64_t chunks = (cfg.samples + kChunkSize - 1) / kChunkSize;
    unsigned workers = cfg.workers != 0 ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));

    std::vector<Accumulator> partial(workers);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    std::atomic<bool> stop{false};

    auto work = [&](unsigned w) {
        try {
            PfSampler pf(cfg.variant == Variant::classical ? cfg.n : 1);
            PpfSampler ppf(cfg.variant == Variant::prime ? cfg.n : 1);
            CycleAnalyzer analyzer;
            for (;;) {
                const std::uint64_t c = next.fetch_add(1);
                if (c >= chunks || stop.load()) break;
                Accumulator local;
                const std::uint64_t begin = c * kChunkSize;
                run_chunk(cfg, want, begin, std::min(cfg.samples, begin + kChunkSize), pf, ppf, analyzer, local);
                local.merges = 1;
                partial[w].merge(local);
            }
        } catch (...) {
            const std::lock_guard lock(failure_mu);
            if (!failure) failure = std::current_exception();
            stop = true;
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    if (failure) std::rethrow_exception(failure);

    Accumulator total;
    for (const auto& p : partial) total.merge(p);
    return total;
}

Check make_check(std::string name, double observed, double target, double tolerance) {
    return {std::move(name), observed, target, tolerance, std::abs(observed - target) <= tolerance};
}

Check make_bound(std::string name, double observed, double bound) {
    return {std::move(name), observed, 0.0, bound, observed < bound};
}

StatisticSummary summarize_cyclic(const ExperimentConfig& cfg, const Tally& t) {
    const double root = std::sqrt(static_cast<double>(cfg.n));
    const auto scale = [root](double v) { return v / root; };
    const auto cdf = [](double x) { return x <= 0 ? 0.0 : rayleigh(x).cdf; };
    StatisticSummary s;
    s.statistic = Statistic::cyclic_points;
    s.quantity = "lambda/sqrt(n)";
    s.reference = "rayleigh(1)";
    s.tally = t;
    s.moments = tally_moments(t, scale);
    s.histogram = tally_histogram(t, scale, 0.0, 0.05, 100);
    s.ks = ks_distance(t, scale, cdf);
    s.ks_corrected = ks_distance_corrected(t, scale, cdf);
    const double mu = rayleigh_moment(1);
    s.checks.push_back(make_bound("ks_rayleigh", *s.ks, 0.02));
    s.checks.push_back(make_check("mean", s.moments.mean, mu, 0.02 * mu));
    s.checks.push_back(make_check("second_moment", s.moments.second_raw, 2.0, 0.04));
    return s;
}

StatisticSummary summarize_cycles(const ExperimentConfig& cfg, const Tally& t) {
    const double half_log = 0.5 * std::log(static_cast<double>(cfg.n));
    const double sd = std::sqrt(half_log);
    const auto identity = [](double v) { return v; };
    const auto w_scale = [half_log, sd](double v) { return (v - half_log) / sd; };
    StatisticSummary s;
    s.statistic = Statistic::cycle_count;
    s.quantity = "K_n; histogram and ks on (K_n - log(n)/2)/sqrt(log(n)/2)";
    s.reference = "normal(0,1)";
    s.tally = t;
    s.moments = tally_moments(t, identity);
    s.histogram = tally_histogram(t, w_scale, -5.0, 0.05, 200);
    s.ks = ks_distance(t, w_scale, normal_cdf);
    s.ks_corrected = ks_distance_corrected(t, w_scale, normal_cdf);

    const double n_samples = static_cast<double>(tally_total(t));
    const auto exact = kn_mean_var(cfg.n, cfg.variant);
    const double exact_mean = static_cast<double>(exact.mean);
    const double exact_var = static_cast<double>(exact.variance);
    const double asym_mean = kn_asymptotic_mean(static_cast<double>(cfg.n));
    const double asym_var = kn_asymptotic_var(static_cast<double>(cfg.n));
    s.extras["exact_mean"] = exact_mean;
    s.extras["exact_variance"] = exact_var;
    s.extras["asymptotic_mean"] = asym_mean;
    s.extras["asymptotic_variance"] = asym_var;
    for (double eps : {0.1, 0.2, 0.5}) {
        std::uint64_t far = 0;
        for (const auto& [v, c] : t) {
            if (std::abs(static_cast<double>(v) / half_log - 1.0) > eps) far += c;
        }
        const std::string key = eps == 0.1 ? "lln_tail_0.1" : eps == 0.2 ? "lln_tail_0.2" : "lln_tail_0.5";
        s.extras[key] = static_cast<double>(far) / n_samples;
    }

    const double se_mean = std::sqrt(s.moments.variance / n_samples);
    const double se_var =
        std::sqrt(std::max(0.0, s.moments.central4 - s.moments.variance * s.moments.variance) / n_samples);
    s.checks.push_back(make_check("mean_vs_asymptotic", s.moments.mean, asym_mean, 0.05));
    s.checks.push_back(make_check("mean_vs_exact", s.moments.mean, exact_mean, 3 * se_mean + 1e-9));
    s.checks.push_back(make_check("variance_vs_exact", s.moments.variance, exact_var, 3 * se_var + 1e-9));
    s.checks.push_back(make_bound("ks_normal", *s.ks, 0.05));
    s.checks.push_back(make_bound("lln_tail_0.5", s.extras["lln_tail_0.5"], 0.05));
    return s;
}

StatisticSummary summarize_longest(const ExperimentConfig& cfg, const Tally& t) {
    const double root = std::sqrt(static_cast<double>(cfg.n));
    const auto scale = [root](double v) { return v / root; };
    StatisticSummary s;
    s.statistic = Statistic::longest_cycle;
    s.quantity = "L_r/sqrt(n), r=" + std::to_string(cfg.r);
    s.reference = "sqrt(pi/2)*G_{r,1}";
    s.tally = t;
    s.moments = tally_moments(t, scale);
    s.histogram = tally_histogram(t, scale, 0.0, 0.05, 100);
    const double target = longest_cycle_limit_mean(static_cast<long>(cfg.r));
    s.extras["limit_mean"] = target;
    s.extras["g_r1"] = golomb_dickman_g(static_cast<long>(cfg.r)).value;
    const double rel = cfg.r == 1 ? 0.02 : 0.05;
    s.checks.push_back(make_check("mean_vs_limit", s.moments.mean, target, rel * target));
    if (cfg.r == 1) s.checks.push_back(make_check("mean_vs_0.7825", s.moments.mean, 0.7825, 0.02 * 0.7825));
    return s;
}

StatisticSummary summarize_small(const ExperimentConfig& cfg, const Tally& t) {
    const auto identity = [](double v) { return v; };
    const double mean = 1.0 / static_cast<double>(cfg.k);
    StatisticSummary s;
    s.statistic = Statistic::small_cycle;
    s.quantity = "C_k, k=" + std::to_string(cfg.k);
    s.reference = "poisson(1/k)";
    s.tally = t;
    s.moments = tally_moments(t, identity);
    const std::size_t top = t.rbegin()->first;
    s.histogram = tally_histogram(t, identity, -0.5, 1.0, top + 1);
    const double total = static_cast<double>(tally_total(t));
    for (std::uint64_t j = 0; j <= top; ++j) {
        const auto it = t.find(j);
        s.pmf.push_back({j, it == t.end() ? 0.0 : static_cast<double>(it->second) / total, poisson_pmf(j, mean)});
    }
    const double tv = tv_distance_poisson(t, mean);
    s.extras["tv_poisson"] = tv;
    s.checks.push_back(make_check("mean", s.moments.mean, mean, 0.05 * mean));
    s.checks.push_back(make_bound("tv_poisson", tv, 0.03));
    return s;
}

JointHistogram summarize_joint(const ExperimentConfig& cfg, const PairTally& joint) {
    JointHistogram h;
    const double root = std::sqrt(static_cast<double>(cfg.n));
    h.counts.assign(h.bins * h.bins, 0);
    std::uint64_t total = 0;
    auto bin = [&](double x) {
        const double pos = std::floor(x / h.width);
        if (pos <= 0) return std::size_t{0};
        return std::min(h.bins - 1, static_cast<std::size_t>(pos));
    };
    for (const auto& [key, c] : joint) {
        const double x = static_cast<double>(key.first) / root;
        const double y = static_cast<double>(key.second) / root;
        h.counts[bin(x) * h.bins + bin(y)] += c;
        total += c;
    }

    // 4x4 Gauss-Legendre per cell; the density vanishes below the diagonal.
    static const double gx[4] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                                 0.8611363115940526};
    static const double gw[4] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                                 0.3478548451374538};
    const double ymin = 0.5 * h.width * (1 + gx[0]);
    const DickmanTable table(cfg.r, (h.width * static_cast<double>(h.bins)) / ymin + 1.0, 100);
    const long r = static_cast<long>(cfg.r);
    h.reference_mass.assign(h.bins * h.bins, 0.0);
    double tv = 0;
    for (std::size_t i = 0; i < h.bins; ++i) {
        for (std::size_t j = 0; j < h.bins; ++j) {
            double mass = 0;
            if (j <= i) {
                for (int a = 0; a < 4; ++a) {
                    const double x = h.width * (static_cast<double>(i) + 0.5 * (1 + gx[a]));
                    for (int b = 0; b < 4; ++b) {
                        const double y = h.width * (static_cast<double>(j) + 0.5 * (1 + gx[b]));
                        mass += gw[a] * gw[b] * joint_limit_density(r, x, y, table);
                    }
                }
                mass *= 0.25 * h.width * h.width;
            }
            h.reference_mass[i * h.bins + j] = mass;
            const double emp = static_cast<double>(h.counts[i * h.bins + j]) / static_cast<double>(total);
            tv += std::abs(emp - mass);
        }
    }
    h.total_variation = 0.5 * tv;
    return h;
}

}  // namespace

ExperimentSummary run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    Wanted want;
    for (auto s : cfg.statistics) {
        want.cyclic |= s == Statistic::cyclic_points;
        want.cycles |= s == Statistic::cycle_count;
        want.longest |= s == Statistic::longest_cycle;
        want.small |= s == Statistic::small_cycle;
    }
    const Accumulator acc = sample_all(cfg, want);

    ExperimentSummary out;
    out.config = cfg;
    out.config.workers = 0;
    out.config.validate_stride = kReleaseValidateStride;
    out.merge_count = acc.merges;
    for (auto s : cfg.statistics) {
        switch (s) {
            case Statistic::cyclic_points: out.statistics.push_back(summarize_cyclic(cfg, acc.cyclic)); break;
            case Statistic::cycle_count: out.statistics.push_back(summarize_cycles(cfg, acc.cycles)); break;
            case Statistic::longest_cycle:
                out.statistics.push_back(summarize_longest(cfg, acc.longest));
                out.joint = summarize_joint(cfg, acc.joint);
                break;
            case Statistic::small_cycle: out.statistics.push_back(summarize_small(cfg, acc.small)); break;
        }
        if (out.statistics.back().histogram.total() != cfg.samples) {
            throw InvariantViolation("histogram counts do not sum to the sample size");
        }
    }
    if (cfg.timing) {
        out.runtime_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    return out;
}

namespace {
ExperimentSummary run_single(ExperimentConfig cfg, Statistic s) {
    cfg.statistics = {s};
    return run_experiment(cfg);
}
}  // namespace

ExperimentSummary run_cyclic_points_experiment(ExperimentConfig cfg) {
    return run_single(std::move(cfg), Statistic::cyclic_points);
}
ExperimentSummary run_cycle_count_experiment(ExperimentConfig cfg) {
    return run_single(std::move(cfg), Statistic::cycle_count);
}
ExperimentSummary run_longest_cycle_experiment(ExperimentConfig cfg) {
    return run_single(std::move(cfg), Statistic::longest_cycle);
}
ExperimentSummary run_small_cycle_experiment(ExperimentConfig cfg) {
    return run_single(std::move(cfg), Statistic::small_cycle);
}

// ---------------------------------------------------------------------------

std::vector<MgfRow> run_mgf_scaling_experiment(std::span<const std::size_t> n_grid, std::span<const double> t_grid,
                                               Variant v) {
    if (n_grid.empty() || t_grid.empty()) throw std::invalid_argument("mgf grids must be nonempty");
    for (auto n : n_grid) {
        if (n < 2) throw std::invalid_argument("mgf n-grid entries must be >= 2");
    }
    std::vector<MgfRow> rows;
    for (double t : t_grid) {
        for (auto n : n_grid) {
            MgfRow row;
            row.variant = v;
            row.n = n;
            row.t = t;
            row.scaled_log_mgf =
                static_cast<double>(exact_kn_log_mgf(n, t, v) / std::log(static_cast<long double>(n)));
            row.target = ldp_log_mgf_limit(t);
            row.abs_error = std::abs(row.scaled_log_mgf - row.target);
            rows.push_back(row);
        }
    }
    return rows;
}

bool mgf_errors_decreasing(std::span<const MgfRow> rows) {
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const bool same_series = rows[i].t == rows[i - 1].t && rows[i].variant == rows[i - 1].variant;
        const bool exact = rows[i].abs_error == 0 && rows[i - 1].abs_error == 0;
        if (same_series && !exact && !(rows[i].abs_error < rows[i - 1].abs_error)) {
            return false;
        }
    }
    return true;
}

}  // namespace pfc
