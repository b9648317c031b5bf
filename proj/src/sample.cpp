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

#include "pfcycles/sample.hpp"

#include <limits>
#include <string>

namespace pfc {

namespace {

void require_size(std::size_t n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n >= std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("n too large");
}

// Rotate u so the spot left empty becomes 0; the result lies in 1..n.
void rotate_to_empty(std::span<const std::uint32_t> u, std::uint32_t empty, std::vector<std::uint32_t>& out) {
    const auto n = static_cast<std::uint32_t>(u.size());
    const std::uint32_t m = n + 1;
    out.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (u[i] == empty) throw InvariantViolation("a car preferred the spot left empty");
        out[i] = u[i] >= empty ? u[i] - empty : u[i] + m - empty;
    }
}

// Rotation c of u on the circle 1..m.
inline std::uint32_t rotate(std::uint32_t value, std::uint32_t c, std::uint32_t m) {
    return (value + c - 1) % m + 1;
}

// Cycle-lemma shift for u in {1..m}^(m+1).
std::uint32_t prime_shift(std::span<const std::uint32_t> u, std::vector<std::int64_t>& counts) {
    const auto m = static_cast<std::uint32_t>(u.size() - 1);
    counts.assign(m + 1, 0);
    for (auto v : u) ++counts[v];
    std::int64_t prefix = 0;
    std::int64_t best = 0;
    std::uint32_t argmin = 0;  // last index in [0, m-1] attaining the minimum
    for (std::uint32_t t = 1; t < m; ++t) {
        prefix += counts[t] - 1;
        if (prefix <= best) {
            best = prefix;
            argmin = t;
        }
    }
    return (m - argmin) % m;
}

}  // namespace

std::uint32_t empty_spot(std::span<const std::uint32_t> prefs) {
    const auto m = static_cast<std::uint32_t>(prefs.size() + 1);
    std::vector<std::int32_t> counts(m, 0);
    for (auto p : prefs) {
        if (p >= m) throw std::invalid_argument("preference out of range 0..n");
        ++counts[p];
    }
    // First strict minimum of the running surplus (arrivals minus spots).
    std::int64_t surplus = 0;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::uint32_t argmin = 0;
    for (std::uint32_t s = 0; s < m; ++s) {
        surplus += counts[s] - 1;
        if (surplus < best) {
            best = surplus;
            argmin = s;
        }
    }
    return argmin;
}

std::uint32_t empty_spot_by_parking(std::span<const std::uint32_t> prefs, std::vector<std::uint32_t>& next_free) {
    const auto m = static_cast<std::uint32_t>(prefs.size() + 1);
    next_free.resize(m);
    for (std::uint32_t s = 0; s < m; ++s) next_free[s] = s;
    auto find = [&](std::uint32_t s) {
        while (next_free[s] != s) {
            next_free[s] = next_free[next_free[s]];
            s = next_free[s];
        }
        return s;
    };
    for (auto p : prefs) {
        if (p >= m) throw std::invalid_argument("preference out of range 0..n");
        const auto spot = find(p);
        next_free[spot] = spot + 1 == m ? 0 : spot + 1;
    }
    return find(0);
}

std::uint32_t empty_spot_by_parking(std::span<const std::uint32_t> prefs) {
    std::vector<std::uint32_t> next_free;
    return empty_spot_by_parking(prefs, next_free);
}

PfSampler::PfSampler(std::size_t n) : n_(n) {
    require_size(n);
    raw_.resize(n);
}

std::span<const std::uint32_t> PfSampler::draw(RngStream& rng) {
    const auto m = static_cast<std::uint32_t>(n_ + 1);
    for (auto& r : raw_) r = rng.uniform_below(m);
    rotate_to_empty(raw_, empty_spot_by_parking(raw_, next_free_), out_);
    return out_;
}

PpfSampler::PpfSampler(std::size_t n) : n_(n) {
    require_size(n);
    raw_.resize(n);
    out_.resize(n);
}

std::span<const std::uint32_t> PpfSampler::draw(RngStream& rng) {
    if (n_ == 1) {
        out_[0] = 1;
        return out_;
    }
    const auto m = static_cast<std::uint32_t>(n_ - 1);
    for (auto& r : raw_) r = rng.uniform_below(m) + 1;
    const auto c = prime_shift(raw_, counts_);
    for (std::size_t i = 0; i < n_; ++i) out_[i] = rotate(raw_[i], c, m);
    return out_;
}

namespace {

ParkingFunction emit(std::span<const std::uint32_t> prefs, Variant v) {
    if (!satisfies(v, prefs)) {
        throw InvariantViolation("sampler emitted a sequence failing the " + std::string(to_string(v)) +
                                 " predicate");
    }
    return ParkingFunction(PrefSequence({prefs.begin(), prefs.end()}), v);
}

}  // namespace

ParkingFunction sample_pf(std::size_t n, RngStream& rng) {
    PfSampler sampler(n);
    return emit(sampler.draw(rng), Variant::classical);
}

ParkingFunction sample_ppf(std::size_t n, RngStream& rng) {
    PpfSampler sampler(n);
    return emit(sampler.draw(rng), Variant::prime);
}

ParkingFunction sample_ppf_by_shift_scan(std::size_t n, RngStream& rng) {
    require_size(n);
    if (n == 1) return ParkingFunction(PrefSequence({1}), Variant::prime);
    const auto m = static_cast<std::uint32_t>(n - 1);
    std::vector<std::uint32_t> u(n), v(n), chosen;
    for (auto& r : u) r = rng.uniform_below(m) + 1;
    std::size_t passing = 0;
    for (std::uint32_t c = 0; c < m; ++c) {
        for (std::size_t i = 0; i < n; ++i) v[i] = rotate(u[i], c, m);
        if (is_prime_parking_function(v)) {
            ++passing;
            chosen = v;
        }
    }
    if (passing != 1) {
        throw InvariantViolation(std::to_string(passing) + " rotations are prime parking functions (expected 1)");
    }
    return ParkingFunction(PrefSequence(std::move(chosen)), Variant::prime);
}

ParkingFunction sample(Variant v, std::size_t n, RngStream& rng) {
    return v == Variant::classical ? sample_pf(n, rng) : sample_ppf(n, rng);
}

RejectionExhausted::RejectionExhausted(std::uint64_t tries)
    : std::runtime_error("rejection sampler gave up after " + std::to_string(tries) + " tries"), tries_(tries) {}

RejectionResult rejection_sample_pf(std::size_t n, RngStream& rng, std::uint64_t max_tries) {
    require_size(n);
    if (max_tries < 1) throw std::invalid_argument("max_tries must be >= 1");
    const auto bound = static_cast<std::uint32_t>(n);
    std::vector<std::uint32_t> u(n);
    for (std::uint64_t t = 1; t <= max_tries; ++t) {
        for (auto& r : u) r = rng.uniform_below(bound) + 1;
        if (is_parking_function(u)) {
            return {ParkingFunction(PrefSequence(u), Variant::classical), t};
        }
    }
    throw RejectionExhausted(max_tries);
}

namespace {

// Odometer over {lo..hi}^n; returns false after the last tuple.
bool advance(std::vector<std::uint32_t>& u, std::uint32_t lo, std::uint32_t hi) {
    for (auto& d : u) {
        if (d < hi) {
            ++d;
            return true;
        }
        d = lo;
    }
    return false;
}

}  // namespace

ShiftAuditReport shift_uniqueness_audit(std::size_t n) {
    if (n < 2 || n > 6) throw std::invalid_argument("shift_uniqueness_audit needs 2 <= n <= 6");
    ShiftAuditReport rep;
    rep.n = n;

    const auto m = static_cast<std::uint32_t>(n - 1);
    std::vector<std::uint32_t> u(n, 1), v(n);
    std::vector<std::int64_t> counts;
    do {
        ++rep.sequences_checked;
        std::size_t passing = 0;
        std::uint32_t good = 0;
        for (std::uint32_t c = 0; c < m; ++c) {
            for (std::size_t i = 0; i < n; ++i) v[i] = rotate(u[i], c, m);
            if (is_prime_parking_function(v)) {
                ++passing;
                good = c;
            }
        }
        ++rep.pass_count_histogram[passing];
        const bool bad = passing != 1 || prime_shift(u, counts) != good;
        if (bad) {
            ++rep.violations;
            if (!rep.first_violation) rep.first_violation = u;
        }
    } while (advance(u, 1, m));

    if (n <= 5) {
        rep.classical_checked = true;
        const auto mc = static_cast<std::uint32_t>(n + 1);
        std::vector<std::uint32_t> w(n, 0), out, rot(n);
        std::map<std::vector<std::uint32_t>, std::uint64_t> preimages;
        do {
            ++rep.classical_sequences_checked;
            rotate_to_empty(w, empty_spot_by_parking(w), out);
            std::size_t passing = 0;
            for (std::uint32_t c = 0; c < mc; ++c) {
                bool in_range = true;
                for (std::size_t i = 0; i < n; ++i) {
                    rot[i] = (w[i] + c) % mc;
                    in_range = in_range && rot[i] != 0;
                }
                if (in_range && is_parking_function(rot)) {
                    ++passing;
                    if (rot != out) ++rep.classical_violations;
                }
            }
            if (passing != 1 || !is_parking_function(out)) ++rep.classical_violations;
            ++preimages[out];
        } while (advance(w, 0, n));
        // each parking function is hit by exactly its n+1 rotations
        std::uint64_t expected_pf = 1;
        for (std::size_t i = 0; i + 1 < n; ++i) expected_pf *= n + 1;
        if (preimages.size() != expected_pf) ++rep.classical_violations;
        for (const auto& [pf, hits] : preimages) {
            if (hits != n + 1) ++rep.classical_violations;
        }
    }
    return rep;
}

}  // namespace pfc
