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

#include "pfcycles/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "pfcycles/quadrature.hpp"

namespace pfc {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

SpecFunResult exp_integral_e1(double x) {
    if (!(x > 0)) throw std::invalid_argument("E1(x) needs x > 0");
    if (x <= 1.0) {
        // E1(x) = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!)
        double term = 1.0;  // (-x)^k / k!
        double sum = 0.0;
        double magnitude = 0.0;
        for (int k = 1; k < 60; ++k) {
            term *= -x / k;
            const double add = term / k;
            sum += add;
            magnitude += std::abs(add);
            if (std::abs(add) < kEps * 1e-3 * std::abs(sum)) break;
        }
        const double value = -static_cast<double>(constants::euler_gamma) - std::log(x) - sum;
        const double err = 4 * kEps * (std::abs(std::log(x)) + 1.0 + magnitude);
        return {value, err};
    }
    // E1(x) = e^-x / (x + 1 - 1^2/(x + 3 - 2^2/(x + 5 - ...)))
    constexpr double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    int i = 1;
    for (; i < 500; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    const double value = h * std::exp(-x);
    return {value, 8 * kEps * value};
}

// ---------------------------------------------------------------------------
// Dickman table

namespace {

// Cubic Lagrange through the 4 grid nodes around position a+theta, never
// crossing the unit interval that contains [a, a+1].
double interp_unit(const std::vector<double>& v, std::size_t a, double theta, std::size_t m) {
    const std::size_t lo = (a / m) * m;
    const std::size_t hi = lo + m;
    std::size_t b = a >= 1 ? a - 1 : 0;
    b = std::clamp(b, lo, hi - 3);
    const double s = static_cast<double>(a - b) + theta;  // position relative to node b
    const double f0 = v[b], f1 = v[b + 1], f2 = v[b + 2], f3 = v[b + 3];
    const double l0 = -(s - 1) * (s - 2) * (s - 3) / 6.0;
    const double l1 = s * (s - 2) * (s - 3) / 2.0;
    const double l2 = -s * (s - 1) * (s - 3) / 2.0;
    const double l3 = s * (s - 1) * (s - 2) / 6.0;
    return l0 * f0 + l1 * f1 + l2 * f2 + l3 * f3;
}

void march(const std::vector<double>& lower, std::vector<double>& out, std::size_t m) {
    // 3-point Gauss-Legendre on each grid step
    static const double gx[3] = {0.5 - 0.5 * std::sqrt(0.6), 0.5, 0.5 + 0.5 * std::sqrt(0.6)};
    static const double gw[3] = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
    const double h = 1.0 / static_cast<double>(m);
    for (std::size_t i = 0; i <= m && i < out.size(); ++i) out[i] = 1.0;
    for (std::size_t i = m + 1; i < out.size(); ++i) {
        const std::size_t a = i - 1 - m;  // delayed step [a, a+1]
        double integral = 0.0;
        for (int q = 0; q < 3; ++q) {
            const double t = (static_cast<double>(i - 1) + gx[q]) * h;
            const double delayed = interp_unit(out, a, gx[q], m) - interp_unit(lower, a, gx[q], m);
            integral += gw[q] * delayed / t;
        }
        out[i] = out[i - 1] - h * integral;
    }
}

std::vector<std::vector<double>> build(std::size_t r_max, std::size_t units, std::size_t m) {
    std::vector<std::vector<double>> v(r_max + 1, std::vector<double>(units * m + 1, 0.0));
    for (std::size_t r = 1; r <= r_max; ++r) march(v[r - 1], v[r], m);
    return v;
}

}  // namespace

DickmanTable::DickmanTable(std::size_t r_max, double x_max, std::size_t steps_per_unit)
    : r_max_(r_max), steps_per_unit_(steps_per_unit) {
    if (steps_per_unit < 4) throw std::invalid_argument("DickmanTable needs >= 4 steps per unit");
    if (!(x_max >= 1.0)) x_max = 1.0;
    const auto units = static_cast<std::size_t>(std::ceil(x_max));
    x_max_ = static_cast<double>(units);
    values_ = build(r_max, units, steps_per_unit);

    const auto fine = build(r_max, units, 2 * steps_per_unit);
    error_.assign(r_max + 1, 0.0);
    for (std::size_t r = 1; r <= r_max; ++r) {
        double worst = 0.0;
        for (std::size_t i = 0; i < values_[r].size(); ++i) {
            worst = std::max(worst, std::abs(values_[r][i] - fine[r][2 * i]));
        }
        error_[r] = worst;
    }
}

double DickmanTable::value(std::size_t r, double x) const {
    if (r > r_max_) throw std::out_of_range("Dickman table built for r <= " + std::to_string(r_max_));
    if (x < 0) throw std::out_of_range("rho_r(x) needs x >= 0");
    if (x > x_max_ * (1 + 1e-12)) {
        throw std::out_of_range("x=" + std::to_string(x) + " beyond Dickman table (x_max=" + std::to_string(x_max_) +
                                ")");
    }
    if (r == 0) return 0.0;
    if (x <= 1.0) return 1.0;
    const auto& v = values_[r];
    const double pos = x * static_cast<double>(steps_per_unit_);
    auto a = static_cast<std::size_t>(pos);
    if (a >= v.size() - 1) a = v.size() - 2;
    return interp_unit(v, a, pos - static_cast<double>(a), steps_per_unit_);
}

SpecFunResult DickmanTable::evaluate(std::size_t r, double x) const {
    return {value(r, x), error_.at(r) + 4 * kEps};
}

SpecFunResult dickman_rho(long r, double x) {
    if (r < 0) throw std::invalid_argument("rho_r needs r >= 0");
    if (!(x >= 0)) throw std::invalid_argument("rho_r(x) needs x >= 0");
    if (r == 0) return {0.0, 0.0};
    if (x <= 1.0) return {1.0, 0.0};
    const DickmanTable table(static_cast<std::size_t>(r), std::max(2.0, x));
    return table.evaluate(static_cast<std::size_t>(r), x);
}

// ---------------------------------------------------------------------------
// Shepp-Lloyd constants

namespace {

double shepp_lloyd_integrand(double x, long r, double log_gamma_r) {
    const double e1 = exp_integral_e1(x).value;
    if (e1 <= 0) return 0.0;
    return std::exp(static_cast<double>(r - 1) * std::log(e1) - e1 - x - log_gamma_r);
}

}  // namespace

SpecFunResult golomb_dickman_g(long r) {
    if (r < 1) throw std::invalid_argument("G_{r,1} needs r >= 1");
    const double lg = std::lgamma(static_cast<double>(r));

    // (0, 1] through x = e^-s, so the integrable singular behaviour of
    // E1 near 0 is spread over s in [0, S].
    auto low = [&](double s) {
        const double x = std::exp(-s);
        return shepp_lloyd_integrand(x, r, lg) * x;
    };
    double s_max = 40.0;
    while (low(s_max) > 1e-30 && s_max < 700.0) s_max *= 1.5;
    const auto part_low = integrate_gk15(low, 0.0, s_max, 1e-14, 1e-13);
    const double low_tail = 2.0 * low(s_max);

    // [1, X] with e^-X < 1e-16, tail bounded by E1(X)^(r-1) e^-X.
    const double x_hi = -std::log(1e-16);
    auto high = [&](double x) { return shepp_lloyd_integrand(x, r, lg); };
    const auto part_high = integrate_gk15(high, 1.0, x_hi, 1e-14, 1e-13);
    const double high_tail =
        std::exp(static_cast<double>(r - 1) * std::log(exp_integral_e1(x_hi).value) - x_hi - lg);

    return {part_low.value + part_high.value,
            part_low.abs_error + part_high.abs_error + low_tail + high_tail + 1e-15};
}

SpecFunResult golomb_dickman_g_stieltjes(long r, const DickmanTable& table) {
    if (r < 1) throw std::invalid_argument("G_{r,1} needs r >= 1");
    const auto rr = static_cast<std::size_t>(r);
    const double x_max = table.x_max();
    if (x_max <= static_cast<double>(r)) throw std::invalid_argument("Dickman table too short for r");
    const auto& v = table.grid(rr);
    const std::size_t m = table.steps_per_unit();
    const double h = table.step();
    if (m % 2 != 0) throw std::invalid_argument("Stieltjes route needs an even number of steps per unit");

    // Composite Simpson on each unit interval [j, j+1], j >= r, at steps h and
    // 2h; the difference gives a Richardson estimate of the rule's error.
    const bool coarse_ok = m % 4 == 0;
    double integral = 0.0;
    double coarse = 0.0;
    const auto units = static_cast<std::size_t>(x_max);
    for (std::size_t j = rr; j < units; ++j) {
        double s = 0.0;
        double c = 0.0;
        for (std::size_t i = 0; i <= m; ++i) {
            const std::size_t node = j * m + i;
            const double x = static_cast<double>(node) * h;
            const double f = v[node] / (x * x);
            const bool end = i == 0 || i == m;
            s += (end ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0)) * f;
            if (coarse_ok && i % 2 == 0) c += (end ? 1.0 : (i % 4 == 2 ? 4.0 : 2.0)) * f;
        }
        integral += s * h / 3.0;
        coarse += c * 2.0 * h / 3.0;
    }
    const double rule_err = coarse_ok ? std::abs(integral - coarse) / 15.0 : 0.0;
    // int_X^inf rho/x^2 lies in [0, rho(X)/X] since rho_r is nonincreasing
    const double rho_end = v.back();
    const double tail = 0.5 * rho_end / x_max;
    const double value = 1.0 / static_cast<double>(r) - integral - tail;
    const double err = tail + rule_err + table.error_estimate(rr) / static_cast<double>(r) + 1e-14;
    return {value, err};
}

// ---------------------------------------------------------------------------

RayleighPoint rayleigh(double x) {
    if (x < 0) throw std::invalid_argument("Rayleigh law needs x >= 0");
    if (std::isinf(x)) return {0.0, 1.0};
    const double e = std::exp(-0.5 * x * x);
    return {x * e, -std::expm1(-0.5 * x * x)};
}

double rayleigh_moment(long p) {
    if (p < 1) throw std::invalid_argument("Rayleigh moment needs p >= 1");
    const double half = 0.5 * static_cast<double>(p);
    return std::exp2(half) * std::tgamma(1.0 + half);
}

double ldp_rate(double x) {
    if (x < 0) return std::numeric_limits<double>::infinity();
    if (x == 0) return 0.5;
    return x * std::log(2.0 * x) - x + 0.5;
}

double ldp_log_mgf_limit(double t) { return 0.5 * std::expm1(t); }

double kn_asymptotic_mean(double n) {
    if (!(n >= 1)) throw std::invalid_argument("n must be >= 1");
    return static_cast<double>(0.5L * (std::log(2.0L * n) + constants::euler_gamma));
}

double kn_asymptotic_var(double n) {
    return static_cast<double>(0.5L * (std::log(2.0L * n) + constants::euler_gamma) - constants::pi_sq_over_8);
}

double joint_limit_density(long r, double x, double y, const DickmanTable& table) {
    if (r < 1) throw std::invalid_argument("joint density needs r >= 1");
    if (!(x > 0) || !(y > 0)) throw std::invalid_argument("joint density needs x, y > 0");
    if (x <= y) return 0.0;
    const double z = (x - y) / y;
    const auto rr = static_cast<std::size_t>(r);
    return (x / y) * std::exp(-0.5 * x * x) * (table.value(rr, z) - table.value(rr - 1, z));
}

double joint_limit_cdf_factor(long r, double x, double y, const DickmanTable& table) {
    if (r < 1) throw std::invalid_argument("joint CDF needs r >= 1");
    if (!(x > 0) || !(y > 0)) throw std::invalid_argument("joint CDF needs x, y > 0");
    return x * std::exp(-0.5 * x * x) * table.value(static_cast<std::size_t>(r), x / y);
}

double longest_cycle_limit_mean(long r) {
    return static_cast<double>(constants::sqrt_pi_over_2) * golomb_dickman_g(r).value;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double poisson_pmf(std::size_t j, double mean) {
    if (mean <= 0) return j == 0 ? 1.0 : 0.0;
    const double jj = static_cast<double>(j);
    return std::exp(jj * std::log(mean) - mean - std::lgamma(jj + 1.0));
}

}  // namespace pfc
