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
 * @file specfun.hpp
 * @brief Special functions behind the limit laws: the exponential integral
 *        E1, generalized Dickman functions rho_r, Shepp-Lloyd constants
 *        G_{r,1}, the Rayleigh law, and the large-deviation rate function
 *        for the cycle count.
 */

#include <cstddef>
#include <vector>

namespace pfc {

namespace constants {
inline constexpr long double euler_gamma = 0.577215664901532860606512090082402431L;
inline constexpr long double pi = 3.141592653589793238462643383279502884L;
inline constexpr long double pi_sq_over_8 = 1.233700550136169827354311374984518909L;
inline constexpr long double sqrt_pi_over_2 = 1.253314137315500251207882642405522627L;
}  // namespace constants

struct SpecFunResult {
    double value = 0;
    double abs_error_estimate = 0;
};

/// E1(x) = int_x^inf e^-t / t dt for x > 0. Power series for x <= 1,
/// continued fraction (modified Lentz) above.
SpecFunResult exp_integral_e1(double x);

/**
 * Tabulated generalized Dickman functions rho_0..rho_{r_max} on [0, x_max].
 *
 * rho_0 = 0, rho_r = 1 on [0, 1], and for x > 1
 *     rho_r(x) = rho_r(x - 1 step) - int (rho_r(t-1) - rho_{r-1}(t-1)) / t dt
 * marched one grid step at a time. The delayed values come from the already
 * computed part of the table through cubic interpolation kept inside one
 * unit interval (the rho_r have kinks at the integers). A second pass at
 * half the step gives the Richardson error estimate.
 */
class DickmanTable {
public:
    DickmanTable(std::size_t r_max, double x_max, std::size_t steps_per_unit = 1000);

    std::size_t r_max() const noexcept { return r_max_; }
    double x_max() const noexcept { return x_max_; }
    double step() const noexcept { return 1.0 / static_cast<double>(steps_per_unit_); }

    /// rho_r(x); throws std::out_of_range beyond the table.
    double value(std::size_t r, double x) const;
    SpecFunResult evaluate(std::size_t r, double x) const;
    /// Max |rho_h - rho_{h/2}| over the grid for this r.
    double error_estimate(std::size_t r) const { return error_.at(r); }

    /// Grid values rho_r(i h), i = 0..units*steps_per_unit.
    const std::vector<double>& grid(std::size_t r) const { return values_.at(r); }
    std::size_t steps_per_unit() const noexcept { return steps_per_unit_; }

private:
    std::size_t r_max_;
    double x_max_;
    std::size_t steps_per_unit_;
    std::vector<std::vector<double>> values_;
    std::vector<double> error_;
};

/// Builds a table just large enough for (r, x).
SpecFunResult dickman_rho(long r, double x);

/// G_{r,1} = (1/Gamma(r)) int_0^inf E1(x)^(r-1) exp(-E1(x) - x) dx.
SpecFunResult golomb_dickman_g(long r);

/// Same constant from the limiting CDF rho_r(1/y) of L_r/n:
/// int_0^1 y d(-rho_r(1/y)) = 1/r - int_r^inf rho_r(x)/x^2 dx.
SpecFunResult golomb_dickman_g_stieltjes(long r, const DickmanTable& table);

struct RayleighPoint {
    double pdf;
    double cdf;
};
RayleighPoint rayleigh(double x);
/// E[R^p] = 2^(p/2) Gamma(1 + p/2).
double rayleigh_moment(long p);

/// x log(2x) - x + 1/2 for x > 0, 1/2 at 0, +inf for x < 0.
double ldp_rate(double x);
/// (e^t - 1)/2, the limiting scaled log-MGF of K_n.
double ldp_log_mgf_limit(double t);

double kn_asymptotic_mean(double n);
double kn_asymptotic_var(double n);

/// (x/y) e^{-x^2/2} (rho_r(z) - rho_{r-1}(z)), z = (x-y)/y, for x > y > 0;
/// zero for 0 < x <= y.
double joint_limit_density(long r, double x, double y, const DickmanTable& table);
/// x e^{-x^2/2} rho_r(x/y).
double joint_limit_cdf_factor(long r, double x, double y, const DickmanTable& table);

/// sqrt(pi/2) G_{r,1}: limit of E[L_r]/sqrt(n).
double longest_cycle_limit_mean(long r);

double normal_cdf(double x);
/// P(Z = j) for Z ~ Poisson(mean).
double poisson_pmf(std::size_t j, double mean);

}  // namespace pfc
