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

#include "pfcycles/harness_io.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace pfc {

using nlohmann::json;

namespace {

json tally_to_json(const Tally& t) {
    json a = json::array();
    for (const auto& [v, c] : t) a.push_back({v, c});
    return a;
}

Tally tally_from_json(const json& a) {
    Tally t;
    for (const auto& e : a) t[e.at(0).get<std::uint64_t>()] = e.at(1).get<std::uint64_t>();
    return t;
}

template <class T>
json optional_to_json(const std::optional<T>& o) {
    return o ? json(*o) : json(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

json moments_to_json(const Moments& m) {
    return {{"mean", m.mean},         {"variance", m.variance},     {"central3", m.central3},
            {"central4", m.central4}, {"second_raw", m.second_raw}, {"degenerate", m.degenerate}};
}

Moments moments_from_json(const json& j) {
    Moments m;
    m.mean = j.at("mean").get<double>();
    m.variance = j.at("variance").get<double>();
    m.central3 = j.at("central3").get<double>();
    m.central4 = j.at("central4").get<double>();
    m.second_raw = j.at("second_raw").get<double>();
    m.degenerate = j.at("degenerate").get<bool>();
    return m;
}

json statistic_to_json(const StatisticSummary& s) {
    json checks = json::array();
    for (const auto& c : s.checks) {
        checks.push_back({{"name", c.name},
                          {"observed", c.observed},
                          {"target", c.target},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
    }
    json pmf = json::array();
    for (const auto& p : s.pmf) pmf.push_back({{"value", p.value}, {"empirical", p.empirical}, {"reference", p.reference}});
    return {{"statistic", std::string(to_string(s.statistic))},
            {"quantity", s.quantity},
            {"moments", moments_to_json(s.moments)},
            {"histogram", {{"lo", s.histogram.lo}, {"width", s.histogram.width}, {"counts", s.histogram.counts}}},
            {"ks", {{"reference", s.reference}, {"distance", optional_to_json(s.ks)},
                    {"corrected", optional_to_json(s.ks_corrected)}}},
            {"extras", s.extras},
            {"pmf", pmf},
            {"checks", checks},
            {"tally", tally_to_json(s.tally)}};
}

StatisticSummary statistic_from_json(const json& j) {
    StatisticSummary s;
    s.statistic = parse_statistic(j.at("statistic").get<std::string>());
    s.quantity = j.at("quantity").get<std::string>();
    s.moments = moments_from_json(j.at("moments"));
    const auto& h = j.at("histogram");
    s.histogram.lo = h.at("lo").get<double>();
    s.histogram.width = h.at("width").get<double>();
    s.histogram.counts = h.at("counts").get<std::vector<std::uint64_t>>();
    const auto& ks = j.at("ks");
    s.reference = ks.at("reference").get<std::string>();
    s.ks = optional_from_json<double>(ks, "distance");
    s.ks_corrected = optional_from_json<double>(ks, "corrected");
    s.extras = j.at("extras").get<std::map<std::string, double>>();
    for (const auto& p : j.at("pmf")) {
        s.pmf.push_back({p.at("value").get<std::uint64_t>(), p.at("empirical").get<double>(),
                         p.at("reference").get<double>()});
    }
    for (const auto& c : j.at("checks")) {
        s.checks.push_back({c.at("name").get<std::string>(), c.at("observed").get<double>(),
                            c.at("target").get<double>(), c.at("tolerance").get<double>(), c.at("pass").get<bool>()});
    }
    s.tally = tally_from_json(j.at("tally"));
    return s;
}

}  // namespace

void to_json(json& j, const ExperimentConfig& c) {
    json stats = json::array();
    for (auto s : c.statistics) stats.push_back(std::string(to_string(s)));
    j = {{"variant", std::string(to_string(c.variant))},
         {"n", c.n},
         {"samples", c.samples},
         {"seed", c.seed},
         {"statistics", stats},
         {"r", c.r},
         {"k", c.k},
         {"timing", c.timing}};
}

void from_json(const json& j, ExperimentConfig& c) {
    c = ExperimentConfig{};
    c.variant = parse_variant(j.at("variant").get<std::string>());
    c.n = j.at("n").get<std::size_t>();
    c.samples = j.at("samples").get<std::uint64_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& s : j.at("statistics")) c.statistics.push_back(parse_statistic(s.get<std::string>()));
    c.r = j.at("r").get<std::size_t>();
    c.k = j.at("k").get<std::size_t>();
    c.timing = j.value("timing", false);
}

void to_json(json& j, const ExperimentSummary& s) {
    json stats = json::array();
    for (const auto& st : s.statistics) stats.push_back(statistic_to_json(st));
    j = {{"config", s.config}, {"statistics", stats}, {"merge_count", s.merge_count}, {"all_passed", s.all_passed()}};
    if (s.joint) {
        j["joint_histogram"] = {{"width", s.joint->width},
                                {"bins", s.joint->bins},
                                {"counts", s.joint->counts},
                                {"reference_mass", s.joint->reference_mass},
                                {"total_variation", s.joint->total_variation}};
    }
    if (s.runtime_ms) j["runtime_ms"] = *s.runtime_ms;
}

void from_json(const json& j, ExperimentSummary& s) {
    s = ExperimentSummary{};
    s.config = j.at("config").get<ExperimentConfig>();
    for (const auto& st : j.at("statistics")) s.statistics.push_back(statistic_from_json(st));
    s.merge_count = j.at("merge_count").get<std::uint64_t>();
    if (j.contains("joint_histogram")) {
        const auto& h = j.at("joint_histogram");
        JointHistogram jh;
        jh.width = h.at("width").get<double>();
        jh.bins = h.at("bins").get<std::size_t>();
        jh.counts = h.at("counts").get<std::vector<std::uint64_t>>();
        jh.reference_mass = h.at("reference_mass").get<std::vector<double>>();
        jh.total_variation = h.at("total_variation").get<double>();
        s.joint = std::move(jh);
    }
    s.runtime_ms = optional_from_json<double>(j, "runtime_ms");
}

void to_json(json& j, const MgfRow& r) {
    j = {{"variant", std::string(to_string(r.variant))},
         {"n", r.n},
         {"t", r.t},
         {"scaled_log_mgf", r.scaled_log_mgf},
         {"target", r.target},
         {"abs_error", r.abs_error}};
}

void from_json(const json& j, MgfRow& r) {
    r.variant = parse_variant(j.at("variant").get<std::string>());
    r.n = j.at("n").get<std::size_t>();
    r.t = j.at("t").get<double>();
    r.scaled_log_mgf = j.at("scaled_log_mgf").get<double>();
    r.target = j.at("target").get<double>();
    r.abs_error = j.at("abs_error").get<double>();
}

std::string summary_to_json(const ExperimentSummary& s) { return json(s).dump(2) + "\n"; }

ExperimentSummary summary_from_json(std::string_view text) {
    return json::parse(text.begin(), text.end()).get<ExperimentSummary>();
}

std::string format_double(double x) {
    if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string mgf_table_csv(std::span<const MgfRow> rows) {
    std::string out = "variant,n,t,scaled_log_mgf,target,abs_error\n";
    for (const auto& r : rows) {
        out += std::string(to_string(r.variant)) + ',' + std::to_string(r.n) + ',' + format_double(r.t) + ',' +
               format_double(r.scaled_log_mgf) + ',' + format_double(r.target) + ',' + format_double(r.abs_error) +
               '\n';
    }
    return out;
}

std::string histogram_csv(const ExperimentSummary& s) {
    std::string out = "statistic,bin_lo,bin_hi,count\n";
    for (const auto& st : s.statistics) {
        const auto& h = st.histogram;
        for (std::size_t i = 0; i < h.counts.size(); ++i) {
            const double lo = h.lo + h.width * static_cast<double>(i);
            out += std::string(to_string(st.statistic)) + ',' + format_double(lo) + ',' +
                   format_double(lo + h.width) + ',' + std::to_string(h.counts[i]) + '\n';
        }
    }
    return out;
}

}  // namespace pfc
