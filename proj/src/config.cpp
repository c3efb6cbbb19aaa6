// Copyright 2026 The QVision Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qvision/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

#include "qvision/errors.hpp"
#include "qvision/image_io.hpp"

namespace qvision {

namespace {

constexpr std::array<std::string_view, 20> kPipelineKeys = {
    "seed",           "image",          "lattice_per_degree", "hypercolumn_spacing", "orientation_step_deg",
    "subfield_spacing", "member_count", "member_spacing",     "baseline_rate",       "rate_gain",
    "lgn_capacity",   "shielded",       "elapsed_s",          "tau_s",               "shielding_factor",
    "receiver_unitary", "template",     "template_potential_mv", "template_threshold", "template_label"};
constexpr std::array<std::string_view, 3> kBenchKeys = {"seed", "image", "trials"};
constexpr std::array<std::string_view, 8> kSpotKeys = {
    "seed", "image", "cell_class", "polarity", "diameters_deg", "lattice_per_degree", "baseline_rate", "rate_gain"};
constexpr std::array<std::string_view, 6> kEchoKeys = {"seed", "image", "locus", "dt_s", "tau_s", "floor"};
constexpr std::array<std::string_view, 6> kGaoKeys = {"seed", "image", "t_p", "t_c", "delta_min", "trials"};
constexpr std::array<std::string_view, 4> kDobelleKeys = {"seed", "image", "edge_threshold", "dot_radius_frac"};

std::string_view trim(std::string_view s) {
    auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r' && c != '\n'; };
    auto b = std::find_if(s.begin(), s.end(), not_space);
    auto e = std::find_if(s.rbegin(), s.rend(), not_space).base();
    return b < e ? std::string_view(&*b, static_cast<std::size_t>(e - b)) : std::string_view{};
}

double parse_double(std::string_view text, const std::string &key) {
    text = trim(text);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw ConfigError("config key '" + key + "': expected a number, got '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace

std::string_view to_string(Scenario scenario) {
    switch (scenario) {
        case Scenario::Pipeline:
            return "pipeline";
        case Scenario::TeleportBench:
            return "teleport_bench";
        case Scenario::SpotCurve:
            return "spot_curve";
        case Scenario::Echo:
            return "echo";
        case Scenario::Gao:
            return "gao";
        case Scenario::Dobelle:
            return "dobelle";
    }
    return "?";
}

std::optional<Scenario> parse_scenario(std::string_view name) {
    for (Scenario s : {Scenario::Pipeline, Scenario::TeleportBench, Scenario::SpotCurve, Scenario::Echo,
                       Scenario::Gao, Scenario::Dobelle}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

std::span<const std::string_view> allowed_keys(Scenario scenario) {
    switch (scenario) {
        case Scenario::Pipeline:
            return kPipelineKeys;
        case Scenario::TeleportBench:
            return kBenchKeys;
        case Scenario::SpotCurve:
            return kSpotKeys;
        case Scenario::Echo:
            return kEchoKeys;
        case Scenario::Gao:
            return kGaoKeys;
        case Scenario::Dobelle:
            return kDobelleKeys;
    }
    return {};
}

std::uint64_t parse_seed(std::string_view text) {
    text = trim(text);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw ConfigError("seed: expected an unsigned 64-bit integer, got '" + std::string(text) + "'");
    }
    return v;
}

void ScenarioConfig::set(const std::string &key, const std::string &value) {
    auto keys = allowed_keys(scenario_);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        throw ConfigError("unknown config key '" + key + "' for scenario " + std::string(to_string(scenario_)));
    }
    if (key == "seed") {
        seed_ = parse_seed(value);
    } else if (key == "image") {
        input_image_ = value;
    }
    overrides_[key] = value;
}

ScenarioConfig ScenarioConfig::parse(Scenario scenario, std::string_view text) {
    ScenarioConfig cfg(scenario);
    std::size_t line_no = 0;
    while (!text.empty()) {
        std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) {
            throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
        }
        cfg.set(key, value);
    }
    return cfg;
}

ScenarioConfig ScenarioConfig::load(Scenario scenario, const std::filesystem::path &path) {
    return parse(scenario, read_file(path));
}

std::string ScenarioConfig::get_string(const std::string &key, const std::string &fallback) const {
    auto it = overrides_.find(key);
    return it == overrides_.end() ? fallback : it->second;
}

double ScenarioConfig::get_double(const std::string &key, double fallback) const {
    auto it = overrides_.find(key);
    return it == overrides_.end() ? fallback : parse_double(it->second, key);
}

long long ScenarioConfig::get_int(const std::string &key, long long fallback) const {
    auto it = overrides_.find(key);
    if (it == overrides_.end()) {
        return fallback;
    }
    std::string_view text = trim(it->second);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw ConfigError("config key '" + key + "': expected an integer, got '" + it->second + "'");
    }
    return v;
}

bool ScenarioConfig::get_bool(const std::string &key, bool fallback) const {
    auto it = overrides_.find(key);
    if (it == overrides_.end()) {
        return fallback;
    }
    const std::string &v = it->second;
    if (v == "true" || v == "1" || v == "yes") {
        return true;
    }
    if (v == "false" || v == "0" || v == "no") {
        return false;
    }
    throw ConfigError("config key '" + key + "': expected a boolean, got '" + v + "'");
}

std::vector<double> ScenarioConfig::get_doubles(const std::string &key, const std::vector<double> &fallback) const {
    auto it = overrides_.find(key);
    if (it == overrides_.end()) {
        return fallback;
    }
    std::vector<double> out;
    std::string_view rest = it->second;
    while (!rest.empty()) {
        std::size_t sep = rest.find_first_of(", \t");
        std::string_view item = trim(rest.substr(0, sep));
        rest = sep == std::string_view::npos ? std::string_view{} : rest.substr(sep + 1);
        if (!item.empty()) {
            out.push_back(parse_double(item, key));
        }
    }
    if (out.empty()) {
        throw ConfigError("config key '" + key + "': empty list");
    }
    return out;
}

}  // namespace qvision
