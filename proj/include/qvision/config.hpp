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

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qvision {

enum class Scenario { Pipeline, TeleportBench, SpotCurve, Echo, Gao, Dobelle };

std::string_view to_string(Scenario scenario);
std::optional<Scenario> parse_scenario(std::string_view name);

/// Keys accepted for `scenario`, including the shared "seed" and "image".
std::span<const std::string_view> allowed_keys(Scenario scenario);

/// Parsed `key = value` scenario configuration.
class ScenarioConfig {
   public:
    explicit ScenarioConfig(Scenario scenario) : scenario_(scenario) {
    }

    /// Parses line-oriented `key = value` text; '#' starts a comment. Throws
    /// ConfigError naming the offending key or line.
    static ScenarioConfig parse(Scenario scenario, std::string_view text);
    /// Throws IoError if the file cannot be read.
    static ScenarioConfig load(Scenario scenario, const std::filesystem::path &path);

    Scenario scenario() const {
        return scenario_;
    }
    std::uint64_t seed() const {
        return seed_;
    }
    void set_seed(std::uint64_t seed) {
        seed_ = seed;
    }
    const std::optional<std::string> &input_image() const {
        return input_image_;
    }
    void set_input_image(std::string path) {
        input_image_ = std::move(path);
    }
    const std::map<std::string, std::string> &overrides() const {
        return overrides_;
    }
    /// Throws ConfigError for keys not in allowed_keys(scenario()).
    void set(const std::string &key, const std::string &value);

    bool has(const std::string &key) const {
        return overrides_.count(key) != 0;
    }
    std::string get_string(const std::string &key, const std::string &fallback) const;
    double get_double(const std::string &key, double fallback) const;
    long long get_int(const std::string &key, long long fallback) const;
    bool get_bool(const std::string &key, bool fallback) const;
    /// Comma- or whitespace-separated list of numbers.
    std::vector<double> get_doubles(const std::string &key, const std::vector<double> &fallback) const;

   private:
    Scenario scenario_;
    std::uint64_t seed_ = 0;
    std::optional<std::string> input_image_;
    std::map<std::string, std::string> overrides_;
};

std::uint64_t parse_seed(std::string_view text);

}  // namespace qvision
