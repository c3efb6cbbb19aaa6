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

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "qvision/config.hpp"
#include "qvision/errors.hpp"
#include "qvision/scenarios.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

int run(int argc, char **argv) {
    CLI::App app{"qvision: seeded visual-pathway and cortical teleportation scenarios"};
    std::string scenario_name;
    std::string config_path;
    std::string image_path;
    std::string seed_text;
    std::string out_dir = ".";
    app.add_option("scenario", scenario_name, "pipeline | teleport_bench | spot_curve | echo | gao | dobelle")
        ->required();
    app.add_option("--config", config_path, "key = value scenario configuration")->required();
    app.add_option("--image", image_path, "input image (PGM P5 or 8-bit grayscale PNG)");
    app.add_option("--seed", seed_text, "64-bit RNG seed; overrides the config");
    app.add_option("--out", out_dir, "output directory");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfig;
    }

    auto scenario = qvision::parse_scenario(scenario_name);
    if (!scenario) {
        throw qvision::ConfigError("unknown scenario '" + scenario_name + "'");
    }
    qvision::ScenarioConfig config = qvision::ScenarioConfig::load(*scenario, config_path);
    if (!seed_text.empty()) {
        config.set_seed(qvision::parse_seed(seed_text));
    }
    if (!image_path.empty()) {
        config.set_input_image(image_path);
    }
    qvision::Artifacts artifacts = qvision::run_scenario(config);
    qvision::write_artifacts(out_dir, artifacts);
    for (const auto &[name, bytes] : artifacts) {
        std::cout << name << " (" << bytes.size() << " bytes)\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const qvision::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const qvision::IoError &e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
