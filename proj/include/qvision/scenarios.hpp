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

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qvision/config.hpp"
#include "qvision/cortex_v1.hpp"
#include "qvision/image_io.hpp"
#include "qvision/quantum_encoding.hpp"
#include "qvision/retina_network.hpp"

namespace qvision {

/// Output file name -> contents. Ordered so iteration is deterministic.
using Artifacts = std::map<std::string, std::string>;

/// Creates `dir` if needed and writes every artifact into it. Throws IoError.
void write_artifacts(const std::filesystem::path &dir, const Artifacts &artifacts);

// ---------------------------------------------------------------------------
// Image ingestion

/// Smallest image side that holds one X ganglion field at the default scale.
int min_image_side();

/// Maps samples linearly to [0, 1] intensity and then to receptor potentials.
/// Throws IoError if the image is smaller than one ganglion field.
ReceptorMosaic ingest_image(const GrayImage &image);
ReceptorMosaic ingest_image(const std::filesystem::path &path);

// ---------------------------------------------------------------------------
// Photon echo

enum class CollapseLocus { Retina, Cortex };

std::string_view to_string(CollapseLocus locus);

/// Coherence lifetime implied by where photons collapse: 1 ns in the retina, 1 ms in cortex.
double default_coherence_tau(CollapseLocus locus);

struct EchoSetup {
    CollapseLocus collapse_locus = CollapseLocus::Retina;
    double pulse_interval_dt = 1e-6;
    double coherence_tau = 1e-9;
    double detector_floor = 0.01;

    static EchoSetup for_locus(CollapseLocus locus, double dt, double floor);
    /// Throws std::invalid_argument unless times are positive (dt may be 0) and floor is in (0, 1).
    void validate() const;
};

struct EchoResult {
    double echo_amplitude;
    bool detected;
};

/// amplitude = exp(-dt / tau); detected iff amplitude >= floor.
EchoResult run_echo(const EchoSetup &setup);

// ---------------------------------------------------------------------------
// Teleportation benchmark

struct TeleportBenchStats {
    std::size_t trials = 0;
    double min_fidelity = 1.0;
    double mean_fidelity = 0.0;
    std::array<std::size_t, 4> outcome_counts{};

    double frequency(BellOutcome outcome) const {
        return trials == 0 ? 0.0 : static_cast<double>(outcome_counts[index_of(outcome)]) / trials;
    }
};

/// Teleports `trials` Haar-random qubits; trial i uses Rng(Rng::derive(seed, i)).
/// Throws std::invalid_argument if trials == 0.
TeleportBenchStats run_teleport_bench(std::size_t trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Gao discrimination runs

struct GaoTrialSpec {
    std::string name;
    GaoInput input;
    std::size_t count;
};

/// Parses `definite0 100; definite1 5; superposition 0.6 0.8 10000`.
/// Throws ConfigError.
std::vector<GaoTrialSpec> parse_gao_trials(std::string_view text);

struct GaoSpecStats {
    std::string name;
    std::size_t count = 0;
    std::size_t definite = 0;
    std::size_t superposition = 0;
    std::size_t indistinguishable = 0;
    std::size_t collapsed0 = 0;
    std::size_t collapsed1 = 0;
};

std::vector<GaoSpecStats> run_gao(const GaoSetup &setup, std::span<const GaoTrialSpec> trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Cortical phosphene prosthesis

class ElectrodeArray {
   public:
    static constexpr std::size_t kCount = 68;
    static constexpr int kColumns = 9;
    static constexpr int kRows = 8;

    /// Throws std::invalid_argument unless there are exactly 68 distinct positions in the unit square.
    explicit ElectrodeArray(std::vector<std::array<double, 2>> positions);

    /// 9 x 8 grid with the four corners removed, centered in the unit square.
    static ElectrodeArray standard();

    std::span<const std::array<double, 2>> positions() const {
        return positions_;
    }
    std::size_t count() const {
        return positions_.size();
    }

   private:
    std::vector<std::array<double, 2>> positions_;
};

struct DobelleOptions {
    /// On the normalized gradient magnitude (a full-contrast step scores 1).
    double edge_threshold = 0.25;
    /// Phosphene dot radius as a fraction of image width.
    double dot_radius_frac = 0.02;
    /// Electrode sampling radius as a fraction of the smaller electrode pitch.
    double sample_radius_frac = 0.25;
};

/// 3x3 Sobel gradient magnitude divided by 4 and clipped to [0, 1]; borders replicate.
std::vector<double> sobel_magnitude(const GrayImage &image);

struct ElectrodeSample {
    std::size_t index;
    double x;
    double y;
    double edge;
    bool lit;
};

struct DobelleResult {
    GrayImage edges;
    GrayImage render;
    std::vector<ElectrodeSample> samples;

    std::size_t lit_count() const;
};

DobelleResult run_dobelle(const GrayImage &image, const ElectrodeArray &array, const DobelleOptions &options = {});

// ---------------------------------------------------------------------------
// End-to-end pipeline

struct PipelineOptions {
    double lattice_per_degree = kDefaultLatticePerDegree;
    int hypercolumn_spacing = 16;
    double orientation_step = 0.0;  // 0 selects pi / 8
    WiringOptions wiring;
    RateParams rates;
    std::size_t lgn_capacity = 10000;
    bool shielded = true;
    double elapsed_s = 0.0;
    double tau_s = kShieldedTauS;
    double shielding_factor = kShieldingFactor;
    Matrix2 receiver_unitary = Matrix2::identity();
    Qubit template_state = precode(kPrecodeMaxMv);
    double template_threshold = 0.9;
    std::string template_label = "grandmother";
};

/// Reads pipeline keys from `config`. Throws ConfigError on malformed values.
PipelineOptions pipeline_options_from(const ScenarioConfig &config);

struct PipelineResult {
    std::size_t lgn_cells = 0;
    std::size_t simple_fired = 0;
    std::size_t complex_fired = 0;
    std::size_t transfers = 0;
    std::size_t matches = 0;
    V1Circuit circuit;
    V1Activation activation;
    Artifacts artifacts;
};

/// ingest -> retina -> chiasm/LGN -> V1 -> precode -> teleport -> grandmother match.
/// Each teleport uses Rng(Rng::derive(seed, transfer index)).
PipelineResult run_pipeline(const GrayImage &image, const PipelineOptions &options, std::uint64_t seed);

// ---------------------------------------------------------------------------

/// Runs the configured scenario and returns its artifacts. Throws ConfigError
/// for bad configuration and IoError for unreadable inputs.
Artifacts run_scenario(const ScenarioConfig &config);

/// Parses a receiver unitary: identity, phase_flip, bit_flip, bit_phase_flip,
/// or eight numbers (re, im of each entry, row-major). Throws ConfigError.
Matrix2 parse_unitary(std::string_view text);

}  // namespace qvision
