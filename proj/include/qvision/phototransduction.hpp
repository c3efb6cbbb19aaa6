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
#include <string_view>

namespace qvision {

/// Dark (resting) receptor potential.
inline constexpr double kDarkPotentialMv = -40.0;
/// Fully hyperpolarized receptor potential under saturating light.
inline constexpr double kLightFloorMv = -70.0;
/// Half-saturation constant of the intensity-to-potential map.
inline constexpr double kSaturationK = 0.2;

inline constexpr std::uint64_t kTransducinPerPhoton = 500;
inline constexpr std::uint64_t kPdeRatePerTransducin = 500;

/// Width of the Gaussian spectral sensitivity curves.
inline constexpr double kSpectralSigmaNm = 40.0;

enum class ReceptorKind { Rod, ConeRed, ConeGreen, ConeBlue };

std::string_view to_string(ReceptorKind kind);
double spectral_peak_nm(ReceptorKind kind);

struct GridPoint {
    int x = 0;
    int y = 0;

    friend bool operator==(const GridPoint &, const GridPoint &) = default;
    friend auto operator<=>(const GridPoint &, const GridPoint &) = default;
};

struct Photoreceptor {
    ReceptorKind kind = ReceptorKind::Rod;
    GridPoint position;

    double spectral_peak() const {
        return spectral_peak_nm(kind);
    }
};

/// Amplification stages of the rhodopsin -> transducin -> phosphodiesterase cascade.
struct CascadeGain {
    std::uint64_t transducin_per_photon = kTransducinPerPhoton;
    std::uint64_t pde_rate_per_transducin = kPdeRatePerTransducin;

    std::uint64_t per_photon() const {
        return transducin_per_photon * pde_rate_per_transducin;
    }
};

struct ReceptorState {
    double membrane_potential_mv;
    double glutamate_release;
};

/// cGMP molecules hydrolyzed per second for `photons_absorbed` photons (exact integer product).
std::uint64_t cgmp_hydrolysis_rate(std::uint64_t photons_absorbed, const CascadeGain &gain = {});

/// Graded receptor potential for normalized intensity in [0, 1]: -40 mV in the
/// dark, saturating toward -70 mV. Throws std::invalid_argument outside [0, 1].
double membrane_potential(double intensity);

/// Normalized transmitter release, affine in potential: 1 at -40 mV, 0 at -70 mV.
/// Potentials outside the receptor range are clamped.
double glutamate_release(double potential_mv);

/// Spectral sensitivity of `kind` at `wavelength_nm`, 1 at the peak.
double spectral_sensitivity(ReceptorKind kind, double wavelength_nm);

/// Effective intensity seen by `receptor` for light of `wavelength_nm` at `flux`.
/// Throws std::invalid_argument unless flux is in [0, 1].
double absorb(const Photoreceptor &receptor, double wavelength_nm, double flux);

ReceptorState receptor_state(double intensity);

}  // namespace qvision
