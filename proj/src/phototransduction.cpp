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

#include "qvision/phototransduction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qvision {

std::string_view to_string(ReceptorKind kind) {
    switch (kind) {
        case ReceptorKind::Rod:
            return "Rod";
        case ReceptorKind::ConeRed:
            return "ConeRed";
        case ReceptorKind::ConeGreen:
            return "ConeGreen";
        case ReceptorKind::ConeBlue:
            return "ConeBlue";
    }
    return "?";
}

double spectral_peak_nm(ReceptorKind kind) {
    switch (kind) {
        case ReceptorKind::Rod:
            return 498.0;
        case ReceptorKind::ConeRed:
            return 564.0;
        case ReceptorKind::ConeGreen:
            return 534.0;
        case ReceptorKind::ConeBlue:
            return 420.0;
    }
    throw std::logic_error("unknown ReceptorKind");
}

std::uint64_t cgmp_hydrolysis_rate(std::uint64_t photons_absorbed, const CascadeGain &gain) {
    return photons_absorbed * gain.per_photon();
}

double membrane_potential(double intensity) {
    if (!(intensity >= 0.0 && intensity <= 1.0)) {
        throw std::invalid_argument("membrane_potential: intensity must be in [0, 1]");
    }
    // I/(I+K) reaches 1/(1+K) at I = 1; rescale so the floor is hit exactly there.
    double saturation = intensity * (1.0 + kSaturationK) / (intensity + kSaturationK);
    double v = kDarkPotentialMv - (kDarkPotentialMv - kLightFloorMv) * saturation;
    return std::clamp(v, kLightFloorMv, kDarkPotentialMv);
}

double glutamate_release(double potential_mv) {
    double v = std::clamp(potential_mv, kLightFloorMv, kDarkPotentialMv);
    return (v - kLightFloorMv) / (kDarkPotentialMv - kLightFloorMv);
}

double spectral_sensitivity(ReceptorKind kind, double wavelength_nm) {
    double d = wavelength_nm - spectral_peak_nm(kind);
    return std::exp(-d * d / (2.0 * kSpectralSigmaNm * kSpectralSigmaNm));
}

double absorb(const Photoreceptor &receptor, double wavelength_nm, double flux) {
    if (!(flux >= 0.0 && flux <= 1.0)) {
        throw std::invalid_argument("absorb: flux must be in [0, 1]");
    }
    return flux * spectral_sensitivity(receptor.kind, wavelength_nm);
}

ReceptorState receptor_state(double intensity) {
    double v = membrane_potential(intensity);
    return {v, glutamate_release(v)};
}

}  // namespace qvision
