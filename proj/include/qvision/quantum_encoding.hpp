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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "qvision/quantum_core.hpp"
#include "qvision/rng.hpp"

namespace qvision {

/// Lower end of the pre-coding range, maps to |0>.
inline constexpr double kPrecodeMinMv = -70.0;
/// Upper end of the pre-coding range, maps to |1>.
inline constexpr double kPrecodeMaxMv = -40.0;

/// Coherence lifetime of a shielded interneuronal channel, seconds.
inline constexpr double kShieldedTauS = 1e-3;
/// Shielded tau divided by unshielded tau.
inline constexpr double kShieldingFactor = 1e6;

inline constexpr double kDefaultPerceptionTimeS = 0.100;
inline constexpr double kDefaultCollapseTimeS = 0.300;
inline constexpr double kDefaultDeltaMinS = 0.050;

enum class CorticalArea { V1, Area18, Area19, Area20_21, Area7a };

std::string_view to_string(CorticalArea area);
bool can_send(CorticalArea area);
bool can_receive(CorticalArea area);

using NodeId = std::uint32_t;

struct CorticalNeuronNode {
    NodeId id = 0;
    CorticalArea area = CorticalArea::V1;
    double membrane_potential_mv = kPrecodeMinMv;
    /// At most one qubit per node.
    std::optional<Qubit> qubit;
};

class TeleportChannel {
   public:
    /// Throws std::invalid_argument unless base_tau_s > 0, shielding_factor >= 1 and elapsed_s >= 0.
    TeleportChannel(NodeId sender, NodeId receiver, bool shielded, double elapsed_s, double base_tau_s = kShieldedTauS,
                    double shielding_factor = kShieldingFactor);

    NodeId sender() const {
        return sender_;
    }
    NodeId receiver() const {
        return receiver_;
    }
    bool shielded() const {
        return shielded_;
    }
    /// Effective decoherence time: base tau if shielded, base tau / shielding factor otherwise.
    double decoherence_time() const {
        return tau_;
    }
    double elapsed() const {
        return elapsed_;
    }
    bool coherent() const {
        return elapsed_ <= tau_;
    }

   private:
    NodeId sender_;
    NodeId receiver_;
    bool shielded_;
    double tau_;
    double elapsed_;
};

struct TransferResult {
    Qubit received;
    BellOutcome outcome;
    /// Fidelity of `received` against the state handed to the channel.
    double fidelity;
};

class GrandmotherTemplate {
   public:
    /// Throws std::invalid_argument unless 0.5 < threshold <= 1.
    GrandmotherTemplate(Qubit stored_state, double fidelity_threshold, std::string label);

    const Qubit &stored_state() const {
        return stored_;
    }
    double threshold() const {
        return threshold_;
    }
    const std::string &label() const {
        return label_;
    }

   private:
    Qubit stored_;
    double threshold_;
    std::string label_;
};

struct MatchResult {
    bool fires;
    double fidelity;
};

/// Linear map of [-70, -40] mV onto the Bloch polar angle [0, pi] with real
/// amplitudes. Throws std::invalid_argument outside the range.
Qubit precode(double potential_mv);

/// Inverse of precode for real, non-negative amplitudes.
double decode_potential(const Qubit &q);

/// Randomizes the relative phase of the amplitudes (full dephasing).
Qubit dephase(const Qubit &q, Rng &rng);

/// Teleports `state` across `channel`; a channel past its decoherence time
/// dephases the state first.
TransferResult transfer(const TeleportChannel &channel, const Qubit &state, Rng &rng);

/// Applies a receiver-side unitary. Throws std::invalid_argument if `learned`
/// is not unitary within kMatrixTolerance.
Qubit receiver_transform(const Qubit &state, const Matrix2 &learned);

/// Fires iff fidelity(state, stored) >= threshold.
MatchResult grandmother_match(const Qubit &state, const GrandmotherTemplate &tmpl);

/// Registry of cortical nodes; transfers are checked against it.
class CorticalNetwork {
   public:
    /// Throws std::invalid_argument on a duplicate id.
    NodeId add_node(NodeId id, CorticalArea area, double membrane_potential_mv = kPrecodeMinMv);

    const CorticalNeuronNode &node(NodeId id) const;
    bool contains(NodeId id) const {
        return nodes_.count(id) != 0;
    }
    std::size_t size() const {
        return nodes_.size();
    }

    /// Precodes the sender's potential into its register.
    const Qubit &precode_node(NodeId id);

    /// Teleports the sender's qubit to the receiver's register. Throws
    /// std::invalid_argument for unknown ids, wrong area roles, or an empty sender register.
    TransferResult transfer(const TeleportChannel &channel, Rng &rng);

   private:
    CorticalNeuronNode &mutable_node(NodeId id);

    std::map<NodeId, CorticalNeuronNode> nodes_;
};

struct GaoSetup {
    double t_perception = kDefaultPerceptionTimeS;
    double t_collapse = kDefaultCollapseTimeS;
    double delta_min = kDefaultDeltaMinS;

    /// Throws std::invalid_argument unless all times are positive and t_perception < t_collapse.
    void validate() const;
};

struct Definite {
    int bit;
};

struct Superposition {
    Complex omega0;
    Complex omega1;
};

using GaoInput = std::variant<Definite, Superposition>;

enum class GaoLabel { Definite, Superposition, Indistinguishable };

std::string_view to_string(GaoLabel label);

struct GaoReport {
    GaoLabel label;
    double perceived_at;
    std::optional<int> collapsed_to;
};

/// Definite inputs are perceived after t_perception; superpositions after
/// t_collapse, collapsing by the Born rule. A superposition is labeled as such
/// iff t_collapse - t_perception >= delta_min. Throws std::invalid_argument on
/// a bad setup, a definite bit other than 0/1, or non-normalized amplitudes.
GaoReport gao_distinguish(const GaoSetup &setup, const GaoInput &input, Rng &rng);

}  // namespace qvision
