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

#include "qvision/quantum_encoding.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qvision {

std::string_view to_string(CorticalArea area) {
    switch (area) {
        case CorticalArea::V1:
            return "V1";
        case CorticalArea::Area18:
            return "Area18";
        case CorticalArea::Area19:
            return "Area19";
        case CorticalArea::Area20_21:
            return "Area20_21";
        case CorticalArea::Area7a:
            return "Area7a";
    }
    return "?";
}

bool can_send(CorticalArea area) {
    return area == CorticalArea::V1 || area == CorticalArea::Area18 || area == CorticalArea::Area19;
}

bool can_receive(CorticalArea area) {
    return area == CorticalArea::Area20_21 || area == CorticalArea::Area7a;
}

TeleportChannel::TeleportChannel(NodeId sender, NodeId receiver, bool shielded, double elapsed_s, double base_tau_s,
                                 double shielding_factor)
    : sender_(sender), receiver_(receiver), shielded_(shielded), tau_(base_tau_s), elapsed_(elapsed_s) {
    if (!(base_tau_s > 0.0) || !std::isfinite(base_tau_s)) {
        throw std::invalid_argument("TeleportChannel: tau must be positive");
    }
    if (!(shielding_factor >= 1.0) || !std::isfinite(shielding_factor)) {
        throw std::invalid_argument("TeleportChannel: shielding factor must be >= 1");
    }
    if (!(elapsed_s >= 0.0)) {
        throw std::invalid_argument("TeleportChannel: elapsed time must be non-negative");
    }
    if (!shielded) {
        tau_ = base_tau_s / shielding_factor;
    }
}

GrandmotherTemplate::GrandmotherTemplate(Qubit stored_state, double fidelity_threshold, std::string label)
    : stored_(stored_state), threshold_(fidelity_threshold), label_(std::move(label)) {
    if (!(fidelity_threshold > 0.5 && fidelity_threshold <= 1.0)) {
        throw std::invalid_argument("GrandmotherTemplate: threshold must be in (0.5, 1]");
    }
}

Qubit precode(double potential_mv) {
    if (!(potential_mv >= kPrecodeMinMv && potential_mv <= kPrecodeMaxMv)) {
        throw std::invalid_argument("precode: potential " + std::to_string(potential_mv) +
                                    " mV outside [-70, -40]");
    }
    double theta = std::numbers::pi * (potential_mv - kPrecodeMinMv) / (kPrecodeMaxMv - kPrecodeMinMv);
    return {std::cos(theta / 2.0), std::sin(theta / 2.0)};
}

double decode_potential(const Qubit &q) {
    double theta = 2.0 * std::atan2(std::abs(q.omega1()), std::abs(q.omega0()));
    return kPrecodeMinMv + (kPrecodeMaxMv - kPrecodeMinMv) * theta / std::numbers::pi;
}

Qubit dephase(const Qubit &q, Rng &rng) {
    double phi = 2.0 * std::numbers::pi * rng.uniform();
    return {q.omega0(), q.omega1() * std::polar(1.0, phi)};
}

TransferResult transfer(const TeleportChannel &channel, const Qubit &state, Rng &rng) {
    Qubit sent = channel.coherent() ? state : dephase(state, rng);
    TeleportResult t = teleport(sent, rng);
    return {t.output, t.outcome, fidelity(state, t.output)};
}

Qubit receiver_transform(const Qubit &state, const Matrix2 &learned) {
    if (!learned.is_unitary()) {
        throw std::invalid_argument("receiver_transform: matrix is not unitary");
    }
    return apply(learned, state);
}

MatchResult grandmother_match(const Qubit &state, const GrandmotherTemplate &tmpl) {
    double f = fidelity(state, tmpl.stored_state());
    return {f >= tmpl.threshold(), f};
}

NodeId CorticalNetwork::add_node(NodeId id, CorticalArea area, double membrane_potential_mv) {
    auto [it, inserted] = nodes_.emplace(id, CorticalNeuronNode{id, area, membrane_potential_mv, std::nullopt});
    if (!inserted) {
        throw std::invalid_argument("CorticalNetwork: duplicate node " + std::to_string(id));
    }
    return id;
}

const CorticalNeuronNode &CorticalNetwork::node(NodeId id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) {
        throw std::invalid_argument("CorticalNetwork: unknown node " + std::to_string(id));
    }
    return it->second;
}

CorticalNeuronNode &CorticalNetwork::mutable_node(NodeId id) {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) {
        throw std::invalid_argument("CorticalNetwork: unknown node " + std::to_string(id));
    }
    return it->second;
}

const Qubit &CorticalNetwork::precode_node(NodeId id) {
    CorticalNeuronNode &n = mutable_node(id);
    n.qubit = precode(n.membrane_potential_mv);
    return *n.qubit;
}

TransferResult CorticalNetwork::transfer(const TeleportChannel &channel, Rng &rng) {
    CorticalNeuronNode &sender = mutable_node(channel.sender());
    CorticalNeuronNode &receiver = mutable_node(channel.receiver());
    if (!can_send(sender.area)) {
        throw std::invalid_argument("transfer: " + std::string(to_string(sender.area)) + " nodes cannot send");
    }
    if (!can_receive(receiver.area)) {
        throw std::invalid_argument("transfer: " + std::string(to_string(receiver.area)) + " nodes cannot receive");
    }
    if (!sender.qubit) {
        throw std::invalid_argument("transfer: sender register is empty");
    }
    TransferResult r = qvision::transfer(channel, *sender.qubit, rng);
    // Teleportation consumes the sender's state.
    sender.qubit.reset();
    receiver.qubit = r.received;
    return r;
}

void GaoSetup::validate() const {
    if (!(t_perception > 0.0 && t_collapse > 0.0 && delta_min > 0.0)) {
        throw std::invalid_argument("GaoSetup: times must be positive");
    }
    if (!(t_perception < t_collapse)) {
        throw std::invalid_argument("GaoSetup: t_P must be less than t_C");
    }
}

std::string_view to_string(GaoLabel label) {
    switch (label) {
        case GaoLabel::Definite:
            return "definite";
        case GaoLabel::Superposition:
            return "superposition";
        case GaoLabel::Indistinguishable:
            return "indistinguishable";
    }
    return "?";
}

GaoReport gao_distinguish(const GaoSetup &setup, const GaoInput &input, Rng &rng) {
    setup.validate();
    if (const auto *d = std::get_if<Definite>(&input)) {
        if (d->bit != 0 && d->bit != 1) {
            throw std::invalid_argument("gao_distinguish: definite bit must be 0 or 1");
        }
        return {GaoLabel::Definite, setup.t_perception, d->bit};
    }
    const auto &s = std::get<Superposition>(input);
    Qubit q(s.omega0, s.omega1);
    int bit = rng.uniform() < q.prob0() ? 0 : 1;
    GaoLabel label = (setup.t_collapse - setup.t_perception >= setup.delta_min) ? GaoLabel::Superposition
                                                                                : GaoLabel::Indistinguishable;
    return {label, setup.t_collapse, bit};
}

}  // namespace qvision
