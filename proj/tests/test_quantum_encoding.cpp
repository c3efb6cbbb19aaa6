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

#include "gtest/gtest.h"

using namespace qvision;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

double mean_transfer_fidelity(const TeleportChannel &ch, const Qubit &q, int trials, std::uint64_t seed) {
    double total = 0.0;
    for (int i = 0; i < trials; ++i) {
        Rng rng(Rng::derive(seed, i));
        total += transfer(ch, q, rng).fidelity;
    }
    return total / trials;
}

}  // namespace

TEST(quantum_encoding, area_roles) {
    EXPECT_TRUE(can_send(CorticalArea::V1));
    EXPECT_TRUE(can_send(CorticalArea::Area18));
    EXPECT_TRUE(can_send(CorticalArea::Area19));
    EXPECT_FALSE(can_send(CorticalArea::Area20_21));
    EXPECT_TRUE(can_receive(CorticalArea::Area20_21));
    EXPECT_TRUE(can_receive(CorticalArea::Area7a));
    EXPECT_FALSE(can_receive(CorticalArea::V1));
}

TEST(quantum_encoding, precode_anchor_points) {
    EXPECT_NEAR(fidelity(precode(-70.0), Qubit::zero()), 1.0, 1e-15);
    EXPECT_NEAR(fidelity(precode(-40.0), Qubit::one()), 1.0, 1e-15);
    Qubit mid = precode(-55.0);
    EXPECT_NEAR(mid.omega0().real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(mid.omega1().real(), kInvSqrt2, 1e-15);
    EXPECT_THROW(precode(-70.001), std::invalid_argument);
    EXPECT_THROW(precode(-39.999), std::invalid_argument);
}

TEST(quantum_encoding, precode_matches_half_angle_form) {
    for (double v = -70.0; v <= -40.0; v += 1.25) {
        double theta = std::numbers::pi * (v + 70.0) / 30.0;
        Qubit q = precode(v);
        EXPECT_NEAR(q.omega0().real(), std::cos(theta / 2), 1e-15);
        EXPECT_NEAR(q.omega1().real(), std::sin(theta / 2), 1e-15);
        EXPECT_EQ(q.omega0().imag(), 0.0);
        EXPECT_EQ(q.omega1().imag(), 0.0);
    }
}

TEST(quantum_encoding, precode_round_trip) {
    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        double v = -70.0 + 30.0 * rng.uniform();
        Qubit q = precode(v);
        double theta = 2.0 * std::acos(std::clamp(q.omega0().real(), -1.0, 1.0));
        EXPECT_NEAR(-70.0 + 30.0 * theta / std::numbers::pi, v, 1e-9);
        EXPECT_NEAR(decode_potential(q), v, 1e-9);
    }
    EXPECT_EQ(decode_potential(precode(-70.0)), -70.0);
    EXPECT_EQ(decode_potential(precode(-40.0)), -40.0);
}

TEST(quantum_encoding, channel_tau) {
    TeleportChannel shielded(0, 1, true, 0.0);
    EXPECT_EQ(shielded.decoherence_time(), 1e-3);
    TeleportChannel open(0, 1, false, 0.0);
    EXPECT_NEAR(open.decoherence_time(), 1e-9, 1e-24);
    EXPECT_TRUE(TeleportChannel(0, 1, true, 1e-3).coherent());
    EXPECT_FALSE(TeleportChannel(0, 1, true, 2e-3).coherent());
    EXPECT_THROW(TeleportChannel(0, 1, true, 0.0, 0.0), std::invalid_argument);
    EXPECT_THROW(TeleportChannel(0, 1, true, -1.0), std::invalid_argument);
    EXPECT_THROW(TeleportChannel(0, 1, true, 0.0, 1e-3, 0.5), std::invalid_argument);
}

TEST(quantum_encoding, shielded_transfer_is_exact) {
    TeleportChannel ch(0, 1, true, 1e-6);
    Rng rng(3);
    for (int i = 0; i < 2000; ++i) {
        Qubit q = random_qubit(rng);
        TransferResult r = transfer(ch, q, rng);
        EXPECT_GE(r.fidelity, 1.0 - 1e-9);
        EXPECT_NEAR(fidelity(r.received, q), r.fidelity, 1e-12);
    }
}

TEST(quantum_encoding, basis_states_survive_decoherence) {
    TeleportChannel ch(0, 1, false, 1.0);
    ASSERT_FALSE(ch.coherent());
    Rng rng(4);
    for (int i = 0; i < 100; ++i) {
        EXPECT_NEAR(transfer(ch, Qubit::zero(), rng).fidelity, 1.0, 1e-12);
        EXPECT_NEAR(transfer(ch, Qubit::one(), rng).fidelity, 1.0, 1e-12);
    }
}

TEST(quantum_encoding, decohered_equal_superposition_halves_fidelity) {
    TeleportChannel ch(0, 1, false, 1.0);
    Qubit plus(kInvSqrt2, kInvSqrt2);
    EXPECT_NEAR(mean_transfer_fidelity(ch, plus, 10000, 2026), 0.5, 0.02);
}

TEST(quantum_encoding, dephasing_mean_matches_analytic_value) {
    // A uniformly random relative phase leaves mean overlap p0^2 + p1^2.
    TeleportChannel ch(0, 1, true, 1.0);
    for (double v : {-65.0, -60.0, -50.0, -45.0}) {
        Qubit q = precode(v);
        double expected = q.prob0() * q.prob0() + q.prob1() * q.prob1();
        EXPECT_NEAR(mean_transfer_fidelity(ch, q, 10000, 7), expected, 0.02) << v;
    }
}

TEST(quantum_encoding, fidelity_non_increasing_in_elapsed) {
    Qubit q = precode(-52.0);
    double prev = 1.0 + 1e-12;
    for (double ratio : {0.0, 0.5, 1.0, 1.0001, 2.0, 100.0}) {
        TeleportChannel ch(0, 1, true, ratio * kShieldedTauS);
        double f = mean_transfer_fidelity(ch, q, 4000, 11);
        EXPECT_LE(f, prev + 1e-12) << ratio;
        prev = f;
    }
}

TEST(quantum_encoding, dephase_keeps_populations) {
    Rng rng(5);
    Qubit q = precode(-58.0);
    for (int i = 0; i < 100; ++i) {
        Qubit d = dephase(q, rng);
        EXPECT_NEAR(d.prob0(), q.prob0(), 1e-12);
        EXPECT_NEAR(d.prob1(), q.prob1(), 1e-12);
    }
}

TEST(quantum_encoding, receiver_transform) {
    Qubit q = precode(-61.0);
    Qubit same = receiver_transform(q, Matrix2::identity());
    EXPECT_EQ(same.omega0(), q.omega0());
    EXPECT_EQ(same.omega1(), q.omega1());
    Qubit flipped = receiver_transform(Qubit::zero(), CorrectionUnitary{CorrectionKind::BitFlip}.matrix());
    EXPECT_NEAR(flipped.prob1(), 1.0, 1e-15);
    double a = 0.3;
    Complex ph = std::polar(1.0, 0.9);
    Matrix2 u{{std::cos(a), -std::sin(a) * ph, std::sin(a), std::cos(a) * ph}};
    ASSERT_TRUE(u.is_unitary());
    Rng rng(6);
    for (int i = 0; i < 50; ++i) {
        Qubit r = random_qubit(rng);
        Qubit back = receiver_transform(receiver_transform(r, u), u.adjoint());
        EXPECT_LT(std::abs(back.omega0() - r.omega0()), 1e-9);
        EXPECT_LT(std::abs(back.omega1() - r.omega1()), 1e-9);
    }
    Matrix2 bad{{1.0, 0.0, 0.0, 1.0 + 1e-9}};
    EXPECT_THROW(receiver_transform(q, bad), std::invalid_argument);
}

TEST(quantum_encoding, grandmother_match) {
    Qubit face = precode(-47.0);
    GrandmotherTemplate t(face, 0.9, "grandmother");
    MatchResult m = grandmother_match(face, t);
    EXPECT_TRUE(m.fires);
    EXPECT_NEAR(m.fidelity, 1.0, 1e-12);
    Qubit orth(-face.omega1(), face.omega0());
    MatchResult n = grandmother_match(orth, t);
    EXPECT_FALSE(n.fires);
    EXPECT_NEAR(n.fidelity, 0.0, 1e-12);
    EXPECT_THROW(GrandmotherTemplate(face, 0.5, "x"), std::invalid_argument);
    EXPECT_THROW(GrandmotherTemplate(face, 1.01, "x"), std::invalid_argument);
    EXPECT_NO_THROW(GrandmotherTemplate(face, 1.0, "x"));
}

TEST(quantum_encoding, grandmother_fires_at_equality) {
    // |<0|plus>|^2 = 0.5 exactly is not a valid threshold, so use cos^2(pi/8) region states.
    Qubit stored = Qubit::zero();
    Qubit probe(0.75, std::sqrt(1.0 - 0.5625));
    double f = fidelity(probe, stored);
    EXPECT_TRUE(grandmother_match(probe, GrandmotherTemplate(stored, f, "edge")).fires);
    EXPECT_FALSE(grandmother_match(probe, GrandmotherTemplate(stored, std::nextafter(f, 1.0), "edge")).fires);
}

TEST(quantum_encoding, teleported_template_fires) {
    Rng rng(8);
    for (int i = 0; i < 200; ++i) {
        Qubit stored = random_qubit(rng);
        TeleportChannel ch(0, 1, true, 0.0);
        Qubit received = transfer(ch, stored, rng).received;
        EXPECT_TRUE(grandmother_match(received, GrandmotherTemplate(stored, 1.0 - 1e-9, "t")).fires);
    }
}

TEST(quantum_encoding, network_transfer) {
    CorticalNetwork net;
    net.add_node(0, CorticalArea::V1, -50.0);
    net.add_node(1, CorticalArea::Area7a);
    net.add_node(2, CorticalArea::Area19, -60.0);
    EXPECT_THROW(net.add_node(0, CorticalArea::V1), std::invalid_argument);
    EXPECT_EQ(net.size(), 3u);
    Rng rng(9);
    // Empty sender register.
    EXPECT_THROW(net.transfer(TeleportChannel(0, 1, true, 0.0), rng), std::invalid_argument);
    Qubit sent = net.precode_node(0);
    TransferResult r = net.transfer(TeleportChannel(0, 1, true, 0.0), rng);
    EXPECT_GE(r.fidelity, 1.0 - 1e-9);
    EXPECT_FALSE(net.node(0).qubit.has_value());
    ASSERT_TRUE(net.node(1).qubit.has_value());
    EXPECT_NEAR(fidelity(*net.node(1).qubit, sent), 1.0, 1e-9);
    EXPECT_NEAR(decode_potential(sent), -50.0, 1e-9);

    net.precode_node(2);
    EXPECT_THROW(net.transfer(TeleportChannel(2, 0, true, 0.0), rng), std::invalid_argument);
    EXPECT_THROW(net.transfer(TeleportChannel(2, 9, true, 0.0), rng), std::invalid_argument);
    EXPECT_THROW(net.transfer(TeleportChannel(9, 1, true, 0.0), rng), std::invalid_argument);
    EXPECT_THROW(net.transfer(TeleportChannel(1, 1, true, 0.0), rng), std::invalid_argument);
}

TEST(quantum_encoding, gao_definite) {
    GaoSetup setup;
    Rng rng(10);
    for (int bit : {0, 1}) {
        for (int i = 0; i < 100; ++i) {
            GaoReport r = gao_distinguish(setup, Definite{bit}, rng);
            EXPECT_EQ(r.label, GaoLabel::Definite);
            EXPECT_EQ(r.perceived_at, setup.t_perception);
            ASSERT_TRUE(r.collapsed_to.has_value());
            EXPECT_EQ(*r.collapsed_to, bit);
        }
    }
    EXPECT_THROW(gao_distinguish(setup, Definite{2}, rng), std::invalid_argument);
}

TEST(quantum_encoding, gao_superposition_born_rule) {
    GaoSetup setup;
    for (auto [w0, w1] : {std::pair{kInvSqrt2, kInvSqrt2}, std::pair{0.6, 0.8}, std::pair{0.28, 0.96}}) {
        Rng rng(12);
        int ones = 0;
        const int n = 10000;
        for (int i = 0; i < n; ++i) {
            GaoReport r = gao_distinguish(setup, Superposition{w0, w1}, rng);
            EXPECT_EQ(r.label, GaoLabel::Superposition);
            EXPECT_EQ(r.perceived_at, setup.t_collapse);
            ones += *r.collapsed_to;
        }
        EXPECT_NEAR(ones / double(n), w1 * w1, 0.02);
    }
}

TEST(quantum_encoding, gao_threshold_boundary) {
    // Dyadic times make t_C - t_P exact.
    Rng rng(13);
    Superposition s{0.6, 0.8};
    EXPECT_EQ(gao_distinguish({0.25, 0.375, 0.125}, s, rng).label, GaoLabel::Superposition);
    EXPECT_EQ(gao_distinguish({0.25, 0.375, std::nextafter(0.125, 1.0)}, s, rng).label,
              GaoLabel::Indistinguishable);
    EXPECT_EQ(gao_distinguish({0.25, 0.375, 0.0625}, s, rng).label, GaoLabel::Superposition);
    EXPECT_EQ(gao_distinguish({0.25, 0.375, 0.25}, s, rng).label, GaoLabel::Indistinguishable);
    EXPECT_EQ(gao_distinguish({0.25, 0.375, 0.25}, Definite{0}, rng).label, GaoLabel::Definite);
}

TEST(quantum_encoding, gao_label_ignores_amplitudes) {
    Rng rng(14);
    GaoSetup close{0.25, 0.3125, 0.125};
    GaoSetup far{0.25, 0.5, 0.125};
    for (double w0 : {0.0, 0.1, 0.5, 0.9, 1.0}) {
        Superposition s{w0, std::sqrt(1.0 - w0 * w0)};
        EXPECT_EQ(gao_distinguish(close, s, rng).label, GaoLabel::Indistinguishable);
        EXPECT_EQ(gao_distinguish(far, s, rng).label, GaoLabel::Superposition);
    }
}

TEST(quantum_encoding, gao_setup_validation) {
    Rng rng(15);
    EXPECT_THROW(gao_distinguish({0.3, 0.1, 0.05}, Definite{0}, rng), std::invalid_argument);
    EXPECT_THROW(gao_distinguish({0.0, 0.1, 0.05}, Definite{0}, rng), std::invalid_argument);
    EXPECT_THROW(gao_distinguish({0.1, 0.3, -0.05}, Definite{0}, rng), std::invalid_argument);
    EXPECT_THROW(gao_distinguish(GaoSetup{}, Superposition{0.5, 0.5}, rng), std::invalid_argument);
}
