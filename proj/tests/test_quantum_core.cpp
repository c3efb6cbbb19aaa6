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

#include "qvision/quantum_core.hpp"

#include <cmath>
#include <stdexcept>

#include "gtest/gtest.h"

using namespace qvision;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

StateVector random_state(std::size_t n, Rng &rng) {
    std::vector<Complex> amps(std::size_t{1} << n);
    double norm = 0.0;
    for (auto &a : amps) {
        a = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return StateVector(n, amps);
}

Qubit branch_output(const Qubit &input, BellOutcome outcome) {
    StateVector joint = tensor(StateVector(input), make_epr());
    ResidualAmplitudes r = bell_coefficients(joint)[outcome];
    Qubit collapsed = Qubit::normalized(r.c0, r.c1);
    return apply(correction_for(outcome).matrix(), collapsed);
}

}  // namespace

TEST(quantum_core, qubit_rejects_unnormalized) {
    EXPECT_THROW(Qubit(1.0, 1.0), std::invalid_argument);
    EXPECT_THROW(Qubit(0.0, 0.0), std::invalid_argument);
    EXPECT_NO_THROW(Qubit(0.6, 0.8));
    EXPECT_THROW(Qubit::normalized(0.0, 0.0), std::invalid_argument);
}

TEST(quantum_core, epr_amplitudes) {
    StateVector epr = make_epr();
    ASSERT_EQ(epr.num_qubits(), 2u);
    EXPECT_EQ(epr[0], Complex(0.0));
    EXPECT_NEAR(epr[1].real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(epr[2].real(), kInvSqrt2, 1e-15);
    EXPECT_EQ(epr[3], Complex(0.0));
    EXPECT_NEAR(epr.norm_squared(), 1.0, 1e-12);
}

TEST(quantum_core, epr_marginals_by_partial_trace) {
    StateVector epr = make_epr();
    // rho_A[i][i'] = sum_j psi[i j] conj(psi[i' j]); diagonal only.
    double pa[2] = {0, 0};
    double pb[2] = {0, 0};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            pa[i] += std::norm(epr[i * 2 + j]);
            pb[j] += std::norm(epr[i * 2 + j]);
        }
    }
    EXPECT_NEAR(pa[0], 0.5, 1e-12);
    EXPECT_NEAR(pa[1], 0.5, 1e-12);
    EXPECT_NEAR(pb[0], 0.5, 1e-12);
    EXPECT_NEAR(pb[1], 0.5, 1e-12);
}

TEST(quantum_core, tensor_basis_states) {
    StateVector s = tensor(StateVector(Qubit::zero()), StateVector(Qubit::one()));
    ASSERT_EQ(s.num_qubits(), 2u);
    EXPECT_EQ(s[0], Complex(0.0));
    EXPECT_EQ(s[1], Complex(1.0));
    EXPECT_EQ(s[2], Complex(0.0));
    EXPECT_EQ(s[3], Complex(0.0));
}

TEST(quantum_core, tensor_with_epr_gives_four_term_state) {
    Qubit a(0.6, Complex(0.0, 0.8));
    StateVector s = tensor(StateVector(a), make_epr());
    ASSERT_EQ(s.num_qubits(), 3u);
    Complex w0 = a.omega0() * kInvSqrt2;
    Complex w1 = a.omega1() * kInvSqrt2;
    std::vector<Complex> expected = {0.0, w0, w0, 0.0, 0.0, w1, w1, 0.0};
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_NEAR(std::abs(s[i] - expected[i]), 0.0, 1e-15) << i;
    }
}

TEST(quantum_core, tensor_matches_double_loop) {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        StateVector a = random_state(1, rng);
        StateVector b = random_state(2, rng);
        StateVector s = tensor(a, b);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                EXPECT_NEAR(std::abs(s[i * 4 + j] - a[i] * b[j]), 0.0, 1e-15);
            }
        }
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-9);
    }
}

TEST(quantum_core, tensor_rejects_more_than_three_qubits) {
    EXPECT_THROW(tensor(make_epr(), make_epr()), std::invalid_argument);
}

TEST(quantum_core, bell_basis_is_orthonormal) {
    for (BellOutcome a : kBellOutcomes) {
        for (BellOutcome b : kBellOutcomes) {
            Complex g = dot(bell_vector(a).amplitudes(), bell_vector(b).amplitudes());
            EXPECT_NEAR(std::abs(g - Complex(a == b ? 1.0 : 0.0)), 0.0, 1e-12);
        }
    }
}

TEST(quantum_core, bell_components_of_teleport_state) {
    Qubit a(0.6, 0.8);
    BellDecomposition d = bell_coefficients(tensor(StateVector(a), make_epr()));
    auto expect_prop = [](const ResidualAmplitudes &r, Complex c0, Complex c1) {
        // Each component is (c0|0> + c1|1>) / 2.
        EXPECT_NEAR(std::abs(r.c0 - c0 / 2.0), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(r.c1 - c1 / 2.0), 0.0, 1e-12);
        EXPECT_NEAR(r.weight(), 0.25, 1e-12);
    };
    expect_prop(d[BellOutcome::PsiPlus], 0.6, 0.8);
    expect_prop(d[BellOutcome::PsiMinus], 0.6, -0.8);
    expect_prop(d[BellOutcome::PhiPlus], 0.8, 0.6);
    expect_prop(d[BellOutcome::PhiMinus], -0.8, 0.6);
}

TEST(quantum_core, bell_components_for_zero_input) {
    BellDecomposition d = bell_coefficients(tensor(StateVector(Qubit::zero()), make_epr()));
    EXPECT_NEAR(std::abs(d[BellOutcome::PsiPlus].c1), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(d[BellOutcome::PsiMinus].c1), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(d[BellOutcome::PhiPlus].c0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(d[BellOutcome::PhiMinus].c0), 0.0, 1e-15);
}

TEST(quantum_core, bell_coefficients_recompose_random_states) {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        StateVector s = random_state(3, rng);
        std::vector<Complex> back = recompose(bell_coefficients(s));
        ASSERT_EQ(back.size(), 8u);
        for (std::size_t i = 0; i < 8; ++i) {
            EXPECT_LT(std::abs(back[i] - s[i]), 1e-9);
        }
    }
}

TEST(quantum_core, bell_coefficients_requires_three_qubits) {
    EXPECT_THROW(bell_coefficients(make_epr()), std::invalid_argument);
}

TEST(quantum_core, outcome_weights_are_quarter_for_any_input) {
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        Qubit q = random_qubit(rng);
        BellDecomposition d = bell_coefficients(tensor(StateVector(q), make_epr()));
        for (BellOutcome o : kBellOutcomes) {
            EXPECT_NEAR(d[o].weight(), 0.25, 1e-9);
        }
    }
}

TEST(quantum_core, bell_measure_collapses_zero_input) {
    StateVector s = tensor(StateVector(Qubit::zero()), make_epr());
    Rng rng(1);
    for (int i = 0; i < 64; ++i) {
        MeasurementResult m = bell_measure(s, rng);
        bool psi = m.outcome == BellOutcome::PsiPlus || m.outcome == BellOutcome::PsiMinus;
        EXPECT_NEAR(psi ? m.collapsed.prob0() : m.collapsed.prob1(), 1.0, 1e-12);
    }
}

TEST(quantum_core, bell_measure_psi_minus_collapse) {
    StateVector s = tensor(StateVector(Qubit(0.6, 0.8)), make_epr());
    Rng rng(3);
    bool seen = false;
    for (int i = 0; i < 200 && !seen; ++i) {
        MeasurementResult m = bell_measure(s, rng);
        if (m.outcome == BellOutcome::PsiMinus) {
            seen = true;
            EXPECT_NEAR(std::abs(m.collapsed.omega0() - 0.6), 0.0, 1e-12);
            EXPECT_NEAR(std::abs(m.collapsed.omega1() + 0.8), 0.0, 1e-12);
        }
    }
    EXPECT_TRUE(seen);
}

TEST(quantum_core, bell_measure_never_samples_zero_weight) {
    // |00>|0>: only Phi outcomes have weight.
    StateVector s(3, {1.0, 0, 0, 0, 0, 0, 0, 0});
    Rng rng(8);
    for (int i = 0; i < 1000; ++i) {
        BellOutcome o = bell_measure(s, rng).outcome;
        EXPECT_TRUE(o == BellOutcome::PhiPlus || o == BellOutcome::PhiMinus);
    }
}

TEST(quantum_core, bell_measure_empirical_uniformity) {
    Rng rng(2024);
    Qubit q(0.6, Complex(0.0, 0.8));
    StateVector s = tensor(StateVector(q), make_epr());
    std::array<int, 4> counts{};
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        ++counts[index_of(bell_measure(s, rng).outcome)];
    }
    for (int c : counts) {
        EXPECT_NEAR(c / double(n), 0.25, 0.02);
    }
}

TEST(quantum_core, corrections) {
    EXPECT_EQ(correction_for(BellOutcome::PsiPlus).kind, CorrectionKind::Identity);
    EXPECT_EQ(correction_for(BellOutcome::PsiMinus).kind, CorrectionKind::PhaseFlip);
    EXPECT_EQ(correction_for(BellOutcome::PhiPlus).kind, CorrectionKind::BitFlip);
    EXPECT_EQ(correction_for(BellOutcome::PhiMinus).kind, CorrectionKind::BitPhaseFlip);
    for (BellOutcome o : kBellOutcomes) {
        EXPECT_LE(correction_for(o).matrix().unitarity_error(), kMatrixTolerance);
    }
    Qubit fixed = apply(correction_for(BellOutcome::PsiMinus).matrix(), Qubit(0.6, -0.8));
    EXPECT_NEAR(std::abs(fixed.omega0() - 0.6), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(fixed.omega1() - 0.8), 0.0, 1e-15);
}

TEST(quantum_core, apply_rejects_non_unitary) {
    Matrix2 m{{1.0, 1.0, 0.0, 1.0}};
    EXPECT_THROW(apply(m, Qubit::zero()), std::invalid_argument);
}

TEST(quantum_core, teleport_zero) {
    Rng rng(0);
    TeleportResult r = teleport(Qubit::zero(), rng);
    EXPECT_NEAR(fidelity(r.output, Qubit::zero()), 1.0, 1e-12);
}

TEST(quantum_core, every_branch_recovers_plus_state) {
    Qubit plus(kInvSqrt2, kInvSqrt2);
    for (BellOutcome o : kBellOutcomes) {
        EXPECT_NEAR(fidelity(branch_output(plus, o), plus), 1.0, 1e-12) << to_string(o);
    }
}

TEST(quantum_core, every_branch_recovers_random_states) {
    Rng rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        Qubit q = random_qubit(rng);
        for (BellOutcome o : kBellOutcomes) {
            EXPECT_GE(fidelity(branch_output(q, o), q), 1.0 - 1e-9);
        }
    }
}

TEST(quantum_core, teleport_fidelity_property) {
    Rng rng(123456);
    double worst = 1.0;
    for (int i = 0; i < 10000; ++i) {
        Qubit q = random_qubit(rng);
        TeleportResult r = teleport(q, rng);
        worst = std::min(worst, fidelity(q, r.output));
        EXPECT_NEAR(r.output.prob0() + r.output.prob1(), 1.0, 1e-9);
    }
    EXPECT_GE(worst, 1.0 - 1e-9);
}

TEST(quantum_core, fidelity_values) {
    Rng rng(4);
    Qubit q = random_qubit(rng);
    EXPECT_NEAR(fidelity(q, q), 1.0, 1e-12);
    EXPECT_EQ(fidelity(Qubit::zero(), Qubit::one()), 0.0);
    // Global phase is invisible.
    Complex phase = std::polar(1.0, 0.7);
    EXPECT_NEAR(fidelity(q, Qubit(phase * q.omega0(), phase * q.omega1())), 1.0, 1e-12);
    Qubit plus(kInvSqrt2, kInvSqrt2);
    EXPECT_NEAR(fidelity(Qubit::zero(), plus), 0.5, 1e-12);
}

TEST(quantum_core, random_qubit_is_haar_on_average) {
    // Haar measure gives E[|omega0|^2] = 1/2 and E[|omega0|^4] = 1/3.
    Rng rng(31);
    double m1 = 0.0;
    double m2 = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        double p = random_qubit(rng).prob0();
        m1 += p;
        m2 += p * p;
    }
    EXPECT_NEAR(m1 / n, 0.5, 0.01);
    EXPECT_NEAR(m2 / n, 1.0 / 3.0, 0.01);
}

TEST(quantum_core, seeded_runs_repeat) {
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 100; ++i) {
        Qubit qa = random_qubit(a);
        Qubit qb = random_qubit(b);
        TeleportResult ra = teleport(qa, a);
        TeleportResult rb = teleport(qb, b);
        EXPECT_EQ(ra.outcome, rb.outcome);
        EXPECT_EQ(ra.output.omega0(), rb.output.omega0());
    }
}
