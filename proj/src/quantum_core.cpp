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
#include <numbers>
#include <stdexcept>
#include <string>

namespace qvision {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void require_normalized(double norm_squared, const char *what) {
    if (!std::isfinite(norm_squared) || std::abs(norm_squared - 1.0) > kStateTolerance) {
        throw std::invalid_argument(std::string(what) + ": state is not normalized (norm^2 = " +
                                    std::to_string(norm_squared) + ")");
    }
}

}  // namespace

Qubit::Qubit(Complex omega0, Complex omega1) : omega0_(omega0), omega1_(omega1) {
    require_normalized(std::norm(omega0) + std::norm(omega1), "Qubit");
}

Qubit Qubit::normalized(Complex omega0, Complex omega1) {
    double n = std::sqrt(std::norm(omega0) + std::norm(omega1));
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::invalid_argument("Qubit::normalized: zero or non-finite amplitudes");
    }
    return {omega0 / n, omega1 / n};
}

StateVector::StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("StateVector: num_qubits must be in [1, 3]");
    }
    if (amplitudes_.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("StateVector: expected 2^num_qubits amplitudes");
    }
    require_normalized(norm_squared(), "StateVector");
}

StateVector::StateVector(const Qubit &q) : StateVector(1, {q.omega0(), q.omega1()}) {
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const Complex &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

std::string_view to_string(BellOutcome outcome) {
    switch (outcome) {
        case BellOutcome::PsiPlus:
            return "PsiPlus";
        case BellOutcome::PsiMinus:
            return "PsiMinus";
        case BellOutcome::PhiPlus:
            return "PhiPlus";
        case BellOutcome::PhiMinus:
            return "PhiMinus";
    }
    return "?";
}

std::size_t index_of(BellOutcome outcome) {
    return static_cast<std::size_t>(outcome);
}

Matrix2 Matrix2::adjoint() const {
    return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
}

Matrix2 Matrix2::operator*(const Matrix2 &rhs) const {
    Matrix2 out;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            out.m[r * 2 + c] = (*this)(r, 0) * rhs(0, c) + (*this)(r, 1) * rhs(1, c);
        }
    }
    return out;
}

double Matrix2::unitarity_error() const {
    Matrix2 product = adjoint() * *this;
    Matrix2 eye = identity();
    double worst = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        worst = std::max(worst, std::abs(product.m[k] - eye.m[k]));
    }
    return std::isfinite(worst) ? worst : INFINITY;
}

std::array<Complex, 2> Matrix2::apply(Complex a0, Complex a1) const {
    return {m[0] * a0 + m[1] * a1, m[2] * a0 + m[3] * a1};
}

Qubit apply(const Matrix2 &u, const Qubit &q) {
    if (!u.is_unitary()) {
        throw std::invalid_argument("apply: matrix is not unitary");
    }
    auto [a0, a1] = u.apply(q.omega0(), q.omega1());
    return {a0, a1};
}

Matrix2 CorrectionUnitary::matrix() const {
    switch (kind) {
        case CorrectionKind::Identity:
            return Matrix2::identity();
        case CorrectionKind::PhaseFlip:
            return {{1.0, 0.0, 0.0, -1.0}};
        case CorrectionKind::BitFlip:
            return {{0.0, 1.0, 1.0, 0.0}};
        case CorrectionKind::BitPhaseFlip:
            return {{0.0, 1.0, -1.0, 0.0}};
    }
    throw std::logic_error("unknown CorrectionKind");
}

std::string_view to_string(CorrectionKind kind) {
    switch (kind) {
        case CorrectionKind::Identity:
            return "Identity";
        case CorrectionKind::PhaseFlip:
            return "PhaseFlip";
        case CorrectionKind::BitFlip:
            return "BitFlip";
        case CorrectionKind::BitPhaseFlip:
            return "BitPhaseFlip";
    }
    return "?";
}

StateVector make_epr() {
    return {2, {0.0, kInvSqrt2, kInvSqrt2, 0.0}};
}

StateVector bell_vector(BellOutcome outcome) {
    switch (outcome) {
        case BellOutcome::PsiPlus:
            return {2, {0.0, kInvSqrt2, kInvSqrt2, 0.0}};
        case BellOutcome::PsiMinus:
            return {2, {0.0, kInvSqrt2, -kInvSqrt2, 0.0}};
        case BellOutcome::PhiPlus:
            return {2, {kInvSqrt2, 0.0, 0.0, kInvSqrt2}};
        case BellOutcome::PhiMinus:
            return {2, {kInvSqrt2, 0.0, 0.0, -kInvSqrt2}};
    }
    throw std::logic_error("unknown BellOutcome");
}

StateVector tensor(const StateVector &left, const StateVector &right) {
    std::size_t n = left.num_qubits() + right.num_qubits();
    if (n > kMaxQubits) {
        throw std::invalid_argument("tensor: result exceeds 3 qubits");
    }
    std::size_t right_dim = right.amplitudes().size();
    std::vector<Complex> out(left.amplitudes().size() * right_dim);
    for (std::size_t i = 0; i < left.amplitudes().size(); ++i) {
        for (std::size_t j = 0; j < right_dim; ++j) {
            out[i * right_dim + j] = left[i] * right[j];
        }
    }
    return {n, std::move(out)};
}

BellDecomposition bell_coefficients(const StateVector &state) {
    if (state.num_qubits() != 3) {
        throw std::invalid_argument("bell_coefficients: expected a 3-qubit state");
    }
    BellDecomposition out;
    for (BellOutcome outcome : kBellOutcomes) {
        StateVector bell = bell_vector(outcome);
        Complex c0 = 0.0;
        Complex c1 = 0.0;
        for (std::size_t ab = 0; ab < 4; ++ab) {
            Complex weight = std::conj(bell[ab]);
            c0 += weight * state[ab * 2];
            c1 += weight * state[ab * 2 + 1];
        }
        out.components[index_of(outcome)] = {c0, c1};
    }
    return out;
}

std::vector<Complex> recompose(const BellDecomposition &decomposition) {
    std::vector<Complex> out(8, 0.0);
    for (BellOutcome outcome : kBellOutcomes) {
        StateVector bell = bell_vector(outcome);
        const ResidualAmplitudes &r = decomposition[outcome];
        for (std::size_t ab = 0; ab < 4; ++ab) {
            out[ab * 2] += bell[ab] * r.c0;
            out[ab * 2 + 1] += bell[ab] * r.c1;
        }
    }
    return out;
}

MeasurementResult bell_measure(const StateVector &state, Rng &rng) {
    BellDecomposition parts = bell_coefficients(state);
    double u = rng.uniform();
    double cumulative = 0.0;
    // Fall back to the last outcome with nonzero weight to absorb rounding in the cumulative sum.
    std::size_t chosen = 4;
    for (std::size_t k = 0; k < 4; ++k) {
        double w = parts.components[k].weight();
        if (w <= 0.0) {
            continue;
        }
        chosen = k;
        cumulative += w;
        if (u < cumulative) {
            break;
        }
    }
    if (chosen == 4) {
        throw std::invalid_argument("bell_measure: state has no weight");
    }
    const ResidualAmplitudes &r = parts.components[chosen];
    return {kBellOutcomes[chosen], Qubit::normalized(r.c0, r.c1)};
}

CorrectionUnitary correction_for(BellOutcome outcome) {
    switch (outcome) {
        case BellOutcome::PsiPlus:
            return {CorrectionKind::Identity};
        case BellOutcome::PsiMinus:
            return {CorrectionKind::PhaseFlip};
        case BellOutcome::PhiPlus:
            return {CorrectionKind::BitFlip};
        case BellOutcome::PhiMinus:
            return {CorrectionKind::BitPhaseFlip};
    }
    throw std::logic_error("unknown BellOutcome");
}

TeleportResult teleport(const Qubit &input, Rng &rng) {
    StateVector joint = tensor(StateVector(input), make_epr());
    MeasurementResult m = bell_measure(joint, rng);
    Qubit corrected = apply(correction_for(m.outcome).matrix(), m.collapsed);
    return {m.outcome, corrected};
}

double fidelity(const Qubit &a, const Qubit &b) {
    Complex overlap = std::conj(a.omega0()) * b.omega0() + std::conj(a.omega1()) * b.omega1();
    return std::min(1.0, std::norm(overlap));
}

Qubit random_qubit(Rng &rng) {
    double cos_theta = 1.0 - 2.0 * rng.uniform();
    double phi = 2.0 * std::numbers::pi * rng.uniform();
    double c = std::sqrt((1.0 + cos_theta) / 2.0);
    double s = std::sqrt((1.0 - cos_theta) / 2.0);
    return Qubit::normalized(c, std::polar(s, phi));
}

}  // namespace qvision
