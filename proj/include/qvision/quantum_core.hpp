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
#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "qvision/rng.hpp"

namespace qvision {

using Complex = std::complex<double>;

/// Tolerance for state normalization and state equality.
inline constexpr double kStateTolerance = 1e-9;
/// Tolerance for matrix identities such as U^dagger U = I.
inline constexpr double kMatrixTolerance = 1e-12;

/// Normalized single-qubit state omega0|0> + omega1|1>.
class Qubit {
   public:
    /// Throws std::invalid_argument unless |omega0|^2 + |omega1|^2 = 1 within kStateTolerance.
    Qubit(Complex omega0, Complex omega1);

    static Qubit zero() {
        return {1.0, 0.0};
    }
    static Qubit one() {
        return {0.0, 1.0};
    }
    /// Rescales an arbitrary nonzero amplitude pair to unit norm.
    static Qubit normalized(Complex omega0, Complex omega1);

    Complex omega0() const {
        return omega0_;
    }
    Complex omega1() const {
        return omega1_;
    }
    double prob0() const {
        return std::norm(omega0_);
    }
    double prob1() const {
        return std::norm(omega1_);
    }

   private:
    Complex omega0_;
    Complex omega1_;
};

/// Joint state of up to three qubits. Basis index bits are ordered with the
/// first qubit most significant, so index 0b011 is |0_A 1_B 1_C>.
class StateVector {
   public:
    /// Throws std::invalid_argument on wrong length or norm.
    StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes);
    explicit StateVector(const Qubit &q);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    Complex operator[](std::size_t index) const {
        return amplitudes_[index];
    }
    double norm_squared() const;

   private:
    std::size_t num_qubits_;
    std::vector<Complex> amplitudes_;
};

inline constexpr std::size_t kMaxQubits = 3;

enum class BellOutcome { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

inline constexpr std::array<BellOutcome, 4> kBellOutcomes = {
    BellOutcome::PsiPlus, BellOutcome::PsiMinus, BellOutcome::PhiPlus, BellOutcome::PhiMinus};

std::string_view to_string(BellOutcome outcome);
std::size_t index_of(BellOutcome outcome);

/// Row-major 2x2 complex matrix.
struct Matrix2 {
    std::array<Complex, 4> m{};

    static Matrix2 identity() {
        return {{1.0, 0.0, 0.0, 1.0}};
    }
    Complex operator()(std::size_t row, std::size_t col) const {
        return m[row * 2 + col];
    }
    Matrix2 adjoint() const;
    Matrix2 operator*(const Matrix2 &rhs) const;
    /// Largest elementwise deviation of U^dagger U from I.
    double unitarity_error() const;
    bool is_unitary(double tolerance = kMatrixTolerance) const {
        return unitarity_error() <= tolerance;
    }
    /// Applies the matrix to an amplitude pair without renormalizing.
    std::array<Complex, 2> apply(Complex a0, Complex a1) const;
};

/// Applies a unitary to a qubit. Throws std::invalid_argument if `u` is not
/// unitary within kMatrixTolerance.
Qubit apply(const Matrix2 &u, const Qubit &q);

enum class CorrectionKind { Identity, PhaseFlip, BitFlip, BitPhaseFlip };

struct CorrectionUnitary {
    CorrectionKind kind;

    /// I, Z, X, and ZX (X applied first) respectively.
    Matrix2 matrix() const;
};

std::string_view to_string(CorrectionKind kind);

/// Unnormalized residual amplitudes left on the receiving qubit for one Bell outcome.
struct ResidualAmplitudes {
    Complex c0;
    Complex c1;

    double weight() const {
        return std::norm(c0) + std::norm(c1);
    }
};

/// Residual state of the third qubit for each Bell outcome, indexed by index_of(outcome).
struct BellDecomposition {
    std::array<ResidualAmplitudes, 4> components;

    const ResidualAmplitudes &operator[](BellOutcome outcome) const {
        return components[index_of(outcome)];
    }
};

struct MeasurementResult {
    BellOutcome outcome;
    Qubit collapsed;
};

struct TeleportResult {
    BellOutcome outcome;
    Qubit output;
};

/// (|10> + |01>) / sqrt(2).
StateVector make_epr();

/// The two-qubit Bell basis vector for `outcome`:
/// Psi(+/-) = (|01> +/- |10>)/sqrt(2), Phi(+/-) = (|00> +/- |11>)/sqrt(2).
StateVector bell_vector(BellOutcome outcome);

/// Kronecker product; qubits of `left` become the high-order index bits.
/// Throws std::invalid_argument if the result would exceed kMaxQubits.
StateVector tensor(const StateVector &left, const StateVector &right);

/// Expands a 3-qubit state in the Bell basis of its first two qubits.
/// Throws std::invalid_argument unless state.num_qubits() == 3.
BellDecomposition bell_coefficients(const StateVector &state);

/// Reassembles sum_k bell_vector(k) (x) residual_k as a raw amplitude list.
std::vector<Complex> recompose(const BellDecomposition &decomposition);

/// Samples a Bell outcome on the first two qubits with Born probabilities and
/// returns the renormalized collapsed state of the third.
MeasurementResult bell_measure(const StateVector &state, Rng &rng);

CorrectionUnitary correction_for(BellOutcome outcome);

/// Full protocol: EPR pair, joint state, Bell measurement, correction.
TeleportResult teleport(const Qubit &input, Rng &rng);

/// |<a|b>|^2.
double fidelity(const Qubit &a, const Qubit &b);

/// Haar-uniform random qubit.
Qubit random_qubit(Rng &rng);

}  // namespace qvision
