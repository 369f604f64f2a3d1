// Copyright 2026 The qcommbench Authors
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

#include <span>
#include <string>
#include <vector>

#include "qcb/linalg.hpp"

namespace qcb {

/// Ordered qubit labels with index lookup. Qubit i of the register is the
/// i-th most significant bit of a basis index, so |q0 q1 ... q_{n-1}> reads
/// left to right like a ket.
class QubitRegister {
  public:
    QubitRegister() = default;
    explicit QubitRegister(std::vector<std::string> labels);

    std::size_t size() const noexcept {
        return labels_.size();
    }
    const std::vector<std::string> &labels() const noexcept {
        return labels_;
    }
    bool contains(const std::string &label) const;
    std::size_t index_of(const std::string &label) const;

    /// Global bit position (0 = least significant) of a qubit label.
    std::size_t bit_of(const std::string &label) const {
        return size() - 1 - index_of(label);
    }

    /// Distinct, present target indices; throws on unknown or duplicate labels.
    std::vector<std::size_t> resolve(std::span<const std::string> targets) const;

  private:
    std::vector<std::string> labels_;
};

/// State vector over a qubit register.
class PureState {
  public:
    /// |0...0> over `labels`.
    static PureState zero(std::vector<std::string> labels);
    /// Validates length and normalization (1e-9).
    static PureState from_amplitudes(std::vector<std::string> labels, std::vector<cplx> amps);

    const QubitRegister &qubits() const noexcept {
        return qubits_;
    }
    std::size_t num_qubits() const noexcept {
        return qubits_.size();
    }
    std::span<const cplx> amplitudes() const noexcept {
        return amps_;
    }
    std::span<cplx> mutable_amplitudes() noexcept {
        return amps_;
    }
    double norm_squared() const;
    void normalize();

    /// |<this|other>|^2. Registers must match.
    double fidelity(const PureState &other) const;

  private:
    PureState(QubitRegister qubits, std::vector<cplx> amps) : qubits_(std::move(qubits)), amps_(std::move(amps)) {
    }
    QubitRegister qubits_;
    std::vector<cplx> amps_;
};

/// Density matrix over a qubit register, stored row-major.
class MixedState {
  public:
    static MixedState zero(std::vector<std::string> labels);
    static MixedState from_pure(const PureState &psi);
    /// Validates Hermiticity and unit trace (1e-9).
    static MixedState from_matrix(std::vector<std::string> labels, const Matrix &rho);

    const QubitRegister &qubits() const noexcept {
        return qubits_;
    }
    std::size_t num_qubits() const noexcept {
        return qubits_.size();
    }
    std::size_t dim() const noexcept {
        return std::size_t{1} << qubits_.size();
    }
    cplx operator()(std::size_t r, std::size_t c) const {
        return rho_[r * dim() + c];
    }
    /// Row-major entries; viewed as a vector over 2n bits (row bits high).
    std::span<cplx> mutable_entries() noexcept {
        return rho_;
    }
    std::span<const cplx> entries() const noexcept {
        return rho_;
    }

    cplx trace() const;
    Matrix to_matrix() const;
    /// <psi|rho|psi>. Registers must match.
    double fidelity(const PureState &psi) const;
    double hermiticity_error() const;

  private:
    MixedState(QubitRegister qubits, std::vector<cplx> rho) : qubits_(std::move(qubits)), rho_(std::move(rho)) {
    }
    QubitRegister qubits_;
    std::vector<cplx> rho_;
};

/// Completely positive trace-preserving map given by Kraus operators.
class KrausChannel {
  public:
    /// Throws unless all operators are 2^arity square and sum K^dag K = I
    /// within 1e-8.
    KrausChannel(std::vector<Matrix> operators, std::size_t arity);

    static KrausChannel identity(std::size_t arity);
    static KrausChannel from_unitary(const Matrix &u);

    const std::vector<Matrix> &operators() const noexcept {
        return ops_;
    }
    std::size_t arity() const noexcept {
        return arity_;
    }
    double completeness_error() const;

    /// True when every K_i is proportional to a unitary, in which case the
    /// probability of branch i is state independent and equals `weights()[i]`.
    bool is_mixed_unitary() const noexcept {
        return mixed_unitary_;
    }
    const std::vector<double> &weights() const noexcept {
        return weights_;
    }

    /// sum_i K_i (x) conj(K_i), acting on (row bits, column bits) of a
    /// vectorized density matrix.
    const Matrix &superoperator() const noexcept {
        return superop_;
    }

  private:
    std::vector<Matrix> ops_;
    std::size_t arity_;
    bool mixed_unitary_ = false;
    std::vector<double> weights_;
    Matrix superop_;
};

inline constexpr double kUnitaryTol = 1e-9;
inline constexpr double kStateTol = 1e-8;

void apply_unitary(PureState &state, const Matrix &u, std::span<const std::string> targets);
void apply_unitary(MixedState &state, const Matrix &u, std::span<const std::string> targets);
void apply_channel(MixedState &state, const KrausChannel &channel, std::span<const std::string> targets);

/// Reduced state over `keep`, in the order the labels appear in the input
/// register.
MixedState partial_trace(const MixedState &state, std::span<const std::string> keep);

}  // namespace qcb
