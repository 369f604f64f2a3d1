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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcb/linalg.hpp"

namespace qcb {

enum class GateKind { I, X, Y, Z, H, U_PHASE, CNOT, MEASURE, BARRIER };

std::string_view to_string(GateKind kind);
/// Accepts the enumerator names ("I", "CNOT", "U_PHASE", ...).
GateKind gate_kind_from_string(std::string_view name);

bool is_unitary_kind(GateKind kind);
bool is_single_qubit_kind(GateKind kind);

/// Per-kind gate duration in nanoseconds. Kinds missing from the map fall
/// back to: single-qubit kinds -> duration of I, MEASURE/BARRIER -> 0.
struct GateDurations {
    std::map<GateKind, double> ns{{GateKind::I, 90.0}, {GateKind::U_PHASE, 0.0}, {GateKind::CNOT, 300.0}};

    double of(GateKind kind) const;
};

struct Gate {
    GateKind kind = GateKind::I;
    /// Control first for CNOT.
    std::vector<std::string> targets;
    double duration_ns = 0.0;
    /// Phase of U_PHASE; ignored otherwise.
    double phi = 0.0;

    static Gate single(GateKind kind, std::string q, double duration_ns);
    static Gate phase(std::string q, double phi, double duration_ns);
    static Gate cnot(std::string control, std::string target, double duration_ns);
    static Gate measure(std::string q);
    static Gate barrier(std::vector<std::string> qs);

    bool operator==(const Gate &) const = default;
};

/// Ordered gate list over labelled qubits. Immutable after construction.
class Circuit {
  public:
    Circuit() = default;
    /// Validates: targets known, CNOT has two distinct targets, U_PHASE phase
    /// finite, durations >= 0, and no gate touches a qubit after it has been
    /// measured.
    Circuit(std::vector<std::string> qubits, std::vector<Gate> gates, std::map<std::string, std::string> metadata = {});

    /// Qubit order taken from first use in `gates`.
    static Circuit from_gates(std::vector<Gate> gates, std::map<std::string, std::string> metadata = {});

    const std::vector<std::string> &qubits() const noexcept {
        return qubits_;
    }
    const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    const std::map<std::string, std::string> &metadata() const noexcept {
        return metadata_;
    }

    /// Labels of measured qubits in the order of their MEASURE gates; this is
    /// the classical bit order of outcome strings.
    std::vector<std::string> measured_qubits() const;
    double total_duration_ns() const;

  private:
    std::vector<std::string> qubits_;
    std::vector<Gate> gates_;
    std::map<std::string, std::string> metadata_;
};

/// Exact matrix of a unitary gate kind. CNOT is 4x4 with the control as the
/// high-order bit. Throws for MEASURE/BARRIER.
Matrix gate_matrix(GateKind kind, double phi = 0.0);

/// Which CNOT orientations the hardware offers on an edge (a, b).
enum class CnotDirection { Forward /* a -> b */, Backward /* b -> a */, Both };

/// CNOT(control, target) realised with the allowed orientation; a reversed
/// CNOT is wrapped in four Hadamards.
std::vector<Gate> directed_cnot(const std::string &control, const std::string &target, CnotDirection allowed_on_pair,
                                const GateDurations &durations);

/// SWAP(a, b) as three CNOTs; orientations that are not allowed are reversed
/// with Hadamard wrapping. `allowed` is expressed relative to (a, b).
std::vector<Gate> decompose_swap(const std::string &a, const std::string &b, CnotDirection allowed,
                                 const GateDurations &durations);

/// n identity gates of duration tau_ns on qubit q.
std::vector<Gate> identity_train(std::size_t n, const std::string &q, double tau_ns);

/// Product of the unitary gates of `gates` over `qubits` (BARRIER skipped).
/// Throws on MEASURE. Useful for verifying decompositions.
Matrix circuit_unitary(std::span<const Gate> gates, const std::vector<std::string> &qubits);

}  // namespace qcb
