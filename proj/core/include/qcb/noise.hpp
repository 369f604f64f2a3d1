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

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qcb/circuit.hpp"
#include "qcb/linalg.hpp"
#include "qcb/state.hpp"

namespace qcb {

/// Classical readout confusion for one qubit.
struct ReadoutError {
    double p1_given_0 = 0.0;  ///< epsilon_0: P(read 1 | state 0)
    double p0_given_1 = 0.0;  ///< epsilon_1: P(read 0 | state 1)

    bool operator==(const ReadoutError &) const = default;
};

/// Per-qubit readout errors with a device-wide fallback.
class ReadoutModel {
  public:
    ReadoutModel() = default;
    explicit ReadoutModel(std::optional<ReadoutError> fallback) : fallback_(fallback) {
    }

    static ReadoutModel ideal() {
        return ReadoutModel(ReadoutError{});
    }

    void set(const std::string &qubit, ReadoutError e);
    /// Throws qcb::Error when the qubit has no entry and there is no fallback.
    const ReadoutError &at(const std::string &qubit) const;
    bool covers(const std::string &qubit) const;

  private:
    std::map<std::string, ReadoutError> per_qubit_;
    std::optional<ReadoutError> fallback_;
};

/// Deterministic relative phase accumulated by one qubit while it idles
/// (identity gates). The phase reaches pi after t_osc.
struct CoherentDrift {
    double t_osc_us = 10.0;
    std::string target = "Q0";
};

struct CoherenceTimes {
    double t1_us = std::numeric_limits<double>::infinity();
    double t2_us = std::numeric_limits<double>::infinity();
};

/// Device imperfections consumed by both simulation backends.
///
/// Per gate the simulator applies: ideal unitary, then depolarizing (p1q for
/// pulsed one-qubit gates, p2q for CNOT), then T1/T2 damping on every
/// target for the gate's duration, then the drift phase if the gate is an
/// identity on the drift target. Readout confusion acts on sampled bits.
struct NoiseModel {
    std::string name = "custom";
    CoherenceTimes default_times;
    std::map<std::string, CoherenceTimes> qubit_times;
    double p1q = 0.0;
    double p2q = 0.0;
    /// Apply p1q to I and U_PHASE as well. Off by default: an identity is a
    /// wait and U_PHASE a frame change, neither drives the qubit.
    bool depolarize_idle_gates = false;
    ReadoutModel readout = ReadoutModel::ideal();
    std::optional<CoherentDrift> drift;
    GateDurations durations;

    const CoherenceTimes &times(const std::string &qubit) const;

    /// Throws qcb::Error if any invariant is violated (probabilities outside
    /// [0,1], T2 > 2 T1, non-positive times, negative durations, t_osc <= 0).
    void validate() const;

    /// Noise-free model with default gate durations.
    static NoiseModel ideal();
    /// T1=T2=40us, p1q=0.002, p2q=0.03, eps0=0.03, eps1=0.06, t_osc=10us on
    /// Q0, identity 90ns, U_PHASE 0ns, CNOT 300ns.
    static NoiseModel ibmqx5_2018();
};

/// Amplitude damping (gamma = 1 - exp(-t/T1)) composed with pure dephasing
/// so that coherences decay as exp(-t/T2). Infinite times disable the
/// corresponding process.
KrausChannel damping_channel(double duration_ns, double t1_us, double t2_us);

/// With probability p applies a uniformly random non-identity Pauli on
/// `arity` (1 or 2) qubits.
KrausChannel depolarizing_channel(double p, std::size_t arity);

/// diag(1, exp(i pi t / t_osc)).
Matrix drift_phase(double duration_ns, const CoherentDrift &drift);

/// diag(1, exp(-i pi t / t_osc)); undoes drift_phase for the same elapsed time.
Matrix correction_gate(double elapsed_ns, const CoherentDrift &drift);

/// Correction angle -pi t / t_osc for an elapsed idle time.
double correction_angle(double elapsed_ns, double t_osc_us);

/// JSON noise document (see docs in README). Unknown keys are rejected.
NoiseModel parse_noise(std::string_view json_text);
NoiseModel load_noise(const std::string &path);
/// A bundled pack name ("ibmqx5-2018", "ideal") or a file path.
NoiseModel resolve_noise(const std::string &name_or_path);

}  // namespace qcb
