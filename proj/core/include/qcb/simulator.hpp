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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qcb/circuit.hpp"
#include "qcb/distribution.hpp"
#include "qcb/noise.hpp"
#include "qcb/state.hpp"

namespace qcb {

struct SimOptions {
    /// Largest register the exact density-matrix backend accepts (2^(2n)
    /// complex entries).
    std::size_t density_qubit_cap = 12;
    std::size_t trajectory_qubit_cap = 20;
    /// Density backend only: start qubits lazily at first use and trace them
    /// out after their last gate unless they are measured. Off by default.
    bool retire_idle_qubits = false;
    /// Worker threads for trajectories; 0 picks hardware concurrency. The
    /// result does not depend on this value.
    unsigned threads = 0;
};

/// Exact evolution from |0...0>. MEASURE gates are left for
/// measurement_distribution; BARRIER is a no-op. Throws qcb::CapacityError
/// when the register (or, with retirement, the peak live register) exceeds
/// the density cap.
MixedState evolve_density(const Circuit &circuit, const NoiseModel &noise, const SimOptions &options = {});

/// Monte-Carlo Kraus trajectories. Each shot evolves a pure state with its
/// own Rng(derive_seed(seed, shot)); per channel one operator is drawn with
/// probability ||K psi||^2, the final state is sampled in the computational
/// basis and readout flips are applied qubit by qubit in measurement order.
CountsTable run_trajectories(const Circuit &circuit, const NoiseModel &noise, std::uint64_t shots,
                             std::uint64_t seed, const SimOptions &options = {});

/// Computational-basis distribution of `measured` (bit i of each outcome
/// string is measured[i]) after per-qubit readout confusion.
Distribution measurement_distribution(const MixedState &state, std::span<const std::string> measured,
                                      const ReadoutModel &readout);

/// evolve_density followed by measurement_distribution over the circuit's
/// measured qubits.
Distribution exact_distribution(const Circuit &circuit, const NoiseModel &noise, const SimOptions &options = {});

}  // namespace qcb
