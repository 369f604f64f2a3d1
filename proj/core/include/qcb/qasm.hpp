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

#include <string>

#include "qcb/circuit.hpp"

namespace qcb {

/// OpenQASM 2.0 text for `circuit`.
///
/// One `qreg q[n]` and one `creg c[n]` with n = circuit.qubits().size();
/// q[i] is circuit.qubits()[i] and the k-th MEASURE writes c[k]. Gate map:
/// I->id, X->x, Y->y, Z->z, H->h, U_PHASE(phi)->u1(phi), CNOT->cx,
/// BARRIER->barrier. Measurements are emitted after all other gates. Output
/// is byte-deterministic; angles are printed with 17 significant digits.
std::string export_qasm(const Circuit &circuit);

}  // namespace qcb
