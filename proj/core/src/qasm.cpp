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

#include "qcb/qasm.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "qcb/error.hpp"

namespace qcb {

namespace {

std::string_view qasm_name(GateKind kind) {
    switch (kind) {
        case GateKind::I:
            return "id";
        case GateKind::X:
            return "x";
        case GateKind::Y:
            return "y";
        case GateKind::Z:
            return "z";
        case GateKind::H:
            return "h";
        case GateKind::U_PHASE:
            return "u1";
        case GateKind::CNOT:
            return "cx";
        case GateKind::BARRIER:
            return "barrier";
        case GateKind::MEASURE:
            return "measure";
    }
    throw Error("export_qasm: unsupported gate kind");
}

}  // namespace

std::string export_qasm(const Circuit &circuit) {
    const auto &qubits = circuit.qubits();
    const std::size_t n = std::max<std::size_t>(qubits.size(), 1);
    auto index = [&](const std::string &label) {
        return static_cast<std::size_t>(std::find(qubits.begin(), qubits.end(), label) - qubits.begin());
    };

    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out += fmt::format("qreg q[{}];\ncreg c[{}];\n", n, n);

    std::string measures;
    std::size_t next_clbit = 0;
    for (const auto &g : circuit.gates()) {
        const auto name = qasm_name(g.kind);
        if (g.kind == GateKind::MEASURE) {
            measures += fmt::format("measure q[{}] -> c[{}];\n", index(g.targets[0]), next_clbit++);
            continue;
        }
        std::string args;
        for (std::size_t i = 0; i < g.targets.size(); ++i) {
            args += fmt::format("{}q[{}]", i ? "," : "", index(g.targets[i]));
        }
        if (g.kind == GateKind::U_PHASE) {
            out += fmt::format("{}({:.17g}) {};\n", name, g.phi, args);
        } else {
            out += fmt::format("{} {};\n", name, args);
        }
    }
    return out + measures;
}

}  // namespace qcb
