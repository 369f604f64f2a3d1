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

#include "qcb/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "qcb/error.hpp"
#include "qcb/state.hpp"

namespace qcb {

std::string_view to_string(GateKind kind) {
    switch (kind) {
        case GateKind::I:
            return "I";
        case GateKind::X:
            return "X";
        case GateKind::Y:
            return "Y";
        case GateKind::Z:
            return "Z";
        case GateKind::H:
            return "H";
        case GateKind::U_PHASE:
            return "U_PHASE";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::MEASURE:
            return "MEASURE";
        case GateKind::BARRIER:
            return "BARRIER";
    }
    return "?";
}

GateKind gate_kind_from_string(std::string_view name) {
    for (GateKind k : {GateKind::I, GateKind::X, GateKind::Y, GateKind::Z, GateKind::H, GateKind::U_PHASE,
                       GateKind::CNOT, GateKind::MEASURE, GateKind::BARRIER}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    throw Error("unknown gate kind '" + std::string(name) + "'");
}

bool is_unitary_kind(GateKind kind) {
    return kind != GateKind::MEASURE && kind != GateKind::BARRIER;
}

bool is_single_qubit_kind(GateKind kind) {
    return is_unitary_kind(kind) && kind != GateKind::CNOT;
}

double GateDurations::of(GateKind kind) const {
    if (auto it = ns.find(kind); it != ns.end()) {
        return it->second;
    }
    if (is_single_qubit_kind(kind)) {
        auto id = ns.find(GateKind::I);
        return id == ns.end() ? 0.0 : id->second;
    }
    return 0.0;
}

Gate Gate::single(GateKind kind, std::string q, double duration_ns) {
    if (!is_single_qubit_kind(kind)) {
        throw Error("Gate::single: not a single-qubit kind");
    }
    return Gate{kind, {std::move(q)}, duration_ns, 0.0};
}

Gate Gate::phase(std::string q, double phi, double duration_ns) {
    return Gate{GateKind::U_PHASE, {std::move(q)}, duration_ns, phi};
}

Gate Gate::cnot(std::string control, std::string target, double duration_ns) {
    return Gate{GateKind::CNOT, {std::move(control), std::move(target)}, duration_ns, 0.0};
}

Gate Gate::measure(std::string q) {
    return Gate{GateKind::MEASURE, {std::move(q)}, 0.0, 0.0};
}

Gate Gate::barrier(std::vector<std::string> qs) {
    return Gate{GateKind::BARRIER, std::move(qs), 0.0, 0.0};
}

Circuit::Circuit(std::vector<std::string> qubits, std::vector<Gate> gates, std::map<std::string, std::string> metadata)
    : qubits_(std::move(qubits)), gates_(std::move(gates)), metadata_(std::move(metadata)) {
    const QubitRegister reg(qubits_);  // rejects duplicate labels
    std::set<std::string> measured;
    for (const auto &g : gates_) {
        if (g.targets.empty()) {
            throw Error("Circuit: gate " + std::string(to_string(g.kind)) + " has no targets");
        }
        for (const auto &t : g.targets) {
            if (!reg.contains(t)) {
                throw Error("Circuit: gate targets unknown qubit '" + t + "'");
            }
        }
        if (g.kind == GateKind::CNOT && (g.targets.size() != 2 || g.targets[0] == g.targets[1])) {
            throw Error("Circuit: CNOT needs exactly two distinct targets");
        }
        if (is_single_qubit_kind(g.kind) && g.targets.size() != 1) {
            throw Error("Circuit: single-qubit gate with " + std::to_string(g.targets.size()) + " targets");
        }
        if (g.kind == GateKind::MEASURE && g.targets.size() != 1) {
            throw Error("Circuit: MEASURE takes exactly one qubit");
        }
        if (g.kind == GateKind::U_PHASE && !std::isfinite(g.phi)) {
            throw Error("Circuit: U_PHASE angle is not finite");
        }
        if (!(g.duration_ns >= 0.0)) {
            throw Error("Circuit: negative gate duration");
        }
        if (g.kind != GateKind::BARRIER) {
            for (const auto &t : g.targets) {
                if (measured.count(t)) {
                    throw Error("Circuit: qubit '" + t + "' is used after being measured");
                }
            }
        }
        if (g.kind == GateKind::MEASURE) {
            measured.insert(g.targets[0]);
        }
    }
}

Circuit Circuit::from_gates(std::vector<Gate> gates, std::map<std::string, std::string> metadata) {
    std::vector<std::string> qubits;
    for (const auto &g : gates) {
        for (const auto &t : g.targets) {
            if (std::find(qubits.begin(), qubits.end(), t) == qubits.end()) {
                qubits.push_back(t);
            }
        }
    }
    return Circuit(std::move(qubits), std::move(gates), std::move(metadata));
}

std::vector<std::string> Circuit::measured_qubits() const {
    std::vector<std::string> out;
    for (const auto &g : gates_) {
        if (g.kind == GateKind::MEASURE) {
            out.push_back(g.targets[0]);
        }
    }
    return out;
}

double Circuit::total_duration_ns() const {
    double sum = 0.0;
    for (const auto &g : gates_) {
        sum += g.duration_ns;
    }
    return sum;
}

Matrix gate_matrix(GateKind kind, double phi) {
    using namespace std::complex_literals;
    const double s = 1.0 / std::numbers::sqrt2;
    switch (kind) {
        case GateKind::I:
            return Matrix(2, 2, {1, 0, 0, 1});
        case GateKind::X:
            return Matrix(2, 2, {0, 1, 1, 0});
        case GateKind::Y:
            return Matrix(2, 2, {0, -1i, 1i, 0});
        case GateKind::Z:
            return Matrix(2, 2, {1, 0, 0, -1});
        case GateKind::H:
            return Matrix(2, 2, {s, s, s, -s});
        case GateKind::U_PHASE:
            return Matrix(2, 2, {1, 0, 0, std::polar(1.0, phi)});
        case GateKind::CNOT:
            return Matrix(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
        case GateKind::MEASURE:
        case GateKind::BARRIER:
            break;
    }
    throw Error("gate_matrix: " + std::string(to_string(kind)) + " has no unitary matrix");
}

std::vector<Gate> directed_cnot(const std::string &control, const std::string &target, CnotDirection allowed_on_pair,
                                const GateDurations &durations) {
    const double cx = durations.of(GateKind::CNOT);
    if (allowed_on_pair != CnotDirection::Backward) {
        return {Gate::cnot(control, target, cx)};
    }
    const double h = durations.of(GateKind::H);
    return {Gate::single(GateKind::H, control, h), Gate::single(GateKind::H, target, h), Gate::cnot(target, control, cx),
            Gate::single(GateKind::H, control, h), Gate::single(GateKind::H, target, h)};
}

std::vector<Gate> decompose_swap(const std::string &a, const std::string &b, CnotDirection allowed,
                                 const GateDurations &durations) {
    if (a == b) {
        throw Error("decompose_swap: qubits must differ");
    }
    // Outer CNOTs use the native orientation so only the middle one may need
    // reversing.
    const bool forward = allowed != CnotDirection::Backward;
    const std::string &c = forward ? a : b;
    const std::string &t = forward ? b : a;
    const CnotDirection rel = allowed == CnotDirection::Both ? CnotDirection::Both : CnotDirection::Forward;
    const CnotDirection middle = allowed == CnotDirection::Both ? CnotDirection::Both : CnotDirection::Backward;

    std::vector<Gate> out = directed_cnot(c, t, rel, durations);
    for (auto &g : directed_cnot(t, c, middle, durations)) {
        out.push_back(std::move(g));
    }
    for (auto &g : directed_cnot(c, t, rel, durations)) {
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Gate> identity_train(std::size_t n, const std::string &q, double tau_ns) {
    return std::vector<Gate>(n, Gate::single(GateKind::I, q, tau_ns));
}

Matrix circuit_unitary(std::span<const Gate> gates, const std::vector<std::string> &qubits) {
    const std::size_t dim = std::size_t{1} << qubits.size();
    Matrix u = Matrix::identity(dim);
    // Column j of the product is the image of basis state j.
    for (std::size_t col = 0; col < dim; ++col) {
        std::vector<cplx> amps(dim);
        amps[col] = 1.0;
        auto psi = PureState::from_amplitudes(qubits, std::move(amps));
        for (const auto &g : gates) {
            if (g.kind == GateKind::BARRIER) {
                continue;
            }
            if (g.kind == GateKind::MEASURE) {
                throw Error("circuit_unitary: circuit contains MEASURE");
            }
            apply_unitary(psi, gate_matrix(g.kind, g.phi), g.targets);
        }
        for (std::size_t row = 0; row < dim; ++row) {
            u(row, col) = psi.amplitudes()[row];
        }
    }
    return u;
}

}  // namespace qcb
