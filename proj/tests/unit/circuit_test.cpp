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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qcb/circuit.hpp"
#include "qcb/error.hpp"

namespace qcb {
namespace {

const GateDurations kDur;

Matrix swap_matrix() {
    return Matrix(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
}

TEST(GateMatrix, PaulisAndHadamard) {
    const Matrix x = gate_matrix(GateKind::X);
    const Matrix z = gate_matrix(GateKind::Z);
    const Matrix y = gate_matrix(GateKind::Y);
    EXPECT_TRUE((x * z).approx_equal(y * cplx(0.0, -1.0), 1e-15));
    const Matrix h = gate_matrix(GateKind::H);
    EXPECT_TRUE((h * x * h).approx_equal(z, 1e-15));
    for (auto k : {GateKind::I, GateKind::X, GateKind::Y, GateKind::Z, GateKind::H, GateKind::CNOT}) {
        EXPECT_TRUE(gate_matrix(k).is_unitary(1e-15)) << to_string(k);
    }
    EXPECT_THROW(gate_matrix(GateKind::MEASURE), Error);
}

TEST(GateMatrix, PhaseGate) {
    const Matrix u = gate_matrix(GateKind::U_PHASE, std::numbers::pi / 2);
    EXPECT_NEAR(std::abs(u(1, 1) - cplx(0.0, 1.0)), 0.0, 1e-15);
    EXPECT_TRUE(gate_matrix(GateKind::U_PHASE, std::numbers::pi).approx_equal(gate_matrix(GateKind::Z), 1e-15));
}

TEST(GateMatrix, CnotControlIsHighBit) {
    const Matrix c = gate_matrix(GateKind::CNOT);
    EXPECT_EQ(c(3, 2), cplx(1.0));
    EXPECT_EQ(c(2, 3), cplx(1.0));
    EXPECT_EQ(c(1, 1), cplx(1.0));
}

TEST(DirectedCnot, ReversedOrientationIsHWrapped) {
    const auto native = directed_cnot("a", "b", CnotDirection::Forward, kDur);
    EXPECT_EQ(native.size(), 1u);
    const auto wrapped = directed_cnot("a", "b", CnotDirection::Backward, kDur);
    EXPECT_EQ(wrapped.size(), 5u);
    EXPECT_EQ(wrapped[2].targets, (std::vector<std::string>{"b", "a"}));
    const std::vector<std::string> q{"a", "b"};
    EXPECT_TRUE(circuit_unitary(wrapped, q).approx_equal(gate_matrix(GateKind::CNOT), 1e-12));
}

TEST(DecomposeSwap, EveryOrientationIsSwap) {
    const std::vector<std::string> q{"a", "b"};
    for (auto dir : {CnotDirection::Forward, CnotDirection::Backward, CnotDirection::Both}) {
        const auto gates = decompose_swap("a", "b", dir, kDur);
        EXPECT_TRUE(circuit_unitary(gates, q).approx_equal(swap_matrix(), 1e-12));
        std::size_t cnots = 0;
        for (const auto &g : gates) {
            if (g.kind == GateKind::CNOT) {
                ++cnots;
                if (dir == CnotDirection::Forward) {
                    EXPECT_EQ(g.targets.front(), "a");
                }
                if (dir == CnotDirection::Backward) {
                    EXPECT_EQ(g.targets.front(), "b");
                }
            }
        }
        EXPECT_EQ(cnots, 3u);
    }
}

TEST(IdentityTrain, LengthAndDuration) {
    const auto train = identity_train(11, "q", 90.0);
    ASSERT_EQ(train.size(), 11u);
    const Circuit c = Circuit::from_gates(train);
    EXPECT_DOUBLE_EQ(c.total_duration_ns(), 990.0);
    EXPECT_TRUE(identity_train(0, "q", 90.0).empty());
}

TEST(Circuit, Validation) {
    EXPECT_THROW(Circuit({"a"}, {Gate::single(GateKind::X, "b", 0.0)}), Error);
    EXPECT_THROW(Circuit({"a"}, {Gate::cnot("a", "a", 0.0)}), Error);
    EXPECT_THROW(Circuit({"a"}, {Gate::phase("a", std::nan(""), 0.0)}), Error);
    EXPECT_THROW(Circuit({"a"}, {Gate::single(GateKind::X, "a", -1.0)}), Error);
    EXPECT_THROW(Circuit({"a"}, {Gate::measure("a"), Gate::single(GateKind::X, "a", 0.0)}), Error);
}

TEST(Circuit, FromGatesOrdersByFirstUse) {
    const Circuit c = Circuit::from_gates(
        {Gate::single(GateKind::H, "q5", 0.0), Gate::cnot("q5", "q2", 0.0), Gate::measure("q2"), Gate::measure("q5")});
    EXPECT_EQ(c.qubits(), (std::vector<std::string>{"q5", "q2"}));
    EXPECT_EQ(c.measured_qubits(), (std::vector<std::string>{"q2", "q5"}));
}

TEST(GateDurations, FallbacksAndNames) {
    GateDurations d;
    EXPECT_DOUBLE_EQ(d.of(GateKind::H), 90.0);
    EXPECT_DOUBLE_EQ(d.of(GateKind::U_PHASE), 0.0);
    EXPECT_DOUBLE_EQ(d.of(GateKind::CNOT), 300.0);
    EXPECT_DOUBLE_EQ(d.of(GateKind::MEASURE), 0.0);
    EXPECT_EQ(gate_kind_from_string("U_PHASE"), GateKind::U_PHASE);
    EXPECT_THROW(gate_kind_from_string("T"), Error);
}

}  // namespace
}  // namespace qcb
