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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcb/circuit.hpp"
#include "qcb/distribution.hpp"
#include "qcb/metrics.hpp"
#include "qcb/noise.hpp"
#include "qcb/simulator.hpp"
#include "qcb/sweep.hpp"
#include "qcb/topology.hpp"

namespace qcb {

enum class Protocol { Sdc, Bb84Single, Bb84DualRail };
enum class Backend { Density, Trajectory };
enum class Basis { Rectilinear, Diagonal };
enum class QberAggregate { Mean, AcceptedWeighted };

std::string_view to_string(Protocol p);
std::string_view to_string(Backend b);
Protocol protocol_from_string(std::string_view s);
Backend backend_from_string(std::string_view s);
QberAggregate aggregate_from_string(std::string_view s);

/// Alice's two classical bits.
struct SdcInput {
    int a1 = 0;
    int a2 = 0;

    /// "a1a2", e.g. "10".
    std::string label() const;
    /// 00, 10, 01, 11.
    static const std::array<SdcInput, 4> &all();
    bool operator==(const SdcInput &) const = default;
};

struct Bb84Symbol {
    int bit = 0;
    Basis basis = Basis::Rectilinear;

    /// "+0", "x0", "+1", "x1".
    std::string label() const;
    /// (+,0), (x,0), (+,1), (x,1).
    static const std::array<Bb84Symbol, 4> &all();
    bool operator==(const Bb84Symbol &) const = default;
};

struct Mitigation {
    bool phase_correction = false;
    bool dual_rail = false;
};

/// One experiment configuration. For SDC, `route` is the outbound path from
/// the payload qubit to Alice and `route->return_path` selects the way back.
/// For BB84, `route` alternates between the carrier and its partner; its SWAP
/// count must be even.
struct ExperimentPlan {
    Protocol protocol = Protocol::Sdc;
    std::optional<RoutePlan> route;
    std::size_t delay_gates = 0;
    Mitigation mitigation;
    /// Oscillation period assumed by the phase correction.
    double correction_t_osc_us = 10.0;
    std::uint64_t shots = 8192;
    std::uint64_t seed = 1;
    /// SDC: payload qubit travels to Alice; stored qubit stays with Bob.
    std::string payload = "Q1";
    std::string stored = "Q0";
    /// BB84: carrier qubit and its SWAP partner; the dual-rail pair is
    /// (carrier, partner).
    std::string carrier = "Q0";
    std::string partner = "Q1";

    /// Throws qcb::Error on inconsistent fields.
    void validate() const;
};

/// Z-or-I then X-or-I on Alice's qubit: 00 -> II, 10 -> ZI, 01 -> IX, 11 -> ZX.
std::vector<Gate> sdc_encoding(const SdcInput &input, const std::string &alice, const GateDurations &durations);

/// Bell preparation, delay train, optional phase correction, outbound SWAPs,
/// encoding, return SWAPs and Bell measurement. Outcome bit 0 is b1 (payload),
/// bit 1 is b2 (stored qubit).
Circuit build_sdc_circuit(const ExperimentPlan &plan, const SdcInput &input, const DeviceGraph &graph,
                          const GateDurations &durations);

/// I-or-X then I-or-H on the carrier.
std::vector<Gate> bb84_encode_single(const Bb84Symbol &sym, const std::string &carrier,
                                     const GateDurations &durations);

/// Encode, delay train, SWAP round trip, Bob's rotation (I or H), measure.
Circuit build_bb84_single(const ExperimentPlan &plan, const Bb84Symbol &sym, const DeviceGraph &graph,
                          const GateDurations &durations);

/// Prepares |1 0> (bit 0) or |0 1> (bit 1) on (rail0, rail1) for basis +,
/// and (|01> + (-1)^bit |10>)/sqrt2 for basis x.
std::vector<Gate> bb84_encode_dualrail(const Bb84Symbol &sym, const std::string &rail0, const std::string &rail1,
                                       const DeviceGraph &graph, const GateDurations &durations);

/// Inverse of the basis-x preparation (empty for basis +).
std::vector<Gate> bb84_decode_dualrail(const Bb84Symbol &sym, const std::string &rail0, const std::string &rail1,
                                       const DeviceGraph &graph, const GateDurations &durations);

/// Dual-rail encode, delay trains on both rails, SWAP round trip, decode,
/// measure rail0 then rail1.
Circuit build_bb84_dualrail(const ExperimentPlan &plan, const Bb84Symbol &sym, const DeviceGraph &graph,
                            const GateDurations &durations);

struct PostSelectionResult {
    CountsTable counts;
    double accepted_fraction = 0.0;
};

/// Keeps "01" and "10". Throws qcb::Error when nothing is accepted.
PostSelectionResult postselect_dualrail(const CountsTable &counts);

/// Maps accepted dual-rail outcomes to logical bits: "10" -> "0", "01" -> "1".
CountsTable dualrail_logical(const CountsTable &accepted);

struct RunSettings {
    Backend backend = Backend::Density;
    SimOptions sim;
    QberAggregate aggregate = QberAggregate::Mean;
    double f_ec = 1.15;
};

struct SdcPoint {
    double x = 0.0;  ///< emitted SWAPs, or delay in microseconds
    std::size_t swaps = 0;
    std::size_t delay_gates = 0;
    /// Output distribution per input label.
    std::map<std::string, Distribution> outputs;
    MutualInformation mi;
};

struct Bb84Cell {
    std::string label;
    double qber = 0.0;
    double accepted_fraction = 1.0;
    double accepted_shots = 0.0;
};

struct Bb84Point {
    double x = 0.0;
    std::size_t swaps = 0;
    std::size_t delay_gates = 0;
    std::array<Bb84Cell, 4> cells;
    double q = 0.0;
    double n_accepted = 0.0;
    double l_sec = 0.0;
    double l_sec_per_n = 0.0;
    double accepted_fraction = 1.0;
};

/// Plan for one SDC sweep point: the first swaps/2 hops of `base.route`
/// (odd counts are rejected), or `base` with the delay replaced.
ExperimentPlan sdc_point_plan(const ExperimentPlan &base, SweepAxis axis, double value, const GateDurations &durations);

/// Plan for one BB84 sweep point: `value` SWAPs alternating between carrier
/// and partner, or the delay replaced.
ExperimentPlan bb84_point_plan(const ExperimentPlan &base, SweepAxis axis, double value,
                               const GateDurations &durations);

/// All four inputs per point with the plan's shot count. The density backend
/// yields exact distributions; the trajectory backend samples shots with seed
/// derive_seed(derive_seed(plan.seed, point), cell).
std::vector<SdcPoint> run_sdc_sweep(const ExperimentPlan &base, const SweepSpec &sweep, const DeviceGraph &graph,
                                    const NoiseModel &noise, const RunSettings &settings);

std::vector<Bb84Point> run_bb84_sweep(const ExperimentPlan &base, const SweepSpec &sweep, const DeviceGraph &graph,
                                      const NoiseModel &noise, const RunSettings &settings);

/// QBER of one cell from measured counts; dual-rail counts are post-selected
/// first.
Bb84Cell bb84_cell_from_counts(const Bb84Symbol &sym, const CountsTable &counts, bool dual_rail);

/// Aggregate QBER and key length of four cells.
Bb84Point score_bb84_cells(const std::array<Bb84Cell, 4> &cells, const RunSettings &settings);

/// Plan document: protocol, device, noise, route, sweep, mitigation, shots,
/// seed, backend and qubit roles.
struct PlanFile {
    ExperimentPlan plan;
    std::optional<std::string> device;
    std::optional<std::string> noise;
    std::optional<std::string> route_name;
    std::optional<SweepSpec> sweep;
    std::optional<Backend> backend;
    std::optional<QberAggregate> aggregate;
    std::optional<bool> retire_idle_qubits;
    /// True when the document names the BB84 carrier or partner.
    bool pair_given = false;
};

PlanFile parse_plan(std::string_view json_text);
PlanFile load_plan(const std::string &path);

}  // namespace qcb
