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

#include "qcb/protocols.hpp"

#include <json.hpp>

#include <cmath>
#include <set>

#include "bundled.hpp"
#include "qcb/error.hpp"
#include "qcb/rng.hpp"

namespace qcb {

using json = nlohmann::json;

std::string_view to_string(Protocol p) {
    switch (p) {
    case Protocol::Sdc:
        return "sdc";
    case Protocol::Bb84Single:
        return "bb84-single";
    case Protocol::Bb84DualRail:
        return "bb84-dualrail";
    }
    return "?";
}

std::string_view to_string(Backend b) {
    return b == Backend::Density ? "density" : "trajectory";
}

Protocol protocol_from_string(std::string_view s) {
    if (s == "sdc") {
        return Protocol::Sdc;
    }
    if (s == "bb84-single" || s == "bb84") {
        return Protocol::Bb84Single;
    }
    if (s == "bb84-dualrail") {
        return Protocol::Bb84DualRail;
    }
    throw Error("unknown protocol '" + std::string(s) + "' (expected sdc, bb84-single or bb84-dualrail)");
}

Backend backend_from_string(std::string_view s) {
    if (s == "density") {
        return Backend::Density;
    }
    if (s == "trajectory") {
        return Backend::Trajectory;
    }
    throw Error("unknown backend '" + std::string(s) + "' (expected density or trajectory)");
}

QberAggregate aggregate_from_string(std::string_view s) {
    if (s == "mean") {
        return QberAggregate::Mean;
    }
    if (s == "accepted-weighted") {
        return QberAggregate::AcceptedWeighted;
    }
    throw Error("unknown aggregate '" + std::string(s) + "' (expected mean or accepted-weighted)");
}

std::string SdcInput::label() const {
    return std::string{static_cast<char>('0' + a1), static_cast<char>('0' + a2)};
}

const std::array<SdcInput, 4> &SdcInput::all() {
    static const std::array<SdcInput, 4> inputs{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
    return inputs;
}

std::string Bb84Symbol::label() const {
    return std::string{basis == Basis::Rectilinear ? '+' : 'x', static_cast<char>('0' + bit)};
}

const std::array<Bb84Symbol, 4> &Bb84Symbol::all() {
    static const std::array<Bb84Symbol, 4> symbols{
        {{0, Basis::Rectilinear}, {0, Basis::Diagonal}, {1, Basis::Rectilinear}, {1, Basis::Diagonal}}};
    return symbols;
}

void ExperimentPlan::validate() const {
    if (shots == 0) {
        throw Error("plan: shots must be >= 1");
    }
    if (!(correction_t_osc_us > 0.0)) {
        throw Error("plan: correction_t_osc_us must be positive");
    }
    if (mitigation.dual_rail != (protocol == Protocol::Bb84DualRail)) {
        throw Error("plan: the dual_rail mitigation flag must match the bb84-dualrail protocol");
    }
    if (route && route->path.empty()) {
        throw Error("plan: empty route");
    }
    if (protocol == Protocol::Sdc) {
        if (payload == stored) {
            throw Error("plan: payload and stored qubits must differ");
        }
        if (route && route->leg != Leg::Outbound) {
            throw Error("plan: SDC route must be an outbound leg");
        }
        return;
    }
    if (carrier == partner) {
        throw Error("plan: carrier and partner qubits must differ");
    }
    if (route && route->swap_count() % 2 != 0) {
        throw Error("plan: BB84 round trip needs an even SWAP count, got " + std::to_string(route->swap_count()));
    }
}

namespace {

void append(std::vector<Gate> &out, std::vector<Gate> more) {
    for (auto &g : more) {
        out.push_back(std::move(g));
    }
}

void require_nodes(const DeviceGraph &graph, std::initializer_list<const std::string *> nodes) {
    for (const auto *n : nodes) {
        if (!graph.contains(*n)) {
            throw Error("device '" + graph.name() + "' has no qubit '" + *n + "'");
        }
    }
}

double delay_ns(const ExperimentPlan &plan, const GateDurations &durations) {
    return static_cast<double>(plan.delay_gates) * durations.of(GateKind::I);
}

void append_delay(std::vector<Gate> &gates, const ExperimentPlan &plan, const std::string &q,
                  const GateDurations &durations) {
    append(gates, identity_train(plan.delay_gates, q, durations.of(GateKind::I)));
}

void append_correction(std::vector<Gate> &gates, const ExperimentPlan &plan, const std::string &q,
                       const GateDurations &durations) {
    if (plan.mitigation.phase_correction) {
        gates.push_back(Gate::phase(q, correction_angle(delay_ns(plan, durations), plan.correction_t_osc_us),
                                    durations.of(GateKind::U_PHASE)));
    }
}

std::map<std::string, std::string> base_metadata(const ExperimentPlan &plan, const std::string &cell,
                                                 std::size_t swaps) {
    return {{"protocol", std::string(to_string(plan.protocol))},
            {"cell", cell},
            {"swaps", std::to_string(swaps)},
            {"delay_gates", std::to_string(plan.delay_gates)},
            {"phase_correction", plan.mitigation.phase_correction ? "1" : "0"}};
}

/// SWAP round trip of a BB84 plan; returns the qubit holding the payload.
std::string append_round_trip(std::vector<Gate> &gates, const ExperimentPlan &plan, const std::string &start,
                              const DeviceGraph &graph, const GateDurations &durations) {
    if (!plan.route || plan.route->swap_count() == 0) {
        return start;
    }
    if (plan.route->path.front() != start) {
        throw Error("plan: BB84 route must start at " + start);
    }
    auto chain = build_swap_chain(*plan.route, graph, durations);
    if (chain.payload_final != start) {
        throw Error("plan: BB84 route must return to " + start);
    }
    append(gates, std::move(chain.gates));
    return chain.payload_final;
}

}  // namespace

std::vector<Gate> sdc_encoding(const SdcInput &input, const std::string &alice, const GateDurations &durations) {
    if ((input.a1 != 0 && input.a1 != 1) || (input.a2 != 0 && input.a2 != 1)) {
        throw Error("sdc_encoding: input bits must be 0 or 1");
    }
    const GateKind first = input.a1 ? GateKind::Z : GateKind::I;
    const GateKind second = input.a2 ? GateKind::X : GateKind::I;
    return {Gate::single(first, alice, durations.of(first)), Gate::single(second, alice, durations.of(second))};
}

Circuit build_sdc_circuit(const ExperimentPlan &plan, const SdcInput &input, const DeviceGraph &graph,
                          const GateDurations &durations) {
    plan.validate();
    if (plan.protocol != Protocol::Sdc) {
        throw Error("build_sdc_circuit: plan protocol is " + std::string(to_string(plan.protocol)));
    }
    const std::string payload = plan.route ? plan.route->path.front() : plan.payload;
    const std::string &stored = plan.stored;
    require_nodes(graph, {&payload, &stored});
    if (!graph.adjacent(payload, stored)) {
        throw Error("build_sdc_circuit: " + payload + " and " + stored + " are not coupled");
    }

    std::vector<Gate> gates;
    gates.push_back(Gate::single(GateKind::H, payload, durations.of(GateKind::H)));
    append(gates, device_cnot(graph, payload, stored, durations));
    append_delay(gates, plan, stored, durations);
    append_correction(gates, plan, stored, durations);

    std::string alice = payload;
    std::string back = payload;
    std::size_t swaps = 0;
    if (plan.route) {
        auto out = build_swap_chain(*plan.route, graph, durations);
        alice = out.payload_final;
        swaps += out.swap_count;
        append(gates, std::move(out.gates));
    }
    append(gates, sdc_encoding(input, alice, durations));
    if (plan.route) {
        auto ret = build_swap_chain(plan_return(graph, *plan.route, stored, plan.route->return_path), graph, durations);
        back = ret.payload_final;
        swaps += ret.swap_count;
        append(gates, std::move(ret.gates));
    }

    append(gates, device_cnot(graph, back, stored, durations));
    gates.push_back(Gate::single(GateKind::H, back, durations.of(GateKind::H)));
    gates.push_back(Gate::measure(back));
    gates.push_back(Gate::measure(stored));

    auto metadata = base_metadata(plan, input.label(), swaps);
    metadata["alice"] = alice;
    return Circuit::from_gates(std::move(gates), std::move(metadata));
}

std::vector<Gate> bb84_encode_single(const Bb84Symbol &sym, const std::string &carrier,
                                     const GateDurations &durations) {
    if (sym.bit != 0 && sym.bit != 1) {
        throw Error("bb84_encode_single: key bit must be 0 or 1");
    }
    const GateKind flip = sym.bit ? GateKind::X : GateKind::I;
    const GateKind rotate = sym.basis == Basis::Diagonal ? GateKind::H : GateKind::I;
    return {Gate::single(flip, carrier, durations.of(flip)), Gate::single(rotate, carrier, durations.of(rotate))};
}

Circuit build_bb84_single(const ExperimentPlan &plan, const Bb84Symbol &sym, const DeviceGraph &graph,
                          const GateDurations &durations) {
    plan.validate();
    if (plan.protocol != Protocol::Bb84Single) {
        throw Error("build_bb84_single: plan protocol is " + std::string(to_string(plan.protocol)));
    }
    const std::string &carrier = plan.carrier;
    require_nodes(graph, {&carrier});

    std::vector<Gate> gates = bb84_encode_single(sym, carrier, durations);
    append_delay(gates, plan, carrier, durations);
    append_correction(gates, plan, carrier, durations);
    const std::string end = append_round_trip(gates, plan, carrier, graph, durations);
    const GateKind rotate = sym.basis == Basis::Diagonal ? GateKind::H : GateKind::I;
    gates.push_back(Gate::single(rotate, end, durations.of(rotate)));
    gates.push_back(Gate::measure(end));
    return Circuit::from_gates(std::move(gates),
                               base_metadata(plan, sym.label(), plan.route ? plan.route->swap_count() : 0));
}

std::vector<Gate> bb84_encode_dualrail(const Bb84Symbol &sym, const std::string &rail0, const std::string &rail1,
                                       const DeviceGraph &graph, const GateDurations &durations) {
    if (sym.bit != 0 && sym.bit != 1) {
        throw Error("bb84_encode_dualrail: key bit must be 0 or 1");
    }
    std::vector<Gate> gates{Gate::single(GateKind::X, sym.bit ? rail1 : rail0, durations.of(GateKind::X))};
    if (sym.basis == Basis::Diagonal) {
        append(gates, device_cnot(graph, rail0, rail1, durations));
        gates.push_back(Gate::single(GateKind::H, rail0, durations.of(GateKind::H)));
        append(gates, device_cnot(graph, rail0, rail1, durations));
        gates.push_back(Gate::single(GateKind::Z, rail0, durations.of(GateKind::Z)));
    }
    return gates;
}

std::vector<Gate> bb84_decode_dualrail(const Bb84Symbol &sym, const std::string &rail0, const std::string &rail1,
                                       const DeviceGraph &graph, const GateDurations &durations) {
    std::vector<Gate> gates;
    if (sym.basis == Basis::Diagonal) {
        gates.push_back(Gate::single(GateKind::Z, rail0, durations.of(GateKind::Z)));
        append(gates, device_cnot(graph, rail0, rail1, durations));
        gates.push_back(Gate::single(GateKind::H, rail0, durations.of(GateKind::H)));
        append(gates, device_cnot(graph, rail0, rail1, durations));
    }
    return gates;
}

Circuit build_bb84_dualrail(const ExperimentPlan &plan, const Bb84Symbol &sym, const DeviceGraph &graph,
                            const GateDurations &durations) {
    plan.validate();
    if (plan.protocol != Protocol::Bb84DualRail) {
        throw Error("build_bb84_dualrail: plan protocol is " + std::string(to_string(plan.protocol)));
    }
    const std::string &rail0 = plan.carrier;
    const std::string &rail1 = plan.partner;
    require_nodes(graph, {&rail0, &rail1});
    if (!graph.adjacent(rail0, rail1)) {
        throw Error("build_bb84_dualrail: rails " + rail0 + " and " + rail1 + " are not coupled");
    }

    std::vector<Gate> gates = bb84_encode_dualrail(sym, rail0, rail1, graph, durations);
    append_delay(gates, plan, rail0, durations);
    append_delay(gates, plan, rail1, durations);
    append_correction(gates, plan, rail0, durations);
    if (plan.route && plan.route->swap_count() > 0) {
        const auto &path = plan.route->path;
        if (path.front() != rail0 || path.back() != rail0) {
            throw Error("plan: dual-rail route must start and end at " + rail0);
        }
        for (std::size_t i = 1; i < path.size(); ++i) {
            if (!(path[i] == rail0 || path[i] == rail1) || path[i] == path[i - 1]) {
                throw Error("plan: dual-rail route must alternate between " + rail0 + " and " + rail1);
            }
        }
        append(gates, build_swap_chain(*plan.route, graph, durations).gates);
    }
    append(gates, bb84_decode_dualrail(sym, rail0, rail1, graph, durations));
    gates.push_back(Gate::measure(rail0));
    gates.push_back(Gate::measure(rail1));
    return Circuit(std::vector<std::string>{rail0, rail1}, std::move(gates),
                   base_metadata(plan, sym.label(), plan.route ? plan.route->swap_count() : 0));
}

PostSelectionResult postselect_dualrail(const CountsTable &counts) {
    PostSelectionResult r;
    r.counts.shots = counts.shots;
    for (const auto &[outcome, n] : counts.counts) {
        if (outcome.size() != 2 || (outcome.find_first_not_of("01") != std::string::npos)) {
            throw Error("postselect_dualrail: outcome '" + outcome + "' is not a two-rail bitstring");
        }
        if ((outcome == "01" || outcome == "10") && n > 0) {
            r.counts.counts[outcome] = n;
        }
    }
    const std::uint64_t accepted = r.counts.counted();
    if (accepted == 0 || counts.shots == 0) {
        throw Error("postselect_dualrail: no accepted shots, QBER undefined");
    }
    r.accepted_fraction = static_cast<double>(accepted) / static_cast<double>(counts.shots);
    return r;
}

CountsTable dualrail_logical(const CountsTable &accepted) {
    CountsTable out;
    out.shots = accepted.shots;
    for (const auto &[outcome, n] : accepted.counts) {
        if (outcome == "10") {
            out.counts["0"] += n;
        } else if (outcome == "01") {
            out.counts["1"] += n;
        } else {
            throw Error("dualrail_logical: outcome '" + outcome + "' is outside the logical subspace");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

std::size_t swaps_of(double value) {
    if (value < 0.0 || value != std::floor(value)) {
        throw Error("sweep: SWAP count must be a non-negative integer");
    }
    return static_cast<std::size_t>(value);
}

std::size_t delay_gates_of(double delay_us, const GateDurations &durations) {
    const double tau = durations.of(GateKind::I);
    if (!(tau > 0.0)) {
        throw Error("sweep: identity gate duration must be positive for delay sweeps");
    }
    if (!(delay_us >= 0.0)) {
        throw Error("sweep: delay must be non-negative");
    }
    return static_cast<std::size_t>(std::llround(delay_us * 1000.0 / tau));
}

struct CellRun {
    Distribution dist;
    std::optional<CountsTable> counts;
};

CellRun run_cell(const Circuit &circuit, const NoiseModel &noise, const RunSettings &settings, std::uint64_t shots,
                 std::uint64_t seed) {
    if (settings.backend == Backend::Density) {
        return {exact_distribution(circuit, noise, settings.sim), std::nullopt};
    }
    auto counts = run_trajectories(circuit, noise, shots, seed, settings.sim);
    return {counts.to_distribution(), std::move(counts)};
}

std::uint64_t cell_seed(std::uint64_t seed, std::size_t point, std::size_t cell) {
    return Rng::derive_seed(Rng::derive_seed(seed, point), cell);
}

double x_for(SweepAxis axis, std::size_t swaps, std::size_t delay_gates, const GateDurations &durations) {
    if (axis == SweepAxis::Swaps) {
        return static_cast<double>(swaps);
    }
    return static_cast<double>(delay_gates) * durations.of(GateKind::I) * 1e-3;
}

}  // namespace

ExperimentPlan sdc_point_plan(const ExperimentPlan &base, SweepAxis axis, double value,
                              const GateDurations &durations) {
    ExperimentPlan plan = base;
    if (axis == SweepAxis::Delay) {
        plan.delay_gates = delay_gates_of(value, durations);
        return plan;
    }
    const std::size_t swaps = swaps_of(value);
    if (swaps % 2 != 0) {
        throw Error("sweep: SDC needs an even SWAP count (outbound plus return), got " + std::to_string(swaps));
    }
    if (swaps == 0) {
        if (plan.route) {
            plan.route->path.resize(1);
        }
        return plan;
    }
    if (!base.route) {
        throw Error("sweep: a route is required for nonzero SWAP counts");
    }
    const std::size_t hops = swaps / 2;
    if (hops >= base.route->path.size()) {
        throw Error("sweep: route has only " + std::to_string(base.route->path.size() - 1) + " hops, " +
                    std::to_string(swaps) + " SWAPs requested");
    }
    plan.route->path.resize(hops + 1);
    return plan;
}

ExperimentPlan bb84_point_plan(const ExperimentPlan &base, SweepAxis axis, double value,
                               const GateDurations &durations) {
    ExperimentPlan plan = base;
    if (axis == SweepAxis::Delay) {
        plan.delay_gates = delay_gates_of(value, durations);
        return plan;
    }
    const std::size_t swaps = swaps_of(value);
    if (swaps % 2 != 0) {
        throw Error("sweep: BB84 round trip needs an even SWAP count, got " + std::to_string(swaps));
    }
    if (swaps == 0) {
        plan.route.reset();
        return plan;
    }
    RoutePlan r;
    for (std::size_t i = 0; i <= swaps; ++i) {
        r.path.push_back(i % 2 == 0 ? base.carrier : base.partner);
    }
    plan.route = std::move(r);
    return plan;
}

std::vector<SdcPoint> run_sdc_sweep(const ExperimentPlan &base, const SweepSpec &sweep, const DeviceGraph &graph,
                                    const NoiseModel &noise, const RunSettings &settings) {
    if (sweep.values.empty()) {
        throw Error("run_sdc_sweep: empty sweep");
    }
    std::vector<std::string> labels;
    for (const auto &in : SdcInput::all()) {
        labels.push_back(in.label());
    }
    std::vector<SdcPoint> points;
    for (std::size_t pi = 0; pi < sweep.values.size(); ++pi) {
        const ExperimentPlan plan = sdc_point_plan(base, sweep.axis, sweep.values[pi], noise.durations);
        SdcPoint point;
        point.delay_gates = plan.delay_gates;
        for (std::size_t ci = 0; ci < SdcInput::all().size(); ++ci) {
            const auto &input = SdcInput::all()[ci];
            const Circuit circuit = build_sdc_circuit(plan, input, graph, noise.durations);
            point.swaps = std::stoul(circuit.metadata().at("swaps"));
            point.outputs[input.label()] = run_cell(circuit, noise, settings, plan.shots, cell_seed(plan.seed, pi, ci)).dist;
        }
        point.x = x_for(sweep.axis, point.swaps, point.delay_gates, noise.durations);
        point.mi = mutual_information_detailed(distributions_to_joint(point.outputs, labels));
        points.push_back(std::move(point));
    }
    return points;
}

Bb84Cell bb84_cell_from_counts(const Bb84Symbol &sym, const CountsTable &counts, bool dual_rail) {
    Bb84Cell cell;
    cell.label = sym.label();
    if (dual_rail) {
        const auto sel = postselect_dualrail(counts);
        cell.accepted_fraction = sel.accepted_fraction;
        cell.accepted_shots = static_cast<double>(sel.counts.counted());
        cell.qber = qber(dualrail_logical(sel.counts), sym.bit);
    } else {
        cell.accepted_shots = static_cast<double>(counts.counted());
        cell.accepted_fraction = counts.shots ? cell.accepted_shots / static_cast<double>(counts.shots) : 0.0;
        cell.qber = qber(counts, sym.bit);
    }
    return cell;
}

Bb84Point score_bb84_cells(const std::array<Bb84Cell, 4> &cells, const RunSettings &settings) {
    Bb84Point p;
    p.cells = cells;
    double sum_q = 0.0;
    double sum_wrong = 0.0;
    double sum_frac = 0.0;
    for (const auto &c : cells) {
        sum_q += c.qber;
        sum_wrong += c.qber * c.accepted_shots;
        sum_frac += c.accepted_fraction;
        p.n_accepted += c.accepted_shots;
    }
    if (settings.aggregate == QberAggregate::Mean) {
        p.q = sum_q / static_cast<double>(cells.size());
    } else {
        if (!(p.n_accepted > 0.0)) {
            throw Error("score: no accepted shots");
        }
        p.q = sum_wrong / p.n_accepted;
    }
    p.accepted_fraction = sum_frac / static_cast<double>(cells.size());
    p.l_sec_per_n = secret_key_length({1.0, p.q, settings.f_ec});
    p.l_sec = p.l_sec_per_n * p.n_accepted;
    return p;
}

std::vector<Bb84Point> run_bb84_sweep(const ExperimentPlan &base, const SweepSpec &sweep, const DeviceGraph &graph,
                                      const NoiseModel &noise, const RunSettings &settings) {
    if (sweep.values.empty()) {
        throw Error("run_bb84_sweep: empty sweep");
    }
    if (base.protocol == Protocol::Sdc) {
        throw Error("run_bb84_sweep: plan protocol is sdc");
    }
    const bool dual = base.protocol == Protocol::Bb84DualRail;
    std::vector<Bb84Point> points;
    for (std::size_t pi = 0; pi < sweep.values.size(); ++pi) {
        const ExperimentPlan plan = bb84_point_plan(base, sweep.axis, sweep.values[pi], noise.durations);
        std::array<Bb84Cell, 4> cells;
        for (std::size_t ci = 0; ci < 4; ++ci) {
            const auto &sym = Bb84Symbol::all()[ci];
            const Circuit circuit = dual ? build_bb84_dualrail(plan, sym, graph, noise.durations)
                                         : build_bb84_single(plan, sym, graph, noise.durations);
            const CellRun run = run_cell(circuit, noise, settings, plan.shots, cell_seed(plan.seed, pi, ci));
            if (run.counts) {
                cells[ci] = bb84_cell_from_counts(sym, *run.counts, dual);
                continue;
            }
            Bb84Cell &cell = cells[ci];
            cell.label = sym.label();
            const std::string right = dual ? (sym.bit ? "01" : "10") : std::string(1, static_cast<char>('0' + sym.bit));
            const std::string wrong = dual ? (sym.bit ? "10" : "01") : std::string(1, static_cast<char>('1' - sym.bit));
            const double accepted = run.dist.at(right) + run.dist.at(wrong);
            if (!(accepted > 0.0)) {
                throw Error("run_bb84_sweep: cell " + cell.label + " has no accepted probability");
            }
            cell.accepted_fraction = dual ? accepted : 1.0;
            cell.qber = run.dist.at(wrong) / accepted;
            cell.accepted_shots = cell.accepted_fraction * static_cast<double>(plan.shots);
        }
        Bb84Point point = score_bb84_cells(cells, settings);
        point.delay_gates = plan.delay_gates;
        point.swaps = plan.route ? plan.route->swap_count() : 0;
        point.x = x_for(sweep.axis, point.swaps, point.delay_gates, noise.durations);
        points.push_back(std::move(point));
    }
    return points;
}

// ---------------------------------------------------------------------------
// Plan documents

PlanFile parse_plan(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("plan document: ") + e.what(), e.byte);
    }
    if (!doc.is_object()) {
        throw Error("plan document: top level must be an object");
    }
    static const std::set<std::string> known{"protocol", "device",  "noise",   "route",   "sweep",
                                             "delay_gates", "phase_correction", "correction_t_osc_us",
                                             "shots",   "seed",    "payload", "stored",  "carrier",
                                             "partner", "backend", "aggregate", "retire_idle_qubits"};
    for (const auto &[key, _] : doc.items()) {
        if (!known.count(key)) {
            throw Error("plan document: unknown key '" + key + "'");
        }
    }

    PlanFile f;
    try {
        ExperimentPlan &p = f.plan;
        p.protocol = protocol_from_string(doc.value("protocol", std::string("sdc")));
        p.mitigation.dual_rail = p.protocol == Protocol::Bb84DualRail;
        p.mitigation.phase_correction = doc.value("phase_correction", false);
        p.correction_t_osc_us = doc.value("correction_t_osc_us", p.correction_t_osc_us);
        p.delay_gates = doc.value("delay_gates", std::size_t{0});
        p.shots = doc.value("shots", p.shots);
        p.seed = doc.value("seed", p.seed);
        p.payload = doc.value("payload", p.payload);
        p.stored = doc.value("stored", p.stored);
        p.carrier = doc.value("carrier", p.carrier);
        p.partner = doc.value("partner", p.partner);
        f.pair_given = doc.contains("carrier") || doc.contains("partner");
        if (doc.contains("device")) {
            f.device = doc.at("device").get<std::string>();
        }
        if (doc.contains("noise")) {
            f.noise = doc.at("noise").get<std::string>();
        }
        if (doc.contains("route")) {
            const auto &r = doc.at("route");
            if (r.is_string()) {
                f.route_name = r.get<std::string>();
            } else {
                for (const auto &[key, _] : r.items()) {
                    if (key != "path" && key != "return") {
                        throw Error("plan document: unknown route key '" + key + "'");
                    }
                }
                RoutePlan route;
                route.path = r.at("path").get<std::vector<std::string>>();
                const std::string ret = r.value("return", std::string("same"));
                if (ret != "same" && ret != "alternate") {
                    throw Error("plan document: route return must be \"same\" or \"alternate\"");
                }
                route.return_path = ret == "same" ? ReturnKind::Same : ReturnKind::Alternate;
                p.route = std::move(route);
            }
        }
        if (doc.contains("sweep")) {
            const auto &s = doc.at("sweep");
            if (!s.is_object() || s.size() != 1 || !(s.contains("swaps") || s.contains("delay"))) {
                throw Error("plan document: sweep must be {\"swaps\": ...} or {\"delay\": ...}");
            }
            const bool swaps = s.contains("swaps");
            f.sweep = parse_sweep(s.begin().value().get<std::string>(), swaps ? SweepAxis::Swaps : SweepAxis::Delay);
        }
        if (doc.contains("backend")) {
            f.backend = backend_from_string(doc.at("backend").get<std::string>());
        }
        if (doc.contains("aggregate")) {
            f.aggregate = aggregate_from_string(doc.at("aggregate").get<std::string>());
        }
        if (doc.contains("retire_idle_qubits")) {
            f.retire_idle_qubits = doc.at("retire_idle_qubits").get<bool>();
        }
    } catch (const json::exception &e) {
        throw Error(std::string("plan document: ") + e.what());
    }
    f.plan.validate();
    return f;
}

PlanFile load_plan(const std::string &path) {
    return parse_plan(detail::read_text_file(path));
}

}  // namespace qcb
