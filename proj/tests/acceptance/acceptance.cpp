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


// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <fmt/core.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qcb/circuit.hpp"
#include "qcb/error.hpp"
#include "qcb/fixtures.hpp"
#include "qcb/metrics.hpp"
#include "qcb/noise.hpp"
#include "qcb/protocols.hpp"
#include "qcb/qasm.hpp"
#include "qcb/report.hpp"
#include "qcb/rng.hpp"
#include "qcb/simulator.hpp"
#include "qcb/state.hpp"
#include "qcb/sweep.hpp"
#include "qcb/topology.hpp"

namespace {

using namespace qcb;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::map<double, double> rows_of(const std::vector<ReportRow> &rows, const std::string &metric) {
    std::map<double, double> out;
    for (const auto &r : rows) {
        if (r.metric == metric) {
            out[r.x] = r.value;
        }
    }
    return out;
}

Outcome compare(const std::map<double, double> &got, const std::map<double, double> &want, double tol) {
    if (got.size() != want.size()) {
        return {false, fmt::format("expected {} points, got {}", want.size(), got.size())};
    }
    double worst = 0.0;
    for (const auto &[x, v] : want) {
        const auto it = got.find(x);
        if (it == got.end()) {
            return {false, fmt::format("missing x={}", x)};
        }
        worst = std::max(worst, std::abs(it->second - v));
    }
    return {worst <= tol, fmt::format("max deviation {:.3g}", worst)};
}

// Reference values from an independent script.
const std::map<double, double> kTable1Mi{
    {0, 1.1495030285991927},  {2, 0.42597066454035293},  {4, 0.21467444757656051},  {6, 0.12693652926698729},
    {8, 0.065866605014432311}, {10, 0.030738381388993874}, {12, 0.021822222521502344}, {14, 0.021672406824115198}};
const std::map<double, double> kTable5Rate{{0.0, 0.58205750566211112}, {1.2, 0.41896590786620247},
                                           {2.4, 0.28114116239334008}, {3.6, 0.11277528976420115},
                                           {4.8, -0.10527027752168228}, {6.0, -0.35861050107969117}};
const std::map<double, double> kTable6Rate{{0, 0.55017597258132167},
                                           {2, 0.25399023058368131},
                                           {4, -0.0032193074223170193},
                                           {6, -0.1999653370188601}};

Outcome fixture_mi() {
    const auto t0 = Clock::now();
    const auto rows = replay_fixture("table1");
    const double dt = seconds_since(t0);
    Outcome o = compare(rows_of(rows, "mutual_information"), kTable1Mi, 1e-9);
    o.pass = o.pass && dt < 1.0;
    o.detail += fmt::format(", replay {:.3f}s", dt);
    return o;
}

Outcome fixture_key_rate() {
    const auto r5 = rows_of(replay_fixture("table5"), "l_sec_per_n");
    const auto r6 = rows_of(replay_fixture("table6"), "l_sec_per_n");
    const Outcome a = compare(r5, kTable5Rate, 1e-9);
    const Outcome b = compare(r6, kTable6Rate, 1e-9);
    const bool negative = r6.count(6.0) && r6.at(6.0) < 0.0;
    const bool start = r5.count(0.0) && std::abs(r5.at(0.0) - 0.58) < 0.005;
    return {a.pass && b.pass && negative && start,
            fmt::format("delay table {}, swap table {}, rate(6 SWAPs)={:.4f}, rate(t=0)={:.4f}", a.detail, b.detail,
                        r6.count(6.0) ? r6.at(6.0) : NAN, r5.count(0.0) ? r5.at(0.0) : NAN)};
}

RoutePlan named_route(const DeviceGraph &g, const std::string &name) {
    const auto &r = g.route(name);
    return RoutePlan{r.path, Leg::Outbound, r.return_kind};
}

Outcome noiseless() {
    const auto t0 = Clock::now();
    const auto qx5 = bundled_device("ibmqx5");
    const auto qx4 = bundled_device("ibmqx4");
    const NoiseModel ideal = NoiseModel::ideal();
    RunSettings rs;
    rs.sim.retire_idle_qubits = true;
    double worst = 0.0;
    std::size_t points = 0;
    for (const auto &[name, route] : qx5.routes()) {
        ExperimentPlan plan;
        plan.route = named_route(qx5, name);
        const std::size_t max_swaps = 2 * route.path.size() - 2;
        const auto sweep = parse_sweep(fmt::format("0..{}:2", max_swaps), SweepAxis::Swaps);
        for (const auto &p : run_sdc_sweep(plan, sweep, qx5, ideal, rs)) {
            worst = std::max(worst, std::abs(p.mi.bits - 2.0));
            ++points;
        }
    }
    bool bb84_ok = true;
    for (const Protocol proto : {Protocol::Bb84Single, Protocol::Bb84DualRail}) {
        ExperimentPlan plan;
        plan.protocol = proto;
        plan.mitigation.dual_rail = proto == Protocol::Bb84DualRail;
        for (const auto &p : run_bb84_sweep(plan, parse_sweep("0..6:2", SweepAxis::Swaps), qx4, ideal, rs)) {
            bb84_ok = bb84_ok && p.q == 0.0 && std::abs(p.accepted_fraction - 1.0) < 1e-12;
        }
        for (const auto &p : run_bb84_sweep(plan, parse_sweep("0..6us:2", SweepAxis::Delay), qx4, ideal, rs)) {
            bb84_ok = bb84_ok && p.q == 0.0 && std::abs(p.accepted_fraction - 1.0) < 1e-12;
        }
    }
    const double dt = seconds_since(t0);
    return {worst <= 1e-9 && points > 0 && bb84_ok && dt < 10.0,
            fmt::format("{} SDC points, max |I-2|={:.2g}, BB84 q=0 and fraction 1: {}, {:.2f}s", points, worst,
                        bb84_ok ? "yes" : "no", dt)};
}

Circuit random_circuit(Rng &rng, std::size_t n) {
    std::vector<std::string> qs;
    for (std::size_t i = 0; i < n; ++i) {
        qs.push_back("Q" + std::to_string(i));
    }
    const std::array<GateKind, 7> kinds{GateKind::X, GateKind::Y, GateKind::Z, GateKind::H,
                                        GateKind::I, GateKind::U_PHASE, GateKind::CNOT};
    std::vector<Gate> gates;
    for (const auto &q : qs) {
        gates.push_back(Gate::single(GateKind::H, q, 90.0));
    }
    const std::size_t depth = 8 + rng.next_u64() % 12;
    for (std::size_t k = 0; k < depth; ++k) {
        const GateKind kind = kinds[rng.next_u64() % (n > 1 ? kinds.size() : kinds.size() - 1)];
        const std::string &a = qs[rng.next_u64() % n];
        if (kind == GateKind::CNOT) {
            std::string b = qs[rng.next_u64() % n];
            while (b == a) {
                b = qs[rng.next_u64() % n];
            }
            gates.push_back(Gate::cnot(a, b, 300.0));
        } else if (kind == GateKind::U_PHASE) {
            gates.push_back(Gate::phase(a, 2.0 * std::numbers::pi * rng.uniform(), 0.0));
        } else {
            gates.push_back(Gate::single(kind, a, 90.0));
        }
    }
    for (const auto &q : qs) {
        gates.push_back(Gate::measure(q));
    }
    return Circuit(qs, gates);
}

NoiseModel random_noise(Rng &rng, std::size_t n) {
    NoiseModel m;
    m.default_times = {20.0 + 60.0 * rng.uniform(), 0.0};
    m.default_times.t2_us = m.default_times.t1_us * (0.3 + 1.5 * rng.uniform());
    m.p1q = 0.02 * rng.uniform();
    m.p2q = 0.08 * rng.uniform();
    m.depolarize_idle_gates = rng.bernoulli(0.5);
    m.readout = ReadoutModel(ReadoutError{0.05 * rng.uniform(), 0.08 * rng.uniform()});
    if (rng.bernoulli(0.5)) {
        m.drift = CoherentDrift{5.0 + 10.0 * rng.uniform(), "Q" + std::to_string(rng.next_u64() % n)};
    }
    m.validate();
    return m;
}

Outcome backend_equivalence() {
    Rng rng(20260418);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const std::size_t n = 1 + rng.next_u64() % 4;
        const Circuit c = random_circuit(rng, n);
        const NoiseModel m = random_noise(rng, n);
        const Distribution exact = exact_distribution(c, m);
        const Distribution sampled = run_trajectories(c, m, 100000, 1000 + i).to_distribution();
        std::map<std::string, double> diff = exact.probs;
        for (const auto &[k, v] : sampled.probs) {
            diff[k] -= v;
        }
        double tvd = 0.0;
        for (const auto &kv : diff) {
            tvd += std::abs(kv.second);
        }
        worst = std::max(worst, 0.5 * tvd);
    }
    return {worst <= 0.01, fmt::format("10 circuits, 1e5 shots, max TVD {:.4f}", worst)};
}

Outcome drift_physics() {
    NoiseModel m;
    m.drift = CoherentDrift{10.0, "Q0"};
    const double tau = 100.0;
    m.durations.ns[GateKind::I] = tau;
    const double s = 1.0 / std::sqrt(2.0);
    const PureState psi_minus = PureState::from_amplitudes({"Q0", "Q1"}, {0.0, s, -s, 0.0});
    double worst_plain = 0.0;
    double worst_fixed = 0.0;
    for (int k = 0; k <= 40; ++k) {
        const std::size_t n = static_cast<std::size_t>(k) * 5;
        const double t_us = static_cast<double>(n) * tau / 1000.0;
        std::vector<Gate> gates{Gate::single(GateKind::H, "Q0", 0.0), Gate::cnot("Q0", "Q1", 0.0),
                                Gate::single(GateKind::X, "Q1", 0.0)};
        const auto wait = identity_train(n, "Q0", tau);
        gates.insert(gates.end(), wait.begin(), wait.end());
        const Circuit plain({"Q0", "Q1"}, gates);
        const double overlap = evolve_density(plain, m).fidelity(psi_minus);
        const double expected = std::pow(std::sin(std::numbers::pi * t_us / 20.0), 2);
        worst_plain = std::max(worst_plain, std::abs(overlap - expected));
        gates.push_back(Gate::phase("Q0", correction_angle(static_cast<double>(n) * tau, 10.0), 0.0));
        const Circuit fixed({"Q0", "Q1"}, gates);
        const double psi_plus =
            evolve_density(fixed, m).fidelity(PureState::from_amplitudes({"Q0", "Q1"}, {0.0, s, s, 0.0}));
        worst_fixed = std::max(worst_fixed, std::abs(psi_plus - 1.0));
    }
    return {worst_plain <= 1e-6 && worst_fixed <= 1e-9,
            fmt::format("0..20us: max overlap error {:.2g}, corrected fidelity error {:.2g}", worst_plain,
                        worst_fixed)};
}

// Linear interpolation of the first downward crossing of level; NaN if none.
double crossing(const std::vector<std::pair<double, double>> &curve, double level) {
    for (std::size_t i = 1; i < curve.size(); ++i) {
        const auto [x0, y0] = curve[i - 1];
        const auto [x1, y1] = curve[i];
        if (y0 >= level && y1 < level) {
            return x0 + (y0 - level) * (x1 - x0) / (y0 - y1);
        }
    }
    return NAN;
}

Outcome qualitative() {
    const auto t0 = Clock::now();
    const auto qx5 = bundled_device("ibmqx5");
    const auto qx4 = bundled_device("ibmqx4");
    const NoiseModel pack = resolve_noise("ibmqx5-2018");
    RunSettings rs;
    rs.sim.retire_idle_qubits = true;
    std::vector<std::string> notes;
    bool ok = true;

    ExperimentPlan sdc;
    sdc.shots = 8192;
    const auto delay = parse_sweep("0..6us:1", SweepAxis::Delay);
    const auto plain = run_sdc_sweep(sdc, delay, qx5, pack, rs);
    sdc.mitigation.phase_correction = true;
    const auto fixed = run_sdc_sweep(sdc, delay, qx5, pack, rs);
    std::vector<std::pair<double, double>> curve;
    for (const auto &p : plain) {
        curve.emplace_back(p.x, p.mi.bits);
    }
    const double i0 = plain.front().mi.bits;
    const double t_cross = crossing(curve, 1.0);
    const bool c1 = i0 > 1.0 && i0 <= 2.0 && t_cross >= 1.0 && t_cross <= 6.0;
    notes.push_back(fmt::format("(i) I(0)={:.4f} crosses 1 at {:.2f}us {}", i0, t_cross, c1 ? "ok" : "FAIL"));
    ok = ok && c1;

    double slack = INFINITY;
    for (std::size_t i = 0; i < plain.size(); ++i) {
        slack = std::min(slack, fixed[i].mi.bits - plain[i].mi.bits);
    }
    const bool c2 = slack >= -0.02;
    notes.push_back(fmt::format("(ii) min corrected-uncorrected {:+.4f} {}", slack, c2 ? "ok" : "FAIL"));
    ok = ok && c2;

    ExperimentPlan single;
    single.protocol = Protocol::Bb84Single;
    single.shots = 8192;
    ExperimentPlan dual = single;
    dual.protocol = Protocol::Bb84DualRail;
    dual.mitigation.dual_rail = true;
    const auto swaps = parse_sweep("0..6:2", SweepAxis::Swaps);
    const auto qs = run_bb84_sweep(single, swaps, qx4, pack, rs);
    const auto qd = run_bb84_sweep(dual, swaps, qx4, pack, rs);
    double margin = INFINITY;
    for (std::size_t i = 0; i < qs.size(); ++i) {
        margin = std::min(margin, qs[i].q + 0.01 - qd[i].q);
    }
    const bool c3 = margin >= 0.0;
    notes.push_back(fmt::format("(iii) dual-rail q below single q by at least {:+.4f} {}", margin - 0.01,
                                c3 ? "ok" : "FAIL"));
    ok = ok && c3;

    ExperimentPlan bb = single;
    bb.carrier = "Q1";
    bb.partner = "Q0";
    std::vector<std::pair<double, double>> rate;
    for (const auto &p : run_bb84_sweep(bb, parse_sweep("0..8us:1", SweepAxis::Delay), qx4, pack, rs)) {
        rate.emplace_back(p.x, p.l_sec_per_n);
    }
    const double t_zero = crossing(rate, 0.0);
    const bool c4 = t_zero >= 2.0 && t_zero <= 8.0;
    notes.push_back(fmt::format("(iv) key rate crosses zero at {:.2f}us {}", t_zero, c4 ? "ok" : "FAIL"));
    ok = ok && c4;

    const double dt = seconds_since(t0);
    ok = ok && dt < 120.0;
    std::string detail;
    for (const auto &n : notes) {
        detail += n + "; ";
    }
    return {ok, detail + fmt::format("{:.1f}s", dt)};
}

Outcome encoding_maps() {
    const GateDurations dur;
    bool ok = true;
    const std::array<std::pair<GateKind, GateKind>, 4> pairs{
        std::pair{GateKind::I, GateKind::I}, {GateKind::Z, GateKind::I}, {GateKind::I, GateKind::X},
        {GateKind::Z, GateKind::X}};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto gates = sdc_encoding(SdcInput::all()[i], "A", dur);
        ok = ok && gates.size() == 2 && gates[0].kind == pairs[i].first && gates[1].kind == pairs[i].second;
    }
    const double s = 1.0 / std::sqrt(2.0);
    const std::map<std::string, std::vector<cplx>> single{
        {"+0", {1.0, 0.0}}, {"+1", {0.0, 1.0}}, {"x0", {s, s}}, {"x1", {s, -s}}};
    const std::map<std::string, std::vector<cplx>> dual{{"+0", {0.0, 0.0, 1.0, 0.0}},
                                                        {"+1", {0.0, 1.0, 0.0, 0.0}},
                                                        {"x0", {0.0, s, s, 0.0}},
                                                        {"x1", {0.0, s, -s, 0.0}}};
    const auto qx4 = bundled_device("ibmqx4");
    double worst = 0.0;
    auto prepare = [](const std::vector<Gate> &gates, std::vector<std::string> qs) {
        PureState psi = PureState::zero(std::move(qs));
        for (const auto &g : gates) {
            apply_unitary(psi, gate_matrix(g.kind, g.phi), g.targets);
        }
        return psi;
    };
    for (const auto &sym : Bb84Symbol::all()) {
        const PureState a = prepare(bb84_encode_single(sym, "c", dur), {"c"});
        worst = std::max(worst, 1.0 - a.fidelity(PureState::from_amplitudes({"c"}, single.at(sym.label()))));
        const PureState b = prepare(bb84_encode_dualrail(sym, "Q0", "Q1", qx4, dur), {"Q0", "Q1"});
        worst = std::max(worst,
                         1.0 - b.fidelity(PureState::from_amplitudes({"Q0", "Q1"}, dual.at(sym.label()))));
    }
    ok = ok && worst <= 1e-9;
    return {ok, fmt::format("SDC gate pairs II/ZI/IX/ZX, BB84 worst infidelity {:.2g}", worst)};
}

std::string read_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Outcome qasm_goldens() {
    const GateDurations dur;
    const auto qx5 = bundled_device("ibmqx5");
    const auto qx4 = bundled_device("ibmqx4");
    const std::string dir = std::string(QCB_TEST_DATA_DIR) + "/golden/";
    int matched = 0;
    ExperimentPlan a;
    matched += export_qasm(build_sdc_circuit(a, SdcInput{1, 1}, qx5, dur)) == read_file(dir + "sdc_0swap_11.qasm");
    ExperimentPlan b;
    b.route = RoutePlan{{"Q1", "Q2"}, Leg::Outbound, ReturnKind::Same};
    matched += export_qasm(build_sdc_circuit(b, SdcInput{1, 0}, qx5, dur)) == read_file(dir + "sdc_2swap_10.qasm");
    ExperimentPlan c;
    c.protocol = Protocol::Bb84DualRail;
    c.mitigation.dual_rail = true;
    c.route = RoutePlan{{"Q0", "Q1", "Q0"}, Leg::Outbound, ReturnKind::Same};
    matched += export_qasm(build_bb84_dualrail(c, Bb84Symbol{1, Basis::Diagonal}, qx4, dur)) ==
               read_file(dir + "bb84_dualrail_2swap_x1.qasm");
    return {matched == 3, fmt::format("{}/3 golden files byte-identical", matched)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"fixture mutual information", fixture_mi},
        {"fixture key rate", fixture_key_rate},
        {"noiseless sanity", noiseless},
        {"backend equivalence", backend_equivalence},
        {"drift physics", drift_physics},
        {"qualitative reproduction", qualitative},
        {"encoding maps", encoding_maps},
        {"qasm goldens", qasm_goldens},
    };
    int failed = 0;
    int index = 0;
    for (const auto &[name, check] : criteria) {
        ++index;
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        fmt::print("{} [{}] {} ({:.2f}s): {}\n", o.pass ? "PASS" : "FAIL", index, name, seconds_since(t0), o.detail);
    }
    fmt::print("{} of {} criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
