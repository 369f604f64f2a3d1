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

#include "qcb/noise.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "bundled.hpp"
#include "qcb/error.hpp"

namespace qcb {

using json = nlohmann::json;

void ReadoutModel::set(const std::string &qubit, ReadoutError e) {
    per_qubit_[qubit] = e;
}

const ReadoutError &ReadoutModel::at(const std::string &qubit) const {
    if (auto it = per_qubit_.find(qubit); it != per_qubit_.end()) {
        return it->second;
    }
    if (fallback_) {
        return *fallback_;
    }
    throw Error("ReadoutModel: no readout entry for qubit '" + qubit + "'");
}

bool ReadoutModel::covers(const std::string &qubit) const {
    return fallback_.has_value() || per_qubit_.count(qubit) > 0;
}

const CoherenceTimes &NoiseModel::times(const std::string &qubit) const {
    auto it = qubit_times.find(qubit);
    return it == qubit_times.end() ? default_times : it->second;
}

namespace {

void check_probability(double p, const std::string &what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error("NoiseModel: " + what + " must lie in [0, 1]");
    }
}

void check_times(const CoherenceTimes &t, const std::string &where) {
    if (!(t.t1_us > 0.0) || !(t.t2_us > 0.0)) {
        throw Error("NoiseModel: T1 and T2 must be positive (" + where + ")");
    }
    if (t.t2_us > 2.0 * t.t1_us * (1.0 + 1e-12)) {
        throw Error("NoiseModel: T2 > 2 T1 is unphysical (" + where + ")");
    }
}

}  // namespace

void NoiseModel::validate() const {
    check_probability(p1q, "p1q");
    check_probability(p2q, "p2q");
    check_times(default_times, "default");
    for (const auto &[q, t] : qubit_times) {
        check_times(t, q);
    }
    for (const auto &[kind, ns] : durations.ns) {
        if (!(ns >= 0.0)) {
            throw Error("NoiseModel: negative duration for " + std::string(to_string(kind)));
        }
    }
    if (drift && !(drift->t_osc_us > 0.0)) {
        throw Error("NoiseModel: drift t_osc must be positive");
    }
}

NoiseModel NoiseModel::ideal() {
    NoiseModel m;
    m.name = "ideal";
    return m;
}

NoiseModel NoiseModel::ibmqx5_2018() {
    NoiseModel m;
    m.name = "ibmqx5-2018";
    m.default_times = {40.0, 40.0};
    m.p1q = 0.002;
    m.p2q = 0.03;
    m.readout = ReadoutModel(ReadoutError{0.03, 0.06});
    m.drift = CoherentDrift{10.0, "Q0"};
    m.durations.ns = {{GateKind::I, 90.0}, {GateKind::U_PHASE, 0.0}, {GateKind::CNOT, 300.0}};
    return m;
}

KrausChannel damping_channel(double duration_ns, double t1_us, double t2_us) {
    if (!(t1_us > 0.0) || !(t2_us > 0.0)) {
        throw Error("damping_channel: T1 and T2 must be positive");
    }
    if (t2_us > 2.0 * t1_us * (1.0 + 1e-12)) {
        throw Error("damping_channel: T2 > 2 T1 is unphysical");
    }
    if (!(duration_ns >= 0.0)) {
        throw Error("damping_channel: negative duration");
    }
    const double t = duration_ns * 1e-3;
    const double gamma = std::isinf(t1_us) ? 0.0 : -std::expm1(-t / t1_us);
    // Pure-dephasing rate on top of the T1 contribution to coherence decay.
    const double dephasing_rate = std::max(0.0, 1.0 / t2_us - 0.5 / t1_us);
    const double lambda = dephasing_rate == 0.0 ? 0.0 : -std::expm1(-2.0 * t * dephasing_rate);

    std::vector<Matrix> ops;
    ops.push_back(Matrix(2, 2, {1, 0, 0, std::sqrt((1.0 - gamma) * (1.0 - lambda))}));
    if (lambda > 0.0) {
        ops.push_back(Matrix(2, 2, {0, 0, 0, std::sqrt((1.0 - gamma) * lambda)}));
    }
    if (gamma > 0.0) {
        ops.push_back(Matrix(2, 2, {0, std::sqrt(gamma), 0, 0}));
    }
    return KrausChannel(std::move(ops), 1);
}

KrausChannel depolarizing_channel(double p, std::size_t arity) {
    if (arity != 1 && arity != 2) {
        throw Error("depolarizing_channel: arity must be 1 or 2");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error("depolarizing_channel: p must lie in [0, 1]");
    }
    const std::vector<Matrix> paulis = {gate_matrix(GateKind::I), gate_matrix(GateKind::X), gate_matrix(GateKind::Y),
                                        gate_matrix(GateKind::Z)};
    std::vector<Matrix> terms;
    if (arity == 1) {
        terms = paulis;
    } else {
        for (const auto &a : paulis) {
            for (const auto &b : paulis) {
                terms.push_back(a.kron(b));
            }
        }
    }
    const double non_identity = static_cast<double>(terms.size() - 1);
    std::vector<Matrix> ops;
    if (p < 1.0) {
        ops.push_back(terms[0] * std::sqrt(1.0 - p));
    }
    if (p > 0.0) {
        const double w = std::sqrt(p / non_identity);
        for (std::size_t i = 1; i < terms.size(); ++i) {
            ops.push_back(terms[i] * w);
        }
    }
    return KrausChannel(std::move(ops), arity);
}

double correction_angle(double elapsed_ns, double t_osc_us) {
    return -std::numbers::pi * (elapsed_ns * 1e-3) / t_osc_us;
}

Matrix drift_phase(double duration_ns, const CoherentDrift &drift) {
    if (!(duration_ns >= 0.0)) {
        throw Error("drift_phase: negative duration");
    }
    return gate_matrix(GateKind::U_PHASE, -correction_angle(duration_ns, drift.t_osc_us));
}

Matrix correction_gate(double elapsed_ns, const CoherentDrift &drift) {
    return gate_matrix(GateKind::U_PHASE, correction_angle(elapsed_ns, drift.t_osc_us));
}

// ---------------------------------------------------------------------------
// Noise documents

namespace {

double time_or_infinity(const json &j, const char *key, double fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    const auto &v = j.at(key);
    if (v.is_null()) {
        return std::numeric_limits<double>::infinity();
    }
    return v.get<double>();
}

ReadoutError parse_readout(const json &j) {
    for (const auto &[key, _] : j.items()) {
        if (key != "e0" && key != "e1") {
            throw Error("noise document: unknown readout key '" + key + "'");
        }
    }
    ReadoutError e{j.value("e0", 0.0), j.value("e1", 0.0)};
    check_probability(e.p1_given_0, "readout e0");
    check_probability(e.p0_given_1, "readout e1");
    return e;
}

void reject_unknown(const json &j, const std::set<std::string> &allowed, const std::string &where) {
    for (const auto &[key, _] : j.items()) {
        if (!allowed.count(key)) {
            throw Error("noise document: unknown key '" + key + "' in " + where);
        }
    }
}

}  // namespace

NoiseModel parse_noise(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("noise document: ") + e.what(), e.byte);
    }
    if (!doc.is_object()) {
        throw Error("noise document: top level must be an object");
    }
    reject_unknown(doc,
                   {"name", "t1_us", "t2_us", "p1q", "p2q", "depolarize_idle_gates", "readout", "drift", "durations_ns",
                    "qubits"},
                   "top level");

    NoiseModel m;
    try {
        m.name = doc.value("name", std::string("custom"));
        m.default_times.t1_us = time_or_infinity(doc, "t1_us", m.default_times.t1_us);
        m.default_times.t2_us = time_or_infinity(doc, "t2_us", m.default_times.t2_us);
        m.p1q = doc.value("p1q", 0.0);
        m.p2q = doc.value("p2q", 0.0);
        m.depolarize_idle_gates = doc.value("depolarize_idle_gates", false);
        m.readout = ReadoutModel(doc.contains("readout") ? parse_readout(doc.at("readout")) : ReadoutError{});
        if (doc.contains("drift") && !doc.at("drift").is_null()) {
            const auto &d = doc.at("drift");
            reject_unknown(d, {"t_osc_us", "target"}, "drift");
            m.drift = CoherentDrift{d.at("t_osc_us").get<double>(), d.at("target").get<std::string>()};
        }
        if (doc.contains("durations_ns")) {
            m.durations.ns.clear();
            for (const auto &[kind, ns] : doc.at("durations_ns").items()) {
                m.durations.ns[gate_kind_from_string(kind)] = ns.get<double>();
            }
        }
        if (doc.contains("qubits")) {
            for (const auto &[label, q] : doc.at("qubits").items()) {
                reject_unknown(q, {"t1_us", "t2_us", "readout"}, "qubit " + label);
                if (q.contains("t1_us") || q.contains("t2_us")) {
                    m.qubit_times[label] = {time_or_infinity(q, "t1_us", m.default_times.t1_us),
                                            time_or_infinity(q, "t2_us", m.default_times.t2_us)};
                }
                if (q.contains("readout")) {
                    m.readout.set(label, parse_readout(q.at("readout")));
                }
            }
        }
    } catch (const json::exception &e) {
        throw Error(std::string("noise document: ") + e.what());
    }
    m.validate();
    return m;
}

NoiseModel load_noise(const std::string &path) {
    return parse_noise(detail::read_text_file(path));
}

NoiseModel resolve_noise(const std::string &name_or_path) {
    if (auto text = detail::bundled_text("noise", name_or_path)) {
        return parse_noise(*text);
    }
    return load_noise(name_or_path);
}

namespace detail {

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace detail

}  // namespace qcb
