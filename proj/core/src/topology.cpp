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

#include "qcb/topology.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <set>

#include "bundled.hpp"
#include "qcb/error.hpp"

namespace qcb {

using json = nlohmann::json;

std::string_view to_string(ReturnKind kind) {
    return kind == ReturnKind::Same ? "same" : "alternate";
}

DeviceGraph::DeviceGraph(std::string name, std::vector<std::string> nodes, std::vector<DirectedEdge> edges,
                         bool allow_reversal, std::map<std::string, NamedRoute> routes)
    : name_(std::move(name)),
      nodes_(std::move(nodes)),
      edges_(std::move(edges)),
      allow_reversal_(allow_reversal),
      routes_(std::move(routes)) {
    if (nodes_.empty()) {
        throw Error("device '" + name_ + "': no nodes");
    }
    for (const auto &n : nodes_) {
        if (n.empty()) {
            throw Error("device '" + name_ + "': empty node label");
        }
        if (!adjacency_.emplace(n, std::vector<std::string>{}).second) {
            throw Error("device '" + name_ + "': duplicate node '" + n + "'");
        }
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto &e : edges_) {
        if (!adjacency_.count(e.control) || !adjacency_.count(e.target)) {
            throw Error("device '" + name_ + "': edge " + e.control + "->" + e.target + " references an unknown node");
        }
        if (e.control == e.target) {
            throw Error("device '" + name_ + "': self loop on '" + e.control + "'");
        }
        if (!seen.emplace(e.control, e.target).second) {
            throw Error("device '" + name_ + "': duplicate edge " + e.control + "->" + e.target);
        }
        if (e.cnot_duration_ns && !(*e.cnot_duration_ns >= 0.0)) {
            throw Error("device '" + name_ + "': negative CNOT duration on " + e.control + "->" + e.target);
        }
        auto &a = adjacency_[e.control];
        if (std::find(a.begin(), a.end(), e.target) == a.end()) {
            a.push_back(e.target);
            adjacency_[e.target].push_back(e.control);
        }
    }
    for (auto &[_, list] : adjacency_) {
        std::sort(list.begin(), list.end());
    }

    std::set<std::string> reached{nodes_.front()};
    std::deque<std::string> frontier{nodes_.front()};
    while (!frontier.empty()) {
        const auto cur = frontier.front();
        frontier.pop_front();
        for (const auto &n : adjacency_[cur]) {
            if (reached.insert(n).second) {
                frontier.push_back(n);
            }
        }
    }
    if (reached.size() != nodes_.size()) {
        throw Error("device '" + name_ + "': coupling graph is disconnected");
    }

    for (const auto &[route_name, r] : routes_) {
        try {
            RoutePlan{r.path, Leg::Outbound, r.return_kind}.validate(*this);
        } catch (const Error &e) {
            throw Error("device '" + name_ + "': route '" + route_name + "': " + e.what());
        }
        if (r.path.empty()) {
            throw Error("device '" + name_ + "': route '" + route_name + "' is empty");
        }
    }
}

bool DeviceGraph::contains(const std::string &node) const {
    return adjacency_.count(node) > 0;
}

const std::vector<std::string> &DeviceGraph::neighbors(const std::string &node) const {
    auto it = adjacency_.find(node);
    if (it == adjacency_.end()) {
        throw Error("device '" + name_ + "': unknown node '" + node + "'");
    }
    return it->second;
}

bool DeviceGraph::adjacent(const std::string &a, const std::string &b) const {
    const auto &n = neighbors(a);
    return std::binary_search(n.begin(), n.end(), b);
}

const DirectedEdge *DeviceGraph::find_edge(const std::string &control, const std::string &target) const {
    for (const auto &e : edges_) {
        if (e.control == control && e.target == target) {
            return &e;
        }
    }
    return nullptr;
}

CnotDirection DeviceGraph::direction(const std::string &a, const std::string &b) const {
    const bool fwd = find_edge(a, b) != nullptr;
    const bool bwd = find_edge(b, a) != nullptr;
    if (fwd && bwd) {
        return CnotDirection::Both;
    }
    if (fwd) {
        return CnotDirection::Forward;
    }
    if (bwd) {
        return CnotDirection::Backward;
    }
    throw Error("device '" + name_ + "': " + a + " and " + b + " are not coupled");
}

GateDurations DeviceGraph::durations_for(const std::string &a, const std::string &b, const GateDurations &base) const {
    GateDurations out = base;
    const DirectedEdge *e = find_edge(a, b);
    if (!e || !e->cnot_duration_ns) {
        e = find_edge(b, a);
    }
    if (e && e->cnot_duration_ns) {
        out.ns[GateKind::CNOT] = *e->cnot_duration_ns;
    }
    return out;
}

const NamedRoute &DeviceGraph::route(const std::string &name) const {
    auto it = routes_.find(name);
    if (it == routes_.end()) {
        std::string known;
        for (const auto &[k, _] : routes_) {
            known += (known.empty() ? "" : ", ") + k;
        }
        throw Error("device '" + name_ + "': unknown route '" + name + "'" +
                    (known.empty() ? std::string(" (device defines no routes)") : " (known: " + known + ")"));
    }
    return it->second;
}

// ---------------------------------------------------------------------------
// Device documents

namespace {

DirectedEdge parse_edge(const json &j) {
    if (j.is_array()) {
        if (j.size() != 2) {
            throw Error("device document: edge arrays must be [control, target]");
        }
        return {j[0].get<std::string>(), j[1].get<std::string>(), std::nullopt};
    }
    if (!j.is_object()) {
        throw Error("device document: edge must be an array or an object");
    }
    for (const auto &[key, _] : j.items()) {
        if (key != "control" && key != "target" && key != "cnot_ns") {
            throw Error("device document: unknown edge key '" + key + "'");
        }
    }
    DirectedEdge e{j.at("control").get<std::string>(), j.at("target").get<std::string>(), std::nullopt};
    if (j.contains("cnot_ns")) {
        e.cnot_duration_ns = j.at("cnot_ns").get<double>();
    }
    return e;
}

ReturnKind parse_return_kind(const std::string &s) {
    if (s == "same") {
        return ReturnKind::Same;
    }
    if (s == "alternate") {
        return ReturnKind::Alternate;
    }
    throw Error("device document: route return must be \"same\" or \"alternate\", got \"" + s + "\"");
}

}  // namespace

DeviceGraph parse_device(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("device document: ") + e.what(), e.byte);
    }
    if (!doc.is_object()) {
        throw Error("device document: top level must be an object");
    }
    for (const auto &[key, _] : doc.items()) {
        if (key != "name" && key != "nodes" && key != "edges" && key != "allow_reversal" && key != "routes") {
            throw Error("device document: unknown key '" + key + "'");
        }
    }
    try {
        std::vector<DirectedEdge> edges;
        for (const auto &e : doc.value("edges", json::array())) {
            edges.push_back(parse_edge(e));
        }
        std::map<std::string, NamedRoute> routes;
        if (doc.contains("routes")) {
            for (const auto &[name, r] : doc.at("routes").items()) {
                for (const auto &[key, _] : r.items()) {
                    if (key != "path" && key != "return") {
                        throw Error("device document: unknown key '" + key + "' in route '" + name + "'");
                    }
                }
                routes[name] = NamedRoute{r.at("path").get<std::vector<std::string>>(),
                                          parse_return_kind(r.value("return", std::string("same")))};
            }
        }
        return DeviceGraph(doc.at("name").get<std::string>(), doc.at("nodes").get<std::vector<std::string>>(),
                           std::move(edges), doc.value("allow_reversal", true), std::move(routes));
    } catch (const json::exception &e) {
        throw Error(std::string("device document: ") + e.what());
    }
}

DeviceGraph load_device(const std::string &path) {
    return parse_device(detail::read_text_file(path));
}

DeviceGraph bundled_device(const std::string &name) {
    if (auto text = detail::bundled_text("device", name)) {
        return parse_device(*text);
    }
    throw Error("unknown bundled device '" + name + "'");
}

std::vector<std::string> bundled_device_names() {
    return detail::bundled_names("device");
}

DeviceGraph resolve_device(const std::string &name_or_path) {
    if (auto text = detail::bundled_text("device", name_or_path)) {
        return parse_device(*text);
    }
    return load_device(name_or_path);
}

// ---------------------------------------------------------------------------
// Routing

std::vector<std::string> find_path(const DeviceGraph &graph, const std::string &from, const std::string &to,
                                   const std::vector<std::string> &excluded) {
    for (const auto *n : {&from, &to}) {
        if (!graph.contains(*n)) {
            throw Error("find_path: unknown node '" + *n + "'");
        }
    }
    const std::set<std::string> blocked(excluded.begin(), excluded.end());
    if (blocked.count(from) || blocked.count(to)) {
        throw Error("find_path: endpoint " + (blocked.count(from) ? from : to) + " is excluded");
    }
    std::map<std::string, std::string> parent{{from, from}};
    std::deque<std::string> frontier{from};
    while (!frontier.empty() && !parent.count(to)) {
        const auto cur = frontier.front();
        frontier.pop_front();
        for (const auto &n : graph.neighbors(cur)) {
            if (blocked.count(n) || parent.count(n)) {
                continue;
            }
            parent[n] = cur;
            frontier.push_back(n);
        }
    }
    if (!parent.count(to)) {
        throw Error("find_path: " + to + " is unreachable from " + from);
    }
    std::vector<std::string> path{to};
    while (path.back() != from) {
        path.push_back(parent[path.back()]);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

void RoutePlan::validate(const DeviceGraph &graph) const {
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!graph.contains(path[i])) {
            throw Error("route: unknown node '" + path[i] + "'");
        }
        if (i > 0 && !graph.adjacent(path[i - 1], path[i])) {
            throw Error("route: " + path[i - 1] + " and " + path[i] + " are not adjacent");
        }
    }
}

RoutePlan plan_return(const DeviceGraph &graph, const RoutePlan &outbound, const std::string &anchor,
                      ReturnKind kind) {
    if (outbound.path.empty()) {
        throw Error("plan_return: empty outbound path");
    }
    outbound.validate(graph);
    RoutePlan back;
    back.leg = Leg::Return;
    back.return_path = kind;
    if (kind == ReturnKind::Same || outbound.path.size() == 1) {
        back.path.assign(outbound.path.rbegin(), outbound.path.rend());
        return back;
    }

    const std::string &start = outbound.path.back();
    std::vector<std::string> excluded(outbound.path.begin(), outbound.path.end() - 1);
    excluded.push_back(anchor);
    std::vector<std::string> best;
    for (const auto &goal : graph.neighbors(anchor)) {
        if (std::find(excluded.begin(), excluded.end(), goal) != excluded.end()) {
            continue;
        }
        if (goal == start) {
            best = {start};
            break;
        }
        try {
            auto p = find_path(graph, start, goal, excluded);
            if (best.empty() || p.size() < best.size()) {
                best = std::move(p);
            }
        } catch (const Error &) {
        }
    }
    if (best.empty()) {
        throw Error("plan_return: no alternate path from " + start + " back to a neighbour of " + anchor);
    }
    back.path = std::move(best);
    return back;
}

std::vector<Gate> device_cnot(const DeviceGraph &graph, const std::string &control, const std::string &target,
                              const GateDurations &durations) {
    const CnotDirection dir = graph.direction(control, target);
    if (dir == CnotDirection::Backward && !graph.allow_reversal()) {
        throw Error("device '" + graph.name() + "': CNOT " + control + "->" + target +
                    " is not native and reversal is disabled");
    }
    return directed_cnot(control, target, dir, graph.durations_for(control, target, durations));
}

SwapChain build_swap_chain(const RoutePlan &plan, const DeviceGraph &graph, const GateDurations &durations) {
    if (plan.path.empty()) {
        throw Error("build_swap_chain: empty path");
    }
    plan.validate(graph);
    SwapChain chain;
    for (std::size_t i = 0; i + 1 < plan.path.size(); ++i) {
        const auto &a = plan.path[i];
        const auto &b = plan.path[i + 1];
        const CnotDirection dir = graph.direction(a, b);
        if (dir != CnotDirection::Both && !graph.allow_reversal()) {
            throw Error("device '" + graph.name() + "': SWAP " + a + "<->" + b +
                        " needs a reversed CNOT and reversal is disabled");
        }
        for (auto &g : decompose_swap(a, b, dir, graph.durations_for(a, b, durations))) {
            chain.gates.push_back(std::move(g));
        }
        ++chain.swap_count;
    }
    chain.payload_final = plan.path.back();
    return chain;
}

}  // namespace qcb
