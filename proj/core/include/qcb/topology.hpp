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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcb/circuit.hpp"

namespace qcb {

struct DirectedEdge {
    std::string control;
    std::string target;
    /// Overrides the CNOT duration on this pair when set.
    std::optional<double> cnot_duration_ns;
};

enum class ReturnKind { Same, Alternate };
enum class Leg { Outbound, Return };

std::string_view to_string(ReturnKind kind);

/// A named path on a device with the rule for the way back.
struct NamedRoute {
    std::vector<std::string> path;
    ReturnKind return_kind = ReturnKind::Same;
};

class DeviceGraph {
  public:
    /// Throws qcb::Error on duplicate nodes, self loops, dangling or duplicate
    /// edges, a disconnected graph, or routes that are not walks on the graph.
    DeviceGraph(std::string name, std::vector<std::string> nodes, std::vector<DirectedEdge> edges,
                bool allow_reversal = true, std::map<std::string, NamedRoute> routes = {});

    const std::string &name() const noexcept {
        return name_;
    }
    const std::vector<std::string> &nodes() const noexcept {
        return nodes_;
    }
    const std::vector<DirectedEdge> &edges() const noexcept {
        return edges_;
    }
    bool allow_reversal() const noexcept {
        return allow_reversal_;
    }
    const std::map<std::string, NamedRoute> &routes() const noexcept {
        return routes_;
    }

    bool contains(const std::string &node) const;
    bool adjacent(const std::string &a, const std::string &b) const;
    /// Undirected neighbours in lexicographic label order.
    const std::vector<std::string> &neighbors(const std::string &node) const;
    /// Which CNOT orientations the pair (a, b) supports natively.
    CnotDirection direction(const std::string &a, const std::string &b) const;
    /// Gate durations with the CNOT entry replaced by the edge override, if any.
    GateDurations durations_for(const std::string &a, const std::string &b, const GateDurations &base) const;
    const NamedRoute &route(const std::string &name) const;

  private:
    const DirectedEdge *find_edge(const std::string &control, const std::string &target) const;

    std::string name_;
    std::vector<std::string> nodes_;
    std::vector<DirectedEdge> edges_;
    bool allow_reversal_;
    std::map<std::string, NamedRoute> routes_;
    std::map<std::string, std::vector<std::string>> adjacency_;
};

DeviceGraph parse_device(std::string_view json_text);
DeviceGraph load_device(const std::string &path);
/// Bundled device by name ("ibmqx4", "ibmqx5", "line2").
DeviceGraph bundled_device(const std::string &name);
std::vector<std::string> bundled_device_names();
/// Bundled name if one matches, otherwise a file path.
DeviceGraph resolve_device(const std::string &name_or_path);

/// Shortest undirected path; ties broken by visiting neighbours in
/// lexicographic order. Nodes in `excluded` are never entered.
std::vector<std::string> find_path(const DeviceGraph &graph, const std::string &from, const std::string &to,
                                   const std::vector<std::string> &excluded = {});

struct RoutePlan {
    std::vector<std::string> path;
    Leg leg = Leg::Outbound;
    ReturnKind return_path = ReturnKind::Same;

    std::size_t swap_count() const noexcept {
        return path.empty() ? 0 : path.size() - 1;
    }
    /// Throws qcb::Error unless every node exists and consecutive nodes are
    /// adjacent.
    void validate(const DeviceGraph &graph) const;
};

/// Return leg from the end of `outbound` back next to `anchor`. Same reverses
/// the outbound path. Alternate takes the shortest path that avoids the
/// outbound nodes (other than its end) and `anchor`, and stops at a neighbour
/// of `anchor`.
RoutePlan plan_return(const DeviceGraph &graph, const RoutePlan &outbound, const std::string &anchor,
                      ReturnKind kind);

struct SwapChain {
    std::vector<Gate> gates;
    std::string payload_final;
    std::size_t swap_count = 0;
};

/// SWAPs along the path honouring edge directions; the payload starts at
/// path.front() and ends at path.back().
SwapChain build_swap_chain(const RoutePlan &plan, const DeviceGraph &graph, const GateDurations &durations);

/// A CNOT on adjacent device qubits, H-wrapped when only the reverse
/// orientation exists.
std::vector<Gate> device_cnot(const DeviceGraph &graph, const std::string &control, const std::string &target,
                              const GateDurations &durations);

}  // namespace qcb
