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

#include <cstdint>
#include <map>
#include <string>

namespace qcb {

/// Probability distribution over outcome labels (usually bitstrings).
struct Distribution {
    std::map<std::string, double> probs;

    double at(const std::string &outcome) const {
        auto it = probs.find(outcome);
        return it == probs.end() ? 0.0 : it->second;
    }
    double total() const;

    /// Throws qcb::Error unless every probability is >= 0 and they sum to 1
    /// within `tol`.
    void validate(double tol = 1e-9) const;
};

/// Outcome bitstring -> shot count.
///
/// Bitstring character i is the classical bit written by the i-th MEASURE of
/// the circuit. `shots` is the number of executions; after post-selection the
/// counted total may be smaller than `shots`.
struct CountsTable {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t shots = 0;

    std::uint64_t at(const std::string &outcome) const {
        auto it = counts.find(outcome);
        return it == counts.end() ? 0 : it->second;
    }
    std::uint64_t counted() const;

    /// Empirical distribution over the counted outcomes.
    Distribution to_distribution() const;

    bool operator==(const CountsTable &) const = default;
};

}  // namespace qcb
