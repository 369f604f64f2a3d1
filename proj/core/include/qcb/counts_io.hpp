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

#include "qcb/distribution.hpp"

namespace qcb {

/// Counts measured at one sweep point, keyed by cell label ("00", "+0", ...).
struct CountsPoint {
    double x = 0.0;
    std::map<std::string, CountsTable> cells;

    bool operator==(const CountsPoint &) const = default;
};

/// A counts document: JSON with an experiment id, an optional protocol and
/// either one point ("x", "cells") or a list under "points". Every cell is
/// {"label", "shots", "counts": {bitstring: n}}.
struct CountsDocument {
    std::string experiment;
    std::optional<std::string> protocol;
    std::vector<CountsPoint> points;

    bool operator==(const CountsDocument &) const = default;
};

/// Validates the schema: unknown or duplicate keys, duplicate cell labels,
/// negative or non-integer counts, bitstrings of mixed length or with
/// characters other than 0/1, and counts that do not sum to `shots` are
/// rejected with qcb::Error.
CountsDocument parse_counts(std::string_view json_text);
CountsDocument load_counts(const std::string &path);

/// Pretty-printed JSON accepted by parse_counts.
std::string emit_counts(const CountsDocument &doc);

}  // namespace qcb
