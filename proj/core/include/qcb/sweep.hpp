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

#include <string>
#include <string_view>
#include <vector>

namespace qcb {

enum class SweepAxis { Swaps, Delay };

std::string_view to_string(SweepAxis axis);

/// Points of a sweep: SWAP counts, or delays in microseconds.
struct SweepSpec {
    SweepAxis axis = SweepAxis::Swaps;
    std::vector<double> values;
};

/// Parses a comma-separated list of values and ranges `start..end[:step]`.
///
/// Delay numbers may carry a `us` or `ns` suffix; a number without one takes
/// the last suffix given in the same item, or microseconds. SWAP counts are
/// plain non-negative integers. Default steps are 2 SWAPs and 1 us. Ranges
/// include `end` when the step lands on it. Throws qcb::ParseError with the
/// offending offset.
SweepSpec parse_sweep(std::string_view text, SweepAxis axis);

}  // namespace qcb
