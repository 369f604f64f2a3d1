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

#include "qcb/distribution.hpp"
#include "qcb/sweep.hpp"

namespace qcb {

/// One sweep point of a superdense-coding table: rows are inputs 00, 10, 01,
/// 11 and columns outputs 00, 10, 01, 11.
struct SdcBlock {
    double x = 0.0;
    std::array<std::array<double, 4>, 4> rows{};
};

/// One sweep point of a BB84 table: error rates for cells (+,0), (x,0),
/// (+,1), (x,1), plus accepted fractions for post-selected data.
struct Bb84Block {
    double x = 0.0;
    std::array<double, 4> error{};
    std::optional<std::array<double, 4>> accepted;
};

struct FixtureTable {
    std::string id;
    std::string title;
    std::string device;
    SweepAxis axis = SweepAxis::Swaps;
    std::uint64_t shots_per_cell = 8192;
    std::string measured;  ///< measurement campaign dates
    std::string note;
    std::vector<SdcBlock> sdc;
    std::vector<Bb84Block> bb84;

    bool is_sdc() const noexcept {
        return !sdc.empty();
    }
};

/// "table1" ... "table7". Throws qcb::Error for unknown ids.
const FixtureTable &load_fixture(std::string_view id);
std::vector<std::string> fixture_ids();

/// Rows of an SDC block keyed by input label, columns keyed by output label.
std::map<std::string, Distribution> fixture_rows(const SdcBlock &block);

/// FNV-1a over every embedded number printed with three decimals, table by
/// table in id order.
std::uint64_t fixture_checksum();

}  // namespace qcb
