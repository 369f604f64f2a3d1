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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcb/counts_io.hpp"
#include "qcb/protocols.hpp"

namespace qcb {

/// One CSV line: x, metric, value, shots, accepted_fraction, seed, backend.
struct ReportRow {
    double x = 0.0;
    std::string metric;
    double value = 0.0;
    std::optional<std::uint64_t> shots;
    std::optional<double> accepted_fraction;
    std::optional<std::uint64_t> seed;
    std::string backend;

    bool operator==(const ReportRow &) const = default;
};

inline constexpr std::string_view kCsvHeader = "x,metric,value,shots,accepted_fraction,seed,backend";

/// Header plus one line per row. x has 4 decimals, value 9, accepted
/// fraction 6; absent optional fields are empty. Throws on empty input or
/// non-finite values.
std::string format_csv(const std::vector<ReportRow> &rows);

/// Writes format_csv(rows) to `path`, creating parent directories.
void emit_csv(const std::vector<ReportRow> &rows, const std::string &path);

/// "mutual_information" per point, plus "mutual_information_clipped" = 1 when
/// a rounding-level negative was clipped.
std::vector<ReportRow> sdc_rows(const std::vector<SdcPoint> &points, std::optional<std::uint64_t> shots,
                                std::optional<std::uint64_t> seed, std::string_view backend);

/// Per point: "qber_<cell>" for each cell, then "q", "l_sec", "l_sec_per_n".
std::vector<ReportRow> bb84_rows(const std::vector<Bb84Point> &points, std::optional<std::uint64_t> shots,
                                 std::optional<std::uint64_t> seed, std::string_view backend);

/// Metrics computed from an embedded table. SDC tables give one
/// mutual-information row per block (rows renormalized; each adjustment is
/// appended to `log` when given). BB84 tables give the stored cell rates
/// followed by "q" and "l_sec_per_n".
std::vector<ReportRow> replay_fixture(std::string_view id, std::vector<std::string> *log = nullptr,
                                      double f_ec = 1.15);

/// Scores every point of a counts document as `protocol`. Throws when a
/// point lacks one of the protocol's four cells.
std::vector<ReportRow> score_counts(const CountsDocument &doc, Protocol protocol, const RunSettings &settings);

}  // namespace qcb
