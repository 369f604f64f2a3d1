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

#include "qcb/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "qcb/error.hpp"
#include "qcb/fixtures.hpp"
#include "qcb/metrics.hpp"

namespace qcb {

std::string format_csv(const std::vector<ReportRow> &rows) {
    if (rows.empty()) {
        throw Error("format_csv: no rows");
    }
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto &r : rows) {
        if (!std::isfinite(r.x) || !std::isfinite(r.value)) {
            throw Error("format_csv: non-finite value in metric '" + r.metric + "'");
        }
        if (r.metric.find_first_of(",\"\n") != std::string::npos || r.backend.find_first_of(",\"\n") != std::string::npos) {
            throw Error("format_csv: metric and backend names may not contain commas, quotes or newlines");
        }
        out += fmt::format("{:.4f},{},{:.9f},{},{},{},{}\n", r.x, r.metric, r.value,
                           r.shots ? fmt::format("{}", *r.shots) : "",
                           r.accepted_fraction ? fmt::format("{:.6f}", *r.accepted_fraction) : "",
                           r.seed ? fmt::format("{}", *r.seed) : "", r.backend);
    }
    return out;
}

void emit_csv(const std::vector<ReportRow> &rows, const std::string &path) {
    const std::string text = format_csv(rows);
    const std::filesystem::path p(path);
    std::error_code ec;
    if (p.has_parent_path()) {
        std::filesystem::create_directories(p.parent_path(), ec);
    }
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot write '" + path + "'");
    }
    out << text;
    out.close();
    if (!out) {
        throw Error("failed writing '" + path + "'");
    }
}

std::vector<ReportRow> sdc_rows(const std::vector<SdcPoint> &points, std::optional<std::uint64_t> shots,
                                std::optional<std::uint64_t> seed, std::string_view backend) {
    std::vector<ReportRow> rows;
    for (const auto &p : points) {
        rows.push_back({p.x, "mutual_information", p.mi.bits, shots, 1.0, seed, std::string(backend)});
        if (p.mi.clipped) {
            rows.push_back({p.x, "mutual_information_clipped", 1.0, shots, 1.0, seed, std::string(backend)});
        }
    }
    return rows;
}

std::vector<ReportRow> bb84_rows(const std::vector<Bb84Point> &points, std::optional<std::uint64_t> shots,
                                 std::optional<std::uint64_t> seed, std::string_view backend) {
    std::vector<ReportRow> rows;
    const std::string b(backend);
    for (const auto &p : points) {
        for (const auto &c : p.cells) {
            rows.push_back({p.x, "qber_" + c.label, c.qber, shots, c.accepted_fraction, seed, b});
        }
        rows.push_back({p.x, "q", p.q, shots, p.accepted_fraction, seed, b});
        rows.push_back({p.x, "l_sec", p.l_sec, shots, p.accepted_fraction, seed, b});
        rows.push_back({p.x, "l_sec_per_n", p.l_sec_per_n, shots, p.accepted_fraction, seed, b});
    }
    return rows;
}

std::vector<ReportRow> replay_fixture(std::string_view id, std::vector<std::string> *log, double f_ec) {
    const FixtureTable &t = load_fixture(id);
    std::vector<ReportRow> rows;
    if (t.is_sdc()) {
        const std::vector<std::string> labels{"00", "10", "01", "11"};
        for (const auto &block : t.sdc) {
            std::vector<Renormalization> adjusted;
            const auto rows_n = renormalize_rows(fixture_rows(block), &adjusted);
            if (log) {
                for (const auto &a : adjusted) {
                    log->push_back(fmt::format("{} x={:.4f} row {}: sum {:.3f} renormalized to 1", t.id, block.x,
                                               a.row, a.original_sum));
                }
            }
            const auto mi = mutual_information_detailed(distributions_to_joint(rows_n, labels));
            rows.push_back({block.x, "mutual_information", mi.bits, t.shots_per_cell, 1.0, std::nullopt, "fixture"});
            if (mi.clipped) {
                rows.push_back({block.x, "mutual_information_clipped", 1.0, t.shots_per_cell, 1.0, std::nullopt,
                                "fixture"});
            }
        }
        return rows;
    }

    RunSettings settings;
    settings.f_ec = f_ec;
    for (const auto &block : t.bb84) {
        std::array<Bb84Cell, 4> cells;
        for (std::size_t i = 0; i < 4; ++i) {
            cells[i].label = Bb84Symbol::all()[i].label();
            cells[i].qber = block.error[i];
            cells[i].accepted_fraction = block.accepted ? (*block.accepted)[i] : 1.0;
            cells[i].accepted_shots = cells[i].accepted_fraction * static_cast<double>(t.shots_per_cell);
        }
        const Bb84Point p = score_bb84_cells(cells, settings);
        for (const auto &c : p.cells) {
            rows.push_back({block.x, "qber_" + c.label, c.qber, t.shots_per_cell, c.accepted_fraction, std::nullopt,
                            "fixture"});
        }
        rows.push_back({block.x, "q", p.q, t.shots_per_cell, p.accepted_fraction, std::nullopt, "fixture"});
        rows.push_back({block.x, "l_sec_per_n", p.l_sec_per_n, t.shots_per_cell, p.accepted_fraction, std::nullopt,
                        "fixture"});
    }
    return rows;
}

std::vector<ReportRow> score_counts(const CountsDocument &doc, Protocol protocol, const RunSettings &settings) {
    if (doc.points.empty()) {
        throw Error("score: counts document has no points");
    }
    auto cell = [](const CountsPoint &p, const std::string &label) -> const CountsTable & {
        auto it = p.cells.find(label);
        if (it == p.cells.end()) {
            throw Error(fmt::format("score: point x={} lacks cell '{}'", p.x, label));
        }
        return it->second;
    };
    auto min_shots = [](const CountsPoint &p) {
        std::uint64_t s = UINT64_MAX;
        for (const auto &[_, t] : p.cells) {
            s = std::min(s, t.shots);
        }
        return s;
    };

    std::vector<ReportRow> rows;
    if (protocol == Protocol::Sdc) {
        std::vector<std::string> labels;
        for (const auto &in : SdcInput::all()) {
            labels.push_back(in.label());
        }
        std::vector<SdcPoint> points;
        for (const auto &p : doc.points) {
            std::map<std::string, CountsTable> per_input;
            for (const auto &l : labels) {
                per_input[l] = cell(p, l);
            }
            SdcPoint sp;
            sp.x = p.x;
            sp.mi = mutual_information_detailed(counts_to_joint(per_input, labels));
            for (auto &r : sdc_rows({sp}, min_shots(p), std::nullopt, "counts")) {
                rows.push_back(std::move(r));
            }
        }
        return rows;
    }

    const bool dual = protocol == Protocol::Bb84DualRail;
    for (const auto &p : doc.points) {
        std::array<Bb84Cell, 4> cells;
        for (std::size_t i = 0; i < 4; ++i) {
            const auto &sym = Bb84Symbol::all()[i];
            cells[i] = bb84_cell_from_counts(sym, cell(p, sym.label()), dual);
        }
        Bb84Point bp = score_bb84_cells(cells, settings);
        bp.x = p.x;
        for (auto &r : bb84_rows({bp}, min_shots(p), std::nullopt, "counts")) {
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

}  // namespace qcb
