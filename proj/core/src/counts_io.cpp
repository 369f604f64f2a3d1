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

#include "qcb/counts_io.hpp"

#include <json.hpp>

#include <set>

#include "bundled.hpp"
#include "qcb/error.hpp"

namespace qcb {

using json = nlohmann::json;

namespace {

json parse_rejecting_duplicate_keys(std::string_view text) {
    std::vector<std::set<std::string>> open_objects;
    json::parser_callback_t cb = [&open_objects](int /*depth*/, json::parse_event_t event, json &parsed) {
        switch (event) {
        case json::parse_event_t::object_start:
            open_objects.emplace_back();
            break;
        case json::parse_event_t::object_end:
            open_objects.pop_back();
            break;
        case json::parse_event_t::key: {
            const auto key = parsed.get<std::string>();
            if (!open_objects.back().insert(key).second) {
                throw Error("counts document: duplicate key '" + key + "'");
            }
            break;
        }
        default:
            break;
        }
        return true;
    };
    try {
        return json::parse(text, cb);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("counts document: ") + e.what(), e.byte);
    }
}

void allow_keys(const json &j, std::initializer_list<const char *> keys, const std::string &where) {
    if (!j.is_object()) {
        throw Error("counts document: " + where + " must be an object");
    }
    for (const auto &[key, _] : j.items()) {
        bool ok = false;
        for (const char *k : keys) {
            ok = ok || key == k;
        }
        if (!ok) {
            throw Error("counts document: unknown key '" + key + "' in " + where);
        }
    }
}

std::uint64_t non_negative_integer(const json &v, const std::string &what) {
    if (v.is_number_unsigned()) {
        return v.get<std::uint64_t>();
    }
    if (v.is_number_integer()) {
        throw Error("counts document: " + what + " is negative");
    }
    throw Error("counts document: " + what + " must be a non-negative integer");
}

CountsPoint parse_point(const json &j, const std::string &where) {
    CountsPoint point;
    if (j.contains("x")) {
        if (!j.at("x").is_number()) {
            throw Error("counts document: x in " + where + " must be a number");
        }
        point.x = j.at("x").get<double>();
    }
    const auto &cells = j.at("cells");
    if (!cells.is_array() || cells.empty()) {
        throw Error("counts document: cells in " + where + " must be a non-empty array");
    }
    for (const auto &c : cells) {
        allow_keys(c, {"label", "shots", "counts"}, "cell");
        const auto label = c.at("label").get<std::string>();
        const std::string cw = "cell '" + label + "'";
        CountsTable table;
        table.shots = non_negative_integer(c.at("shots"), "shots of " + cw);
        if (table.shots == 0) {
            throw Error("counts document: " + cw + " has zero shots");
        }
        std::size_t width = 0;
        const auto &counts = c.at("counts");
        if (!counts.is_object()) {
            throw Error("counts document: counts of " + cw + " must be an object");
        }
        for (const auto &[bits, n] : counts.items()) {
            if (bits.empty() || bits.find_first_not_of("01") != std::string::npos) {
                throw Error("counts document: outcome '" + bits + "' of " + cw + " is not a bitstring");
            }
            if (width == 0) {
                width = bits.size();
            } else if (bits.size() != width) {
                throw Error("counts document: outcomes of " + cw + " have mixed lengths");
            }
            table.counts[bits] = non_negative_integer(n, "count of '" + bits + "' in " + cw);
        }
        if (table.counted() != table.shots) {
            throw Error("counts document: counts of " + cw + " sum to " + std::to_string(table.counted()) +
                        ", expected shots = " + std::to_string(table.shots));
        }
        if (!point.cells.emplace(label, std::move(table)).second) {
            throw Error("counts document: duplicate cell '" + label + "' in " + where);
        }
    }
    return point;
}

}  // namespace

CountsDocument parse_counts(std::string_view json_text) {
    const json doc = parse_rejecting_duplicate_keys(json_text);
    allow_keys(doc, {"experiment", "protocol", "x", "cells", "points"}, "top level");
    CountsDocument out;
    try {
        out.experiment = doc.at("experiment").get<std::string>();
        if (doc.contains("protocol")) {
            out.protocol = doc.at("protocol").get<std::string>();
        }
        const bool single = doc.contains("cells");
        if (single == doc.contains("points")) {
            throw Error("counts document: give exactly one of \"cells\" or \"points\"");
        }
        if (single) {
            out.points.push_back(parse_point(doc, "document"));
        } else {
            if (doc.contains("x")) {
                throw Error("counts document: top-level x is only allowed with \"cells\"");
            }
            const auto &points = doc.at("points");
            if (!points.is_array() || points.empty()) {
                throw Error("counts document: points must be a non-empty array");
            }
            for (std::size_t i = 0; i < points.size(); ++i) {
                allow_keys(points[i], {"x", "cells"}, "point " + std::to_string(i));
                out.points.push_back(parse_point(points[i], "point " + std::to_string(i)));
            }
        }
    } catch (const json::exception &e) {
        throw Error(std::string("counts document: ") + e.what());
    }
    return out;
}

CountsDocument load_counts(const std::string &path) {
    return parse_counts(detail::read_text_file(path));
}

std::string emit_counts(const CountsDocument &doc) {
    auto cells_json = [](const CountsPoint &p) {
        json cells = json::array();
        for (const auto &[label, table] : p.cells) {
            json counts = json::object();
            for (const auto &[bits, n] : table.counts) {
                counts[bits] = n;
            }
            cells.push_back({{"label", label}, {"shots", table.shots}, {"counts", counts}});
        }
        return cells;
    };
    json j = json::object();
    j["experiment"] = doc.experiment;
    if (doc.protocol) {
        j["protocol"] = *doc.protocol;
    }
    if (doc.points.size() == 1) {
        j["x"] = doc.points[0].x;
        j["cells"] = cells_json(doc.points[0]);
    } else {
        json points = json::array();
        for (const auto &p : doc.points) {
            points.push_back({{"x", p.x}, {"cells", cells_json(p)}});
        }
        j["points"] = points;
    }
    return j.dump(2) + "\n";
}

}  // namespace qcb
