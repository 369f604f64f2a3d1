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

#include "qcb/fixtures.hpp"

#include <fmt/format.h>

#include "qcb/error.hpp"

namespace qcb {

namespace {

std::vector<FixtureTable> build_fixtures() {
    std::vector<FixtureTable> out;
    {
        FixtureTable t;
        t.id = "table1";
        t.title = "SDC output distribution versus SWAP count";
        t.device = "ibmqx5";
        t.axis = SweepAxis::Swaps;
        t.measured = "2018-04-25..2018-05-21";
        t.note = "Blocks 12 and 14 differ in only three entries by 0.001; kept as given.";
        t.sdc = {
            {0.0, {{{0.940, 0.022, 0.031, 0.008}, {0.117, 0.815, 0.029, 0.039}, {0.121, 0.015, 0.840, 0.024}, {0.031, 0.114, 0.115, 0.739}}}},
            {2.0, {{{0.684, 0.078, 0.172, 0.067}, {0.154, 0.551, 0.094, 0.201}, {0.250, 0.063, 0.617, 0.069}, {0.113, 0.265, 0.136, 0.486}}}},
            {4.0, {{{0.595, 0.127, 0.164, 0.114}, {0.190, 0.454, 0.143, 0.213}, {0.263, 0.117, 0.511, 0.109}, {0.177, 0.256, 0.173, 0.393}}}},
            {6.0, {{{0.510, 0.145, 0.219, 0.126}, {0.240, 0.430, 0.166, 0.164}, {0.324, 0.151, 0.396, 0.129}, {0.194, 0.227, 0.193, 0.386}}}},
            {8.0, {{{0.406, 0.172, 0.276, 0.147}, {0.253, 0.370, 0.184, 0.193}, {0.326, 0.166, 0.366, 0.142}, {0.212, 0.249, 0.205, 0.334}}}},
            {10.0, {{{0.374, 0.188, 0.287, 0.151}, {0.257, 0.314, 0.209, 0.220}, {0.353, 0.176, 0.313, 0.157}, {0.250, 0.264, 0.218, 0.268}}}},
            {12.0, {{{0.357, 0.197, 0.282, 0.163}, {0.264, 0.293, 0.212, 0.231}, {0.360, 0.179, 0.297, 0.164}, {0.257, 0.268, 0.225, 0.250}}}},
            {14.0, {{{0.357, 0.197, 0.283, 0.164}, {0.264, 0.293, 0.212, 0.231}, {0.360, 0.180, 0.297, 0.164}, {0.257, 0.268, 0.225, 0.250}}}},
        };
        out.push_back(std::move(t));
    }
    {
        FixtureTable t;
        t.id = "table2";
        t.title = "SDC output distribution versus delay";
        t.device = "ibmqx4";
        t.axis = SweepAxis::Delay;
        t.measured = "2018-04-25..2018-05-21";
        t.sdc = {
            {0.0, {{{0.950, 0.018, 0.024, 0.008}, {0.083, 0.885, 0.010, 0.022}, {0.083, 0.007, 0.893, 0.016}, {0.014, 0.070, 0.083, 0.833}}}},
            {1.3, {{{0.889, 0.029, 0.061, 0.020}, {0.093, 0.824, 0.024, 0.059}, {0.128, 0.021, 0.822, 0.028}, {0.032, 0.121, 0.091, 0.756}}}},
            {2.5, {{{0.792, 0.044, 0.137, 0.028}, {0.094, 0.731, 0.044, 0.131}, {0.195, 0.037, 0.729, 0.040}, {0.054, 0.209, 0.089, 0.649}}}},
            {3.8, {{{0.679, 0.056, 0.226, 0.039}, {0.102, 0.619, 0.059, 0.220}, {0.286, 0.049, 0.616, 0.050}, {0.076, 0.319, 0.092, 0.514}}}},
            {5.1, {{{0.565, 0.061, 0.324, 0.050}, {0.101, 0.510, 0.074, 0.315}, {0.386, 0.053, 0.501, 0.061}, {0.089, 0.407, 0.094, 0.410}}}},
            {6.0, {{{0.496, 0.065, 0.386, 0.054}, {0.105, 0.447, 0.078, 0.370}, {0.459, 0.063, 0.417, 0.061}, {0.094, 0.456, 0.093, 0.357}}}},
        };
        out.push_back(std::move(t));
    }
    {
        FixtureTable t;
        t.id = "table3";
        t.title = "SDC output distribution versus delay, uncorrected";
        t.device = "ibmqx5";
        t.axis = SweepAxis::Delay;
        t.measured = "2018-04-25..2018-05-21";
        t.sdc = {
            {0.0, {{{0.945, 0.011, 0.043, 0.001}, {0.144, 0.775, 0.030, 0.051}, {0.156, 0.026, 0.765, 0.053}, {0.044, 0.135, 0.128, 0.694}}}},
            {0.9, {{{0.794, 0.090, 0.074, 0.042}, {0.156, 0.728, 0.054, 0.061}, {0.163, 0.057, 0.706, 0.074}, {0.079, 0.147, 0.135, 0.638}}}},
            {1.8, {{{0.699, 0.117, 0.118, 0.066}, {0.170, 0.641, 0.082, 0.107}, {0.204, 0.084, 0.617, 0.095}, {0.109, 0.183, 0.151, 0.556}}}},
            {2.8, {{{0.620, 0.118, 0.179, 0.082}, {0.170, 0.574, 0.098, 0.159}, {0.269, 0.101, 0.528, 0.102}, {0.131, 0.234, 0.158, 0.477}}}},
            {3.7, {{{0.531, 0.129, 0.244, 0.096}, {0.181, 0.485, 0.120, 0.215}, {0.339, 0.112, 0.438, 0.110}, {0.149, 0.287, 0.156, 0.408}}}},
            {4.6, {{{0.461, 0.133, 0.307, 0.099}, {0.180, 0.421, 0.128, 0.272}, {0.399, 0.122, 0.367, 0.112}, {0.169, 0.348, 0.150, 0.333}}}},
        };
        out.push_back(std::move(t));
    }
    {
        FixtureTable t;
        t.id = "table4";
        t.title = "SDC output distribution versus delay, phase corrected";
        t.device = "ibmqx5";
        t.axis = SweepAxis::Delay;
        t.measured = "2018-04-25..2018-05-21";
        t.note = "The first block is labelled 0,0 in print; read as t = 0.0 us.";
        t.sdc = {
            {0.0, {{{0.907, 0.039, 0.040, 0.013}, {0.139, 0.801, 0.023, 0.036}, {0.156, 0.027, 0.771, 0.046}, {0.033, 0.119, 0.117, 0.731}}}},
            {0.9, {{{0.862, 0.054, 0.056, 0.028}, {0.150, 0.777, 0.033, 0.040}, {0.147, 0.055, 0.722, 0.075}, {0.051, 0.112, 0.130, 0.707}}}},
            {1.8, {{{0.817, 0.069, 0.076, 0.039}, {0.163, 0.737, 0.050, 0.051}, {0.159, 0.085, 0.657, 0.099}, {0.068, 0.125, 0.137, 0.670}}}},
            {2.8, {{{0.760, 0.081, 0.102, 0.057}, {0.169, 0.710, 0.063, 0.058}, {0.181, 0.108, 0.602, 0.109}, {0.084, 0.129, 0.144, 0.643}}}},
            {3.7, {{{0.709, 0.092, 0.131, 0.068}, {0.180, 0.674, 0.078, 0.068}, {0.205, 0.119, 0.564, 0.111}, {0.093, 0.140, 0.159, 0.608}}}},
            {4.6, {{{0.656, 0.107, 0.160, 0.076}, {0.181, 0.647, 0.088, 0.084}, {0.215, 0.125, 0.541, 0.119}, {0.110, 0.133, 0.156, 0.601}}}},
        };
        out.push_back(std::move(t));
    }
    {
        FixtureTable t;
        t.id = "table5";
        t.title = "BB84 error rates versus delay";
        t.device = "ibmqx4";
        t.axis = SweepAxis::Delay;
        t.measured = "2018-04-04..2018-05-21";
        t.bb84 = {
            {0.0, {0.008, 0.011, 0.051, 0.050}, std::nullopt},
            {1.2, {0.011, 0.027, 0.076, 0.071}, std::nullopt},
            {2.4, {0.009, 0.052, 0.095, 0.091}, std::nullopt},
            {3.6, {0.010, 0.081, 0.119, 0.122}, std::nullopt},
            {4.8, {0.008, 0.098, 0.177, 0.176}, std::nullopt},
            {6.0, {0.005, 0.120, 0.251, 0.260}, std::nullopt},
        };
        out.push_back(std::move(t));
    }
    {
        FixtureTable t;
        t.id = "table6";
        t.title = "BB84 error rates versus SWAP count";
        t.device = "ibmqx4";
        t.axis = SweepAxis::Swaps;
        t.measured = "2018-04-04..2018-05-21";
        t.bb84 = {
            {0.0, {0.009, 0.009, 0.061, 0.053}, std::nullopt},
            {2.0, {0.036, 0.043, 0.092, 0.089}, std::nullopt},
            {4.0, {0.062, 0.077, 0.125, 0.133}, std::nullopt},
            {6.0, {0.078, 0.084, 0.184, 0.175}, std::nullopt},
        };
        out.push_back(std::move(t));
    }
    {
        FixtureTable t;
        t.id = "table7";
        t.title = "Dual-rail BB84 error rates versus SWAP count, post-selected";
        t.device = "ibmqx4";
        t.axis = SweepAxis::Swaps;
        t.measured = "2018-04-04..2018-05-21";
        t.bb84 = {
            {0.0, {0.003, 0.024, 0.002, 0.021}, std::array<double, 4>{0.90, 0.86, 0.89, 0.83}},
            {2.0, {0.028, 0.053, 0.029, 0.05}, std::array<double, 4>{0.85, 0.84, 0.82, 0.76}},
            {4.0, {0.048, 0.081, 0.059, 0.089}, std::array<double, 4>{0.79, 0.81, 0.77, 0.70}},
            {6.0, {0.076, 0.111, 0.094, 0.139}, std::array<double, 4>{0.75, 0.78, 0.71, 0.63}},
        };
        out.push_back(std::move(t));
    }
    return out;
}

const std::vector<FixtureTable> &all_fixtures() {
    static const std::vector<FixtureTable> tables = build_fixtures();
    return tables;
}

}  // namespace

const FixtureTable &load_fixture(std::string_view id) {
    for (const auto &t : all_fixtures()) {
        if (t.id == id) {
            return t;
        }
    }
    throw Error("unknown fixture '" + std::string(id) + "' (expected table1 ... table7)");
}

std::vector<std::string> fixture_ids() {
    std::vector<std::string> ids;
    for (const auto &t : all_fixtures()) {
        ids.push_back(t.id);
    }
    return ids;
}

std::map<std::string, Distribution> fixture_rows(const SdcBlock &block) {
    static const std::array<const char *, 4> labels{"00", "10", "01", "11"};
    std::map<std::string, Distribution> rows;
    for (std::size_t a = 0; a < 4; ++a) {
        Distribution d;
        for (std::size_t b = 0; b < 4; ++b) {
            d.probs[labels[b]] = block.rows[a][b];
        }
        rows[labels[a]] = std::move(d);
    }
    return rows;
}

std::uint64_t fixture_checksum() {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&h](double v) {
        for (char c : fmt::format("{:.3f};", v)) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
    };
    for (const auto &t : all_fixtures()) {
        for (const auto &b : t.sdc) {
            feed(b.x);
            for (const auto &row : b.rows) {
                for (double v : row) {
                    feed(v);
                }
            }
        }
        for (const auto &b : t.bb84) {
            feed(b.x);
            for (double v : b.error) {
                feed(v);
            }
            if (b.accepted) {
                for (double v : *b.accepted) {
                    feed(v);
                }
            }
        }
    }
    return h;
}

}  // namespace qcb
