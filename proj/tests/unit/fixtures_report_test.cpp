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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcb/error.hpp"
#include "qcb/fixtures.hpp"
#include "qcb/report.hpp"

namespace qcb {
namespace {

struct Expected {
    const char *table;
    std::vector<double> x;
    std::vector<double> value;
};

// Values from tests/oracles/fixture_oracle.py (independent transcription).
const std::vector<Expected> kMutualInformation{
    {"table1",
     {0, 2, 4, 6, 8, 10, 12, 14},
     {1.1495030285991927, 0.42597066454035293, 0.21467444757656051, 0.12693652926698729, 0.065866605014432311,
      0.030738381388993874, 0.021822222521502344, 0.021672406824115198}},
    {"table2",
     {0.0, 1.3, 2.5, 3.8, 5.1, 6.0},
     {1.3787219476410497, 1.0938148544688622, 0.79108368611451407, 0.55006718613538008, 0.42284420326234651,
      0.38597574779460908}},
    {"table3",
     {0.0, 0.9, 1.8, 2.8, 3.7, 4.6},
     {1.0222893247907776, 0.72037524354241134, 0.47991318187735521, 0.32561237701607548, 0.20968398563735069,
      0.16002091021390652}},
    {"table4",
     {0.0, 0.9, 1.8, 2.8, 3.7, 4.6},
     {1.0346399612780812, 0.88862955586969683, 0.73091894231514876, 0.60968250633285725, 0.50848982723623504,
      0.44099026714894962}},
};

const std::vector<Expected> kAggregateQ{
    {"table5",
     {0.0, 1.2, 2.4, 3.6, 4.8, 6.0},
     {0.029999999999999999, 0.046249999999999999, 0.061749999999999999, 0.08299999999999999, 0.11475, 0.159}},
    {"table6", {0, 2, 4, 6}, {0.033000000000000002, 0.065000000000000002, 0.099250000000000005, 0.13024999999999998}},
    {"table7", {0, 2, 4, 6}, {0.012500000000000001, 0.040000000000000001, 0.069250000000000006, 0.10500000000000001}},
};

const std::vector<Expected> kKeyRate{
    {"table5",
     {0.0, 1.2, 2.4, 3.6, 4.8, 6.0},
     {0.58205750566211112, 0.41896590786620247, 0.28114116239334008, 0.11277528976420115, -0.10527027752168228,
      -0.35861050107969117}},
    {"table6", {0, 2, 4, 6}, {0.55017597258132167, 0.25399023058368131, -0.0032193074223170193, -0.1999653370188601}},
    {"table7",
     {0, 2, 4, 6},
     {0.79156909696568278, 0.47907179347280815, 0.21929512944188412, -0.041992640422607419}},
};

std::vector<ReportRow> only(const std::vector<ReportRow> &rows, const std::string &metric) {
    std::vector<ReportRow> out;
    for (const auto &r : rows) {
        if (r.metric == metric) {
            out.push_back(r);
        }
    }
    return out;
}

void expect_matches(const Expected &e, const std::string &metric) {
    const auto rows = only(replay_fixture(e.table), metric);
    ASSERT_EQ(rows.size(), e.value.size()) << e.table;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_NEAR(rows[i].x, e.x[i], 1e-12) << e.table;
        EXPECT_NEAR(rows[i].value, e.value[i], 1e-9) << e.table << " x=" << e.x[i];
    }
}

TEST(Fixtures, MutualInformationMatchesOracle) {
    for (const auto &e : kMutualInformation) {
        expect_matches(e, "mutual_information");
    }
}

TEST(Fixtures, KeyRateMatchesOracle) {
    for (const auto &e : kAggregateQ) {
        expect_matches(e, "q");
    }
    for (const auto &e : kKeyRate) {
        expect_matches(e, "l_sec_per_n");
    }
}

TEST(Fixtures, Inventory) {
    EXPECT_EQ(fixture_ids(), (std::vector<std::string>{"table1", "table2", "table3", "table4", "table5", "table6",
                                                       "table7"}));
    EXPECT_EQ(load_fixture("table1").device, "ibmqx5");
    EXPECT_EQ(load_fixture("table2").device, "ibmqx4");
    EXPECT_EQ(load_fixture("table7").bb84.size(), 4u);
    EXPECT_TRUE(load_fixture("table7").bb84[0].accepted.has_value());
    EXPECT_DOUBLE_EQ(load_fixture("table7").bb84[0].error[0], 0.003);
    EXPECT_DOUBLE_EQ((*load_fixture("table7").bb84[0].accepted)[0], 0.90);
    EXPECT_THROW(load_fixture("table8"), Error);
    EXPECT_EQ(fixture_checksum(), 12835345703773724385ULL);
}

TEST(Fixtures, RowsAreLabelled) {
    const auto rows = fixture_rows(load_fixture("table1").sdc[0]);
    EXPECT_DOUBLE_EQ(rows.at("00").at("00"), 0.940);
    EXPECT_DOUBLE_EQ(rows.at("10").at("10"), 0.815);
    EXPECT_DOUBLE_EQ(rows.at("11").at("00"), 0.031);
}

TEST(Replay, Table1GoldenCsv) {
    std::ifstream f(std::string(QCB_TEST_DATA_DIR) + "/golden/replay_table1.csv", std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_EQ(format_csv(replay_fixture("table1")), ss.str());
}

TEST(Replay, RenormalizationIsLogged) {
    std::vector<std::string> log;
    replay_fixture("table1", &log);
    EXPECT_FALSE(log.empty());
    EXPECT_NE(log[0].find("renormalized"), std::string::npos);
}

TEST(Csv, Formatting) {
    const std::vector<ReportRow> rows{{0.99, "q", 0.0123456789, 8192, 0.5, 7, "density"},
                                      {2.0, "l_sec", -1.5, std::nullopt, std::nullopt, std::nullopt, "fixture"}};
    EXPECT_EQ(format_csv(rows), "x,metric,value,shots,accepted_fraction,seed,backend\n"
                                "0.9900,q,0.012345679,8192,0.500000,7,density\n"
                                "2.0000,l_sec,-1.500000000,,,,fixture\n");
    EXPECT_THROW(format_csv({}), Error);
    EXPECT_THROW(format_csv({{0.0, "q", std::nan(""), {}, {}, {}, "x"}}), Error);
}

TEST(Csv, EmitCreatesDirectories) {
    const auto dir = std::filesystem::temp_directory_path() / "qcb_report_test" / "nested";
    std::filesystem::remove_all(dir.parent_path());
    const auto path = (dir / "out.csv").string();
    emit_csv(replay_fixture("table6"), path);
    std::ifstream f(path);
    std::string header;
    std::getline(f, header);
    EXPECT_EQ(header, kCsvHeader);
    std::filesystem::remove_all(dir.parent_path());
}

TEST(Rows, SdcAndBb84Layout) {
    SdcPoint s;
    s.x = 2.0;
    s.mi = {1.25, true};
    const auto sr = sdc_rows({s}, 100, 3, "density");
    ASSERT_EQ(sr.size(), 2u);
    EXPECT_EQ(sr[1].metric, "mutual_information_clipped");

    Bb84Point b;
    b.cells = {Bb84Cell{"+0"}, Bb84Cell{"x0"}, Bb84Cell{"+1"}, Bb84Cell{"x1"}};
    const auto br = bb84_rows({b}, 100, 3, "trajectory");
    ASSERT_EQ(br.size(), 7u);
    EXPECT_EQ(br[0].metric, "qber_+0");
    EXPECT_EQ(br[4].metric, "q");
    EXPECT_EQ(br[5].metric, "l_sec");
    EXPECT_EQ(br[6].metric, "l_sec_per_n");
}

}  // namespace
}  // namespace qcb
