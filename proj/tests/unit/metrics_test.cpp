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

#include <cmath>

#include "qcb/error.hpp"
#include "qcb/metrics.hpp"

namespace qcb {
namespace {

const std::vector<std::string> kLabels{"00", "10", "01", "11"};

Distribution dist(std::initializer_list<std::pair<const std::string, double>> p) {
    return Distribution{std::map<std::string, double>(p)};
}

JointDistribution diagonal_joint(double fidelity) {
    std::map<std::string, Distribution> rows;
    for (const auto &a : kLabels) {
        Distribution d;
        for (const auto &b : kLabels) {
            d.probs[b] = a == b ? fidelity : (1.0 - fidelity) / 3.0;
        }
        rows[a] = d;
    }
    return distributions_to_joint(rows, kLabels);
}

TEST(Entropy, Basics) {
    EXPECT_DOUBLE_EQ(shannon_entropy(dist({{"0", 1.0}})), 0.0);
    EXPECT_DOUBLE_EQ(shannon_entropy(dist({{"0", 0.5}, {"1", 0.5}})), 1.0);
    EXPECT_DOUBLE_EQ(shannon_entropy(dist({{"a", 0.25}, {"b", 0.25}, {"c", 0.25}, {"d", 0.25}})), 2.0);
    EXPECT_DOUBLE_EQ(shannon_entropy(dist({{"0", 1.0}, {"1", 0.0}})), 0.0);
    EXPECT_THROW(shannon_entropy(dist({{"0", 0.7}})), Error);
    EXPECT_THROW(shannon_entropy(dist({{"0", 1.2}, {"1", -0.2}})), Error);
}

TEST(MutualInformation, PerfectAndUseless) {
    EXPECT_NEAR(mutual_information(diagonal_joint(1.0)), 2.0, 1e-15);
    EXPECT_NEAR(mutual_information(diagonal_joint(0.25)), 0.0, 1e-15);
    const JointDistribution j = diagonal_joint(0.9);
    const double expected = 2.0 - (-(0.9 * std::log2(0.9)) - 3.0 * (0.1 / 3.0) * std::log2(0.1 / 3.0));
    EXPECT_NEAR(mutual_information(j), expected, 1e-12);
    EXPECT_NEAR(conditional_entropy(j), 2.0 - expected, 1e-12);
}

TEST(MutualInformation, BoundedByMarginals) {
    for (double f : {0.3, 0.5, 0.77, 0.99}) {
        const JointDistribution j = diagonal_joint(f);
        const double i = mutual_information(j);
        EXPECT_GE(i, 0.0);
        EXPECT_LE(i, shannon_entropy(j.input_marginal()) + 1e-12);
        EXPECT_LE(i, shannon_entropy(j.output_marginal()) + 1e-12);
    }
}

TEST(MutualInformation, ClipsRoundingNegatives) {
    JointDistribution j;
    j.p[{"0", "0"}] = 0.5;
    j.p[{"1", "0"}] = 0.5;
    const auto mi = mutual_information_detailed(j);
    EXPECT_EQ(mi.bits, 0.0);
    JointDistribution bad;
    bad.p[{"0", "0"}] = 0.6;
    EXPECT_THROW(bad.validate(), Error);
}

// Fixture table2 at t = 0 as counts out of 1000.
TEST(MutualInformation, CountsFromFixtureBlock) {
    const std::array<std::array<std::uint64_t, 4>, 4> rows{{{950, 18, 24, 8},
                                                            {83, 885, 10, 22},
                                                            {83, 7, 893, 16},
                                                            {14, 70, 83, 833}}};
    std::map<std::string, CountsTable> per_input;
    for (std::size_t a = 0; a < 4; ++a) {
        CountsTable t;
        for (std::size_t b = 0; b < 4; ++b) {
            t.counts[kLabels[b]] = rows[a][b];
            t.shots += rows[a][b];
        }
        per_input[kLabels[a]] = t;
    }
    EXPECT_NEAR(mutual_information(counts_to_joint(per_input, kLabels)), 1.3787219476410497, 1e-9);
    per_input.erase("11");
    EXPECT_THROW(counts_to_joint(per_input, kLabels), Error);
}

TEST(Qber, CountsErrors) {
    CountsTable t;
    t.counts = {{"0", 970}, {"1", 30}};
    t.shots = 1000;
    EXPECT_DOUBLE_EQ(qber(t, 0), 0.03);
    EXPECT_DOUBLE_EQ(qber(t, 1), 0.97);
    CountsTable bad;
    bad.counts = {{"01", 1}};
    bad.shots = 1;
    EXPECT_THROW(qber(bad, 0), Error);
    EXPECT_THROW(qber(CountsTable{}, 0), Error);
    EXPECT_THROW(qber(t, 2), Error);
}

TEST(KeyRate, BinaryEntropyAndThreshold) {
    EXPECT_DOUBLE_EQ(binary_entropy(0.0), 0.0);
    EXPECT_DOUBLE_EQ(binary_entropy(1.0), 0.0);
    EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
    EXPECT_NEAR(binary_entropy(0.11), 0.499915958164528, 1e-12);
    const double q_star = 0.098779989609564745;
    EXPECT_NEAR(secret_key_length({1000.0, q_star, 1.15}), 0.0, 1e-9);
    EXPECT_GT(secret_key_length({1000.0, q_star - 1e-4, 1.15}), 0.0);
    EXPECT_LT(secret_key_length({1000.0, q_star + 1e-4, 1.15}), 0.0);
    EXPECT_NEAR(secret_key_length({8192.0, 0.03, 1.15}), 4768.2150863840143, 1e-9);
    EXPECT_DOUBLE_EQ(secret_key_length({100.0, 0.0, 1.15}), 100.0);
}

TEST(KeyRate, Preconditions) {
    EXPECT_THROW(secret_key_length({100.0, 0.6, 1.15}), Error);
    EXPECT_THROW(secret_key_length({100.0, -0.1, 1.15}), Error);
    EXPECT_THROW(secret_key_length({100.0, 0.1, 0.9}), Error);
    EXPECT_THROW(binary_entropy(1.1), Error);
}

TEST(Renormalize, ReportsAdjustedRows) {
    std::map<std::string, Distribution> rows{{"a", dist({{"0", 0.5}, {"1", 0.501}})},
                                             {"b", dist({{"0", 0.25}, {"1", 0.75}})}};
    std::vector<Renormalization> adjusted;
    const auto out = renormalize_rows(rows, &adjusted);
    ASSERT_EQ(adjusted.size(), 1u);
    EXPECT_EQ(adjusted[0].row, "a");
    EXPECT_NEAR(adjusted[0].original_sum, 1.001, 1e-15);
    EXPECT_NEAR(out.at("a").total(), 1.0, 1e-15);
    EXPECT_THROW(renormalize_rows({{"z", dist({{"0", 0.0}})}}), Error);
}

}  // namespace
}  // namespace qcb
