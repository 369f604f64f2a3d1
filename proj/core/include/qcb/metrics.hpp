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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcb/distribution.hpp"

namespace qcb {

/// Joint law of (input a, output b).
struct JointDistribution {
    std::map<std::pair<std::string, std::string>, double> p;

    Distribution input_marginal() const;
    Distribution output_marginal() const;
    /// Throws qcb::Error unless entries are >= 0 and sum to 1 within `tol`.
    void validate(double tol = 1e-9) const;
};

/// -sum p log2 p with 0 log 0 = 0. Validates the distribution.
double shannon_entropy(const Distribution &d);

/// H(B|A) = sum_a P(a) H(B|A=a); rows with P(a) = 0 contribute 0.
double conditional_entropy(const JointDistribution &j);

struct MutualInformation {
    double bits = 0.0;
    /// True when a rounding-level negative (> -1e-9) was clipped to 0.
    bool clipped = false;
};

/// H(B) - H(B|A). Throws qcb::Error if the difference is below -1e-9.
MutualInformation mutual_information_detailed(const JointDistribution &j);
double mutual_information(const JointDistribution &j);

/// Fraction of counted shots whose single-bit outcome differs from
/// `expected_bit`. Keys must be "0" or "1".
double qber(const CountsTable &counts, int expected_bit);

/// h(q) = -q log2 q - (1-q) log2(1-q); h(0) = h(1) = 0.
double binary_entropy(double q);

struct KeyRateInput {
    double n = 0.0;  ///< sifted key length
    double q = 0.0;  ///< QBER in [0, 0.5]
    double f_ec = 1.15;
};

/// N (1 - (1 + f_ec) h(q)); negative when no secure key can be distilled.
double secret_key_length(const KeyRateInput &in);

/// Joint with uniform P(a) over `inputs` times each input's empirical output
/// distribution. Every input needs a table with counted shots.
JointDistribution counts_to_joint(const std::map<std::string, CountsTable> &per_input,
                                  std::span<const std::string> inputs);

/// Same for exact per-input distributions.
JointDistribution distributions_to_joint(const std::map<std::string, Distribution> &per_input,
                                         std::span<const std::string> inputs);

struct Renormalization {
    std::string row;
    double original_sum = 1.0;
};

/// Rescales each row to sum 1 and reports rows whose sum was not already 1
/// within 1e-12. Throws on empty or non-positive rows.
std::map<std::string, Distribution> renormalize_rows(const std::map<std::string, Distribution> &rows,
                                                     std::vector<Renormalization> *adjusted = nullptr);

}  // namespace qcb
