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

#include "qcb/metrics.hpp"

#include <cmath>

#include "qcb/error.hpp"

namespace qcb {

namespace {

double plogp(double p) {
    return p > 0.0 ? -p * std::log2(p) : 0.0;
}

}  // namespace

Distribution JointDistribution::input_marginal() const {
    Distribution d;
    for (const auto &[ab, v] : p) {
        d.probs[ab.first] += v;
    }
    return d;
}

Distribution JointDistribution::output_marginal() const {
    Distribution d;
    for (const auto &[ab, v] : p) {
        d.probs[ab.second] += v;
    }
    return d;
}

void JointDistribution::validate(double tol) const {
    double sum = 0.0;
    for (const auto &[ab, v] : p) {
        if (!(v >= 0.0)) {
            throw Error("JointDistribution: negative or NaN entry at (" + ab.first + ", " + ab.second + ")");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > tol) {
        throw Error("JointDistribution: entries do not sum to 1");
    }
}

double shannon_entropy(const Distribution &d) {
    d.validate();
    double h = 0.0;
    for (const auto &[_, p] : d.probs) {
        h += plogp(p);
    }
    return h;
}

double conditional_entropy(const JointDistribution &j) {
    j.validate();
    const Distribution pa = j.input_marginal();
    double h = 0.0;
    for (const auto &[a, w] : pa.probs) {
        if (w <= 0.0) {
            continue;
        }
        double row = 0.0;
        for (const auto &[ab, v] : j.p) {
            if (ab.first == a) {
                row += plogp(v / w);
            }
        }
        h += w * row;
    }
    return h;
}

MutualInformation mutual_information_detailed(const JointDistribution &j) {
    const double hb = shannon_entropy(j.output_marginal());
    const double mi = hb - conditional_entropy(j);
    if (mi < -1e-9) {
        throw Error("mutual_information: negative result " + std::to_string(mi));
    }
    if (mi < 0.0) {
        return {0.0, true};
    }
    return {mi, false};
}

double mutual_information(const JointDistribution &j) {
    return mutual_information_detailed(j).bits;
}

double qber(const CountsTable &counts, int expected_bit) {
    if (expected_bit != 0 && expected_bit != 1) {
        throw Error("qber: expected bit must be 0 or 1");
    }
    std::uint64_t wrong = 0;
    std::uint64_t total = 0;
    for (const auto &[outcome, n] : counts.counts) {
        if (outcome != "0" && outcome != "1") {
            throw Error("qber: outcome '" + outcome + "' is not a single bit");
        }
        total += n;
        if (outcome[0] - '0' != expected_bit) {
            wrong += n;
        }
    }
    if (total == 0) {
        throw Error("qber: no accepted shots");
    }
    return static_cast<double>(wrong) / static_cast<double>(total);
}

double binary_entropy(double q) {
    if (!(q >= 0.0 && q <= 1.0)) {
        throw Error("binary_entropy: q must lie in [0, 1]");
    }
    return plogp(q) + plogp(1.0 - q);
}

double secret_key_length(const KeyRateInput &in) {
    if (!(in.n >= 0.0)) {
        throw Error("secret_key_length: N must be >= 0");
    }
    if (!(in.q >= 0.0 && in.q <= 0.5)) {
        throw Error("secret_key_length: q must lie in [0, 0.5]");
    }
    if (!(in.f_ec >= 1.0)) {
        throw Error("secret_key_length: f_ec must be >= 1");
    }
    return in.n * (1.0 - (1.0 + in.f_ec) * binary_entropy(in.q));
}

JointDistribution distributions_to_joint(const std::map<std::string, Distribution> &per_input,
                                         std::span<const std::string> inputs) {
    if (inputs.empty()) {
        throw Error("joint: no inputs");
    }
    JointDistribution j;
    const double w = 1.0 / static_cast<double>(inputs.size());
    for (const auto &a : inputs) {
        auto it = per_input.find(a);
        if (it == per_input.end()) {
            throw Error("joint: missing cell for input '" + a + "'");
        }
        it->second.validate(1e-9);
        for (const auto &[b, p] : it->second.probs) {
            j.p[{a, b}] = w * p;
        }
    }
    return j;
}

JointDistribution counts_to_joint(const std::map<std::string, CountsTable> &per_input,
                                  std::span<const std::string> inputs) {
    std::map<std::string, Distribution> rows;
    for (const auto &a : inputs) {
        auto it = per_input.find(a);
        if (it == per_input.end()) {
            throw Error("joint: missing cell for input '" + a + "'");
        }
        if (it->second.shots == 0 || it->second.counted() == 0) {
            throw Error("joint: cell '" + a + "' has no shots");
        }
        rows[a] = it->second.to_distribution();
    }
    return distributions_to_joint(rows, inputs);
}

std::map<std::string, Distribution> renormalize_rows(const std::map<std::string, Distribution> &rows,
                                                     std::vector<Renormalization> *adjusted) {
    std::map<std::string, Distribution> out;
    for (const auto &[name, row] : rows) {
        double sum = 0.0;
        for (const auto &[outcome, p] : row.probs) {
            if (!(p >= 0.0)) {
                throw Error("renormalize_rows: negative entry in row '" + name + "'");
            }
            sum += p;
        }
        if (!(sum > 0.0)) {
            throw Error("renormalize_rows: row '" + name + "' has zero mass");
        }
        Distribution d;
        for (const auto &[outcome, p] : row.probs) {
            d.probs[outcome] = p / sum;
        }
        out[name] = std::move(d);
        if (adjusted && std::abs(sum - 1.0) > 1e-12) {
            adjusted->push_back({name, sum});
        }
    }
    return out;
}

}  // namespace qcb
