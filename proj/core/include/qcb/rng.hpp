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
#include <random>

namespace qcb {

/// Seedable random source with a fixed, platform-independent bit stream.
///
/// Raw 64-bit words come from std::mt19937_64, whose output sequence is
/// pinned by the C++ standard. Doubles are formed from the top 53 bits of one
/// word, (w >> 11) * 2^-53, so no implementation-defined distribution object
/// is involved. Child streams (per shot, per experiment cell) are seeded with
/// SplitMix64(master + stream * golden_gamma), which makes results independent
/// of execution order and thread count.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }

    std::uint64_t next_u64() {
        return engine_();
    }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// True with probability p.
    bool bernoulli(double p) {
        return uniform() < p;
    }

    static std::uint64_t splitmix64(std::uint64_t x);
    static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

  private:
    std::mt19937_64 engine_;
};

}  // namespace qcb
