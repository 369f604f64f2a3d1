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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qcb/protocols.hpp"

namespace qcb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable naming the default output directory.
inline constexpr const char *kOutputDirEnv = "QCBENCH_OUTPUT_DIR";

/// Inputs shared by every subcommand. Empty fields fall back to the plan
/// file and then to per-command defaults.
struct RunConfig {
    std::string device;
    std::string noise;
    std::string plan;
    std::string output_dir;
    std::optional<std::uint64_t> seed;
    std::optional<Backend> backend;
    std::optional<std::uint64_t> shots;
};

/// Runs `qcbench` with `args` (without the program name). CSV goes to
/// `--output`, else `<dir>/<command>.csv` when an output directory is
/// known, else `out`. Diagnostics go to `err`. Returns kExitOk,
/// kExitDomain or kExitUsage.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qcb::cli
