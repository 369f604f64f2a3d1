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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcb::detail {

/// Text of a config compiled into the library from core/data/<kind>s/.
/// kind is "device" or "noise".
std::optional<std::string_view> bundled_text(std::string_view kind, std::string_view name);
std::vector<std::string> bundled_names(std::string_view kind);

std::string read_text_file(const std::string &path);

}  // namespace qcb::detail
