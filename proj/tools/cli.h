// Copyright 2026 The sqir Authors
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

#include <ostream>
#include <string>
#include <vector>

namespace sqir::cli {

inline constexpr int kExitOk = 0;
/// Check failed, circuit ill-typed, or construct not exportable.
inline constexpr int kExitFailure = 1;
/// Bad arguments, unreadable file, or parse error.
inline constexpr int kExitUsage = 2;

/// Runs the tool on args (without argv[0]).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqir::cli
