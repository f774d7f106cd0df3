/*
 * Copyright 2026 The Growth Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

namespace growth::cli {

enum class Subcommand { Rank1, Ball, RootSys, Order, Parahoric, Check };
enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
  Subcommand subcommand = Subcommand::Rank1;
  std::map<std::string, std::string> parameters;
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitBoundFailed = 1;
inline constexpr int kExitDomainError = 2;
inline constexpr int kExitResourceError = 3;

inline constexpr const char* kVersion = "0.1.0";

/// Executes one configured run. Reports go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses a `growth ...` command line into a RunConfig and runs it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace growth::cli
