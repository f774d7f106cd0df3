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

#include <map>
#include <string>

#include "growth/bigint.hpp"

namespace growth {

/// An evaluated inequality `lhs <= rhs`. `holds` is derived, never set by
/// hand. `context` names the parameters (p, k, m, type label); `measures`
/// carries floating-point diagnostics for the asymptotic comparators only.
struct BoundReport {
  std::string name;
  BigRational lhs;
  BigRational rhs;
  bool holds = false;
  std::map<std::string, std::string> context;
  std::map<std::string, double> measures;
};

BoundReport make_report(std::string name, BigRational lhs, BigRational rhs,
                        std::map<std::string, std::string> context = {});

/// One-line human readable summary, e.g. `order_bound A1 p=2: 6 <= 8 [pass]`.
std::string describe(const BoundReport& report);

}  // namespace growth
