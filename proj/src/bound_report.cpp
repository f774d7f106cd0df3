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

#include "growth/bound_report.hpp"

#include <sstream>
#include <utility>

namespace growth {

BoundReport make_report(std::string name, BigRational lhs, BigRational rhs,
                        std::map<std::string, std::string> context) {
  BoundReport report;
  report.name = std::move(name);
  report.holds = lhs <= rhs;
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  report.context = std::move(context);
  return report;
}

std::string describe(const BoundReport& report) {
  std::ostringstream out;
  out << report.name;
  for (const auto& [key, value] : report.context) out << ' ' << key << '=' << value;
  out << ": " << to_decimal(report.lhs) << " <= " << to_decimal(report.rhs)
      << (report.holds ? " [pass]" : " [FAIL]");
  return out.str();
}

}  // namespace growth
