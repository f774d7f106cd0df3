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
#include <span>
#include <string>
#include <vector>

namespace growth {

/// A root in the basis of simple roots.
using RootVector = std::vector<int>;

/// Combinatorial data of a reduced irreducible root system. Immutable after
/// build(); cartan(i, j) = <alpha_i^vee, alpha_j> (row i is the coroot).
struct RootSystem {
  std::string label;
  char family = 'A';
  int rank = 0;
  std::vector<std::vector<int>> cartan;
  std::vector<RootVector> positive_roots;  // sorted by height, simple roots first
  std::vector<int> degrees;                // d_1 <= ... <= d_l

  std::size_t num_positive_roots() const { return positive_roots.size(); }
  const RootVector& highest_root() const { return positive_roots.back(); }
};

/// Parses "A3", "B2", "E8", ... and builds the positive roots by closure
/// from the simple roots. Throws DomainError for unsupported labels.
RootSystem build_root_system(const std::string& label);

/// Cartan matrix of a type, Bourbaki numbering.
std::vector<std::vector<int>> cartan_matrix(char family, int rank);

/// Degrees of the fundamental invariants of the Weyl group.
std::vector<int> weyl_degrees(char family, int rank);

/// dim G = 2N + l.
std::uint64_t dimension(const RootSystem& rs);

/// <sum_b a_b w_b^vee, alpha> = sum_b a_b * (coefficient of alpha_b in alpha).
long long pairing(std::span<const long long> coweight_coeffs, const RootVector& root);

/// Every label in the supported families with rank <= max_rank.
std::vector<std::string> supported_labels(int max_rank);

}  // namespace growth
