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
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "growth/lattice.hpp"

namespace growth {

/// Seeded property suites over random subgroups, shared by the CLI `check`
/// subcommand and the acceptance suite.
struct PropertyTally {
  explicit PropertyTally(std::string property) : name(std::move(property)) {}

  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& detail);
};

struct SuiteResult {
  std::vector<PropertyTally> properties;
  bool passed() const;
};

using Rng = std::mt19937_64;

RationalCyclic random_cyclic(Rng& rng, std::uint64_t max_entry = 12);
RationalLattice random_lattice(Rng& rng, std::size_t dim, std::int64_t max_entry = 5, std::int64_t max_denom = 4);

/// Random overlattice of `base` whose index is uniform in [1, max_index].
RationalLattice random_overlattice(Rng& rng, const RationalLattice& base, std::uint64_t max_index = 3);

std::vector<RationalCyclic> random_chain(Rng& rng, const RationalCyclic& start, std::size_t length);
std::vector<RationalLattice> random_chain(Rng& rng, const RationalLattice& start, std::size_t length);

/// Symmetry, identity of indiscernibles, multiplicative triangle inequality,
/// geodesic length and chain length, each on `samples` random inputs for
/// RationalCyclic and for dim-2 RationalLattice.
SuiteResult check_metric_suite(std::size_t samples, std::uint64_t seed);

/// |ball(A, n)| <= |ball(B, c(A,B) n)| on `cases` random pairs in dim 1 and 2
/// with c(A,B) n <= max_scaled.
SuiteResult check_transfer_suite(std::size_t cases, std::uint64_t seed, std::uint64_t max_scaled = 64);

}  // namespace growth
