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

#include <cmath>
#include <concepts>
#include <cstdint>
#include <span>
#include <vector>

#include "growth/bound_report.hpp"
#include "growth/errors.hpp"
#include "growth/lattice.hpp"

namespace growth {

/// A family of pairwise commensurable subgroups with exact intersection and
/// index. Both RationalCyclic and RationalLattice model it.
template <class G>
concept SubgroupFamily = std::totally_ordered<G> && requires(const G& a, const G& b) {
  { intersect(a, b) } -> std::same_as<G>;
  { contains(a, b) } -> std::same_as<bool>;
  { index_in(a, b) } -> std::same_as<std::uint64_t>;
};

/// c(A, B) = [A : A∩B] [B : A∩B].
struct CommIndex {
  std::uint64_t left_index = 1;
  std::uint64_t right_index = 1;
  std::uint64_t value = 1;

  friend bool operator==(const CommIndex&, const CommIndex&) = default;
};

template <SubgroupFamily G>
CommIndex comm_index(const G& a, const G& b) {
  const G meet = intersect(a, b);
  CommIndex c;
  c.left_index = index_in(meet, a);
  c.right_index = index_in(meet, b);
  c.value = checked_mul(c.left_index, c.right_index);
  return c;
}

/// log c(A, B). Only for reporting; comparisons use comm_index().value.
template <SubgroupFamily G>
double distance(const G& a, const G& b) {
  return std::log(static_cast<double>(comm_index(a, b).value));
}

template <SubgroupFamily G>
struct GeodesicPath {
  std::vector<G> vertices;
  std::uint64_t length = 1;  // product of edge weights
};

/// The path A -> A∩B -> B, with repeated vertices merged.
template <SubgroupFamily G>
GeodesicPath<G> geodesic(const G& a, const G& b) {
  GeodesicPath<G> path;
  path.vertices.push_back(a);
  const G meet = intersect(a, b);
  if (meet != a && meet != b) path.vertices.push_back(meet);
  if (b != a) path.vertices.push_back(b);
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    path.length = checked_mul(path.length, comm_index(path.vertices[i], path.vertices[i + 1]).value);
  }
  return path;
}

/// Length of an ascending chain H_1 ⊆ H_2 ⊆ ... ⊆ H_n: the product of the
/// successive indices. Throws DomainError on an empty or non-nested chain.
template <SubgroupFamily G>
std::uint64_t chain_length(std::span<const G> chain) {
  if (chain.empty()) throw DomainError("chain_length: empty chain");
  std::uint64_t length = 1;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!contains(chain[i + 1], chain[i])) {
      throw DomainError("chain_length: element " + std::to_string(i) + " is not contained in its successor");
    }
    length = checked_mul(length, index_in(chain[i], chain[i + 1]));
  }
  return length;
}

/// Resource guards for ball enumeration.
struct BallGuard {
  std::size_t max_dim = 3;
  std::uint64_t max_n = 1000;
  std::uint64_t max_cyclic_n = 10'000'000;
};

/// {Δ : c(gamma, Δ) <= n}, sorted, canonical, duplicate-free.
std::vector<RationalCyclic> enumerate_ball(const RationalCyclic& gamma, std::uint64_t n, const BallGuard& guard = {});
std::vector<RationalLattice> enumerate_ball(const RationalLattice& gamma, std::uint64_t n, const BallGuard& guard = {});

/// |ball(A, n)| <= |ball(B, c(A,B) n)|.
template <SubgroupFamily G>
BoundReport check_transfer_inequality(const G& a, const G& b, std::uint64_t n, const BallGuard& guard = {}) {
  const std::uint64_t c = comm_index(a, b).value;
  const std::uint64_t scaled = checked_mul(c, n);
  const auto left = enumerate_ball(a, n, guard).size();
  const auto right = enumerate_ball(b, scaled, guard).size();
  return make_report("transfer_inequality", BigRational(left), BigRational(right),
                     {{"A", a.to_string()}, {"B", b.to_string()}, {"n", std::to_string(n)}, {"c", std::to_string(c)}});
}

}  // namespace growth
