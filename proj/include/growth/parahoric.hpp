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
#include <optional>
#include <span>
#include <string>

#include "growth/bigint.hpp"
#include "growth/bound_report.hpp"
#include "growth/rootsys.hpp"

namespace growth {

/// Cocharacters a = sum a_b w_b^vee with |<a, alpha>| <= cutoff for every
/// positive root alpha (both alpha and -alpha are roots).
struct CocharacterCount {
  std::string label;
  std::uint64_t cutoff = 0;
  std::optional<BigInt> exact;  // empty when the rank is beyond the exhaustive scan
  BigInt box_bound;             // (2 cutoff + 1)^l
};

struct CocharacterGuard {
  int max_rank = 4;
  std::uint64_t max_cutoff = 100;
  std::uint64_t max_iterations = 200'000'000;
};

/// Exhaustive scan over the box [-c, c]^l for rank <= guard.max_rank. Higher
/// ranks return the box bound only. Throws ResourceError past the guards.
CocharacterCount count_admissible_cocharacters(const RootSystem& rs, std::uint64_t cutoff,
                                               const CocharacterGuard& guard = {});

/// exact count at cutoff k + 1 <= (2k + 3)^d. context["sharper_bound"] holds
/// (2k + 3)^l.
BoundReport lambda_bound(const RootSystem& rs, std::uint64_t k, const CocharacterGuard& guard = {});

/// (d + 1) p^{(3+d)k} <= p^{(3+2d)k} for k >= 1; both sides 1 at k = 0.
BoundReport per_prime_bound(const RootSystem& rs, std::uint64_t p, std::uint64_t k);

/// 2k + 3 <= p^k (p >= 5) and 2k + 3 <= p^{3k} (all p).
BoundReport check_two_k_plus_three(std::uint64_t p, std::uint64_t k);

/// m^{3 + 2d}, the bound on maximal lattices containing the level-m
/// principal congruence subgroup.
BigInt maximal_lattice_bound(const RootSystem& rs, std::uint64_t m);

/// prod over p^k || m of p^{(3+2d)k}.
BigInt maximal_lattice_bound_per_prime(const RootSystem& rs, std::uint64_t m);

/// (sum_{j=1}^{ceil(c n)} j^{M_0}) * s_{ceil(D n)} with M_0 = 3 + 2d;
/// `subgroup_growth[i]` is s_{i+1}. Throws DomainError when s is too short or
/// a constant is not positive.
BigInt upper_bound_profile(const RootSystem& rs, std::uint64_t n, std::span<const BigInt> subgroup_growth,
                           const BigRational& c_const = 1, const BigRational& d_const = 1);

}  // namespace growth
