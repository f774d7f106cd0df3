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

#include "growth/comgraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "growth/parallel.hpp"

namespace growth {

std::vector<RationalCyclic> enumerate_ball(const RationalCyclic& gamma, std::uint64_t n, const BallGuard& guard) {
  if (n < 1) throw DomainError("enumerate_ball: n must be >= 1");
  if (n > guard.max_cyclic_n) throw ResourceError("enumerate_ball: n exceeds the cyclic guard " + std::to_string(guard.max_cyclic_n));
  // Δ = gamma * (u/v) with gcd(u, v) = 1 has gamma∩Δ = u*gamma and c = u*v.
  std::vector<RationalCyclic> ball;
  for (std::uint64_t u = 1; u <= n; ++u) {
    for (std::uint64_t v = 1; u * v <= n; ++v) {
      if (std::gcd(u, v) != 1) continue;
      ball.emplace_back(checked_mul(gamma.a(), u), checked_mul(gamma.b(), v));
    }
  }
  std::sort(ball.begin(), ball.end());
  return ball;
}

std::vector<RationalLattice> enumerate_ball(const RationalLattice& gamma, std::uint64_t n, const BallGuard& guard) {
  if (n < 1) throw DomainError("enumerate_ball: n must be >= 1");
  if (gamma.dim() > guard.max_dim) {
    throw ResourceError("enumerate_ball: dimension " + std::to_string(gamma.dim()) + " exceeds guard " +
                        std::to_string(guard.max_dim));
  }
  if (n > guard.max_n) {
    throw ResourceError("enumerate_ball: n = " + std::to_string(n) + " exceeds guard " + std::to_string(guard.max_n));
  }
  const std::size_t d = gamma.dim();
  // Every Δ in the ball has a unique trace M = Δ∩gamma, a sublattice of
  // index i; Δ is an overlattice of M of index j with i*j <= n.
  std::vector<std::vector<RationalLattice>> buckets(n);
  parallel_for(n, [&](std::size_t slot) {
    const std::uint64_t i = slot + 1;
    auto& out = buckets[slot];
    for_each_hnf_of_index(d, i, [&](const IntMatrix& sub) {
      const RationalLattice trace = sublattice(gamma, sub);
      for (std::uint64_t j = 1; i * j <= n; ++j) {
        for_each_hnf_of_index(d, j, [&](const IntMatrix& over) {
          RationalLattice candidate = overlattice(trace, over);
          if (intersect(candidate, gamma) == trace) out.push_back(std::move(candidate));
        });
      }
    });
  });
  std::vector<RationalLattice> ball;
  for (auto& bucket : buckets) {
    ball.insert(ball.end(), std::make_move_iterator(bucket.begin()), std::make_move_iterator(bucket.end()));
  }
  std::sort(ball.begin(), ball.end());
  return ball;
}

}  // namespace growth
