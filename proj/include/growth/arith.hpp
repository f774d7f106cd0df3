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
#include <vector>

#include "growth/bigint.hpp"
#include "growth/bound_report.hpp"

namespace growth {

struct PrimePower {
  BigInt prime;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod prime^exponent, primes strictly increasing.
struct Factorization {
  BigInt n;
  std::vector<PrimePower> factors;
};

/// Deterministic trial division. Throws DomainError for n < 1.
Factorization factorize(const BigInt& n);

/// Deterministic Miller-Rabin over the bases that are exact for 64-bit input.
bool is_prime(std::uint64_t n);
bool is_prime(const BigInt& n);

std::uint32_t omega(const BigInt& n);
BigInt divisor_count(const BigInt& n);

/// Number of subgroups D of R with c(Z, D) = n, i.e. 2^omega(n).
BigInt cn_rank1(const BigInt& n);

/// Exact c_k and prefix sums C_k of the rank-1 commensurability growth.
struct GrowthSeries {
  std::uint64_t upto = 0;
  std::vector<std::uint64_t> c;  // c[k-1] = c_k
  std::vector<std::uint64_t> C;  // C[k-1] = C_k
};

GrowthSeries growth_series_rank1(std::uint64_t n);

std::uint64_t sum_omega(std::uint64_t n);
std::uint64_t sum_divisor_count(std::uint64_t n);

/// Sieve tables indexed 0..n (entry 0 unused, set to 0).
std::vector<std::uint8_t> omega_table(std::uint64_t n);
std::vector<std::uint32_t> divisor_count_table(std::uint64_t n);

/// Checks the constant-free chain k <= C_k <= sum_{j<=k} d(j) for every
/// k <= series.upto and records, over k in [n_min, upto],
///   measures["upper_ratio_max"] = max C_k / (k log k)
///   measures["lower_ratio_min"] = min C_k / (k (log k)^{log 2})
/// (with the attaining k under "*_at"). lhs is the worst chain violation,
/// rhs is 0. Throws DomainError unless 3 <= n_min <= series.upto.
BoundReport check_sandwich_bounds(const GrowthSeries& series, std::uint64_t n_min);

inline constexpr double kEulerGamma = 0.57721566490153286061;

/// sum_{k<=n} d(k) - n log n - (2 gamma - 1) n.
double dirichlet_remainder(std::uint64_t n, std::uint64_t divisor_sum);

/// (sum_{k<=n} omega(k) - n log log n) / n, the empirical stand-in for the
/// Mertens-type constant.
double omega_sum_constant(std::uint64_t n, std::uint64_t omega_sum);

}  // namespace growth
