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

#include "growth/parahoric.hpp"

#include <vector>

#include "growth/arith.hpp"
#include "growth/errors.hpp"
#include "growth/parallel.hpp"

namespace growth {
namespace {

void require_prime(std::uint64_t p, const char* op) {
  if (!is_prime(p)) throw DomainError(std::string(op) + ": " + std::to_string(p) + " is not prime");
}

std::uint64_t ceil_positive(const BigRational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  return static_cast<std::uint64_t>((num + den - 1) / den);
}

}  // namespace

CocharacterCount count_admissible_cocharacters(const RootSystem& rs, std::uint64_t cutoff,
                                               const CocharacterGuard& guard) {
  if (cutoff > guard.max_cutoff) {
    throw ResourceError("count_admissible_cocharacters: cutoff " + std::to_string(cutoff) + " exceeds guard " +
                        std::to_string(guard.max_cutoff));
  }
  CocharacterCount result;
  result.label = rs.label;
  result.cutoff = cutoff;
  const std::uint64_t side = 2 * cutoff + 1;
  result.box_bound = ipow(BigInt(side), static_cast<std::uint64_t>(rs.rank));
  if (rs.rank > guard.max_rank) return result;
  if (result.box_bound > guard.max_iterations) {
    throw ResourceError("count_admissible_cocharacters: " + result.box_bound.str() + " box points exceed guard");
  }

  const int l = rs.rank;
  const auto c = static_cast<long long>(cutoff);
  // Split on the first coefficient; each slice is scanned as an odometer.
  std::vector<std::uint64_t> slices(side, 0);
  parallel_for(side, [&](std::size_t slice) {
    std::vector<long long> a(l, -c);
    a[0] = static_cast<long long>(slice) - c;
    std::uint64_t local = 0;
    while (true) {
      bool admissible = true;
      for (const RootVector& root : rs.positive_roots) {
        const long long v = pairing(a, root);
        if (v > c || v < -c) {
          admissible = false;
          break;
        }
      }
      if (admissible) ++local;
      int idx = 1;
      while (idx < l && ++a[idx] > c) {
        a[idx] = -c;
        ++idx;
      }
      if (idx >= l) break;
    }
    slices[slice] = local;
  });
  BigInt total = 0;
  for (auto s : slices) total += s;
  result.exact = total;
  return result;
}

BoundReport lambda_bound(const RootSystem& rs, std::uint64_t k, const CocharacterGuard& guard) {
  const CocharacterCount count = count_admissible_cocharacters(rs, k + 1, guard);
  const BigInt base = 2 * k + 3;
  const BigInt lhs = count.exact.value_or(count.box_bound);
  BoundReport report = make_report("lambda_bound", BigRational(lhs), BigRational(ipow(base, dimension(rs))),
                                   {{"type", rs.label}, {"k", std::to_string(k)}});
  report.context["sharper_bound"] = ipow(base, static_cast<std::uint64_t>(rs.rank)).str();
  report.context["exact"] = count.exact ? count.exact->str() : "unavailable";
  return report;
}

BoundReport per_prime_bound(const RootSystem& rs, std::uint64_t p, std::uint64_t k) {
  require_prime(p, "per_prime_bound");
  const std::uint64_t d = dimension(rs);
  const BigInt bp = p;
  std::map<std::string, std::string> context{{"type", rs.label}, {"p", std::to_string(p)}, {"k", std::to_string(k)}};
  if (k == 0) {
    // only G(Z_p) itself
    return make_report("per_prime_bound", BigRational(1), BigRational(1), std::move(context));
  }
  const BigInt value = BigInt(d + 1) * ipow(bp, (3 + d) * k);
  const BigInt crude = ipow(bp, (3 + 2 * d) * k);
  context["conjugacy_class_estimate"] = (ipow(bp, k * d) * ipow(BigInt(2 * k + 3), d)).str();
  return make_report("per_prime_bound", BigRational(value), BigRational(crude), std::move(context));
}

BoundReport check_two_k_plus_three(std::uint64_t p, std::uint64_t k) {
  if (k < 1) throw DomainError("check_two_k_plus_three: k must be >= 1");
  if (p < 2) throw DomainError("check_two_k_plus_three: p must be >= 2");
  const BigInt lhs = 2 * k + 3;
  const BigInt cruder = ipow(BigInt(p), 3 * k);
  std::map<std::string, std::string> context{{"p", std::to_string(p)}, {"k", std::to_string(k)}, {"p^3k", cruder.str()}};
  if (p >= 5) {
    BoundReport report = make_report("two_k_plus_three", BigRational(lhs), BigRational(ipow(BigInt(p), k)), context);
    report.holds = report.holds && lhs <= cruder;
    return report;
  }
  return make_report("two_k_plus_three", BigRational(lhs), BigRational(cruder), std::move(context));
}

BigInt maximal_lattice_bound(const RootSystem& rs, std::uint64_t m) {
  if (m < 1) throw DomainError("maximal_lattice_bound: m must be >= 1");
  const BigInt value = ipow(BigInt(m), 3 + 2 * dimension(rs));
  if (value != maximal_lattice_bound_per_prime(rs, m)) {
    throw DomainError("maximal_lattice_bound: per-prime product disagrees (internal inconsistency)");
  }
  return value;
}

BigInt maximal_lattice_bound_per_prime(const RootSystem& rs, std::uint64_t m) {
  if (m < 1) throw DomainError("maximal_lattice_bound_per_prime: m must be >= 1");
  const std::uint64_t exponent = 3 + 2 * dimension(rs);
  BigInt product = 1;
  for (const auto& pp : factorize(BigInt(m)).factors) product *= ipow(pp.prime, exponent * pp.exponent);
  return product;
}

BigInt upper_bound_profile(const RootSystem& rs, std::uint64_t n, std::span<const BigInt> subgroup_growth,
                           const BigRational& c_const, const BigRational& d_const) {
  if (n < 1) throw DomainError("upper_bound_profile: n must be >= 1");
  if (c_const <= 0 || d_const <= 0) throw DomainError("upper_bound_profile: constants must be positive");
  const std::uint64_t terms = ceil_positive(c_const * n);
  const std::uint64_t s_index = ceil_positive(d_const * n);
  if (subgroup_growth.size() < s_index) {
    throw DomainError("upper_bound_profile: subgroup growth data has " + std::to_string(subgroup_growth.size()) +
                      " entries, need " + std::to_string(s_index));
  }
  const std::uint64_t m0 = 3 + 2 * dimension(rs);
  BigInt power_sum = 0;
  for (std::uint64_t j = 1; j <= terms; ++j) power_sum += ipow(BigInt(j), m0);
  return power_sum * subgroup_growth[s_index - 1];
}

}  // namespace growth
