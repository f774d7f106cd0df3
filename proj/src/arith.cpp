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

#include "growth/arith.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "growth/errors.hpp"

namespace growth {
namespace {

bool fits_u64(const BigInt& n) { return n >= 0 && n <= std::numeric_limits<std::uint64_t>::max(); }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1U;
  }
  return result;
}

void require_positive(const BigInt& n, const char* op) {
  if (n < 1) throw DomainError(std::string(op) + ": argument must be >= 1, got " + n.str());
}

void factor_u64(std::uint64_t n, std::vector<PrimePower>& out) {
  auto take = [&](std::uint64_t p) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e != 0) out.push_back({BigInt(p), e});
  };
  take(2);
  take(3);
  // 6k +- 1 wheel
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) out.push_back({BigInt(n), 1});
}

void factor_big(BigInt n, std::vector<PrimePower>& out) {
  for (BigInt p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e != 0) out.push_back({p, e});
    if (fits_u64(n)) {
      // finish on the fast path; primes found there are all > p
      std::vector<PrimePower> rest;
      factor_u64(static_cast<std::uint64_t>(n), rest);
      out.insert(out.end(), rest.begin(), rest.end());
      return;
    }
  }
  if (n > 1) out.push_back({n, 1});
}

}  // namespace

Factorization factorize(const BigInt& n) {
  require_positive(n, "factorize");
  Factorization f;
  f.n = n;
  if (fits_u64(n)) {
    factor_u64(static_cast<std::uint64_t>(n), f.factors);
  } else {
    factor_big(n, f.factors);
  }
  return f;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime(static_cast<std::uint64_t>(n));
  const Factorization f = factorize(n);
  return f.factors.size() == 1 && f.factors.front().exponent == 1;
}

std::uint32_t omega(const BigInt& n) { return static_cast<std::uint32_t>(factorize(n).factors.size()); }

BigInt divisor_count(const BigInt& n) {
  BigInt result = 1;
  for (const auto& pp : factorize(n).factors) result *= pp.exponent + 1;
  return result;
}

BigInt cn_rank1(const BigInt& n) { return ipow(BigInt(2), omega(n)); }

std::vector<std::uint8_t> omega_table(std::uint64_t n) {
  std::vector<std::uint8_t> w(n + 1, 0);
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (w[p] != 0) continue;  // composite: already hit by a smaller prime
    for (std::uint64_t m = p; m <= n; m += p) ++w[m];
  }
  return w;
}

std::vector<std::uint32_t> divisor_count_table(std::uint64_t n) {
  std::vector<std::uint32_t> d(n + 1, 0);
  for (std::uint64_t k = 1; k <= n; ++k) {
    for (std::uint64_t m = k; m <= n; m += k) ++d[m];
  }
  return d;
}

GrowthSeries growth_series_rank1(std::uint64_t n) {
  if (n < 1) throw DomainError("growth_series_rank1: n must be >= 1");
  const auto w = omega_table(n);
  GrowthSeries s;
  s.upto = n;
  s.c.resize(n);
  s.C.resize(n);
  std::uint64_t running = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    s.c[k - 1] = std::uint64_t{1} << w[k];
    running += s.c[k - 1];
    s.C[k - 1] = running;
  }
  return s;
}

std::uint64_t sum_omega(std::uint64_t n) {
  if (n < 1) throw DomainError("sum_omega: n must be >= 1");
  // sum_{k<=n} omega(k) = sum_{p<=n} floor(n/p)
  std::vector<bool> composite(n + 1, false);
  std::uint64_t total = 0;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    total += n / p;
    for (std::uint64_t m = p * p; m <= n; m += p) composite[m] = true;
  }
  return total;
}

std::uint64_t sum_divisor_count(std::uint64_t n) {
  if (n < 1) throw DomainError("sum_divisor_count: n must be >= 1");
  // Dirichlet hyperbola: sum_{k<=n} d(k) = 2 sum_{k<=r} floor(n/k) - r^2
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  std::uint64_t total = 0;
  for (std::uint64_t k = 1; k <= r; ++k) total += n / k;
  return 2 * total - r * r;
}

BoundReport check_sandwich_bounds(const GrowthSeries& series, std::uint64_t n_min) {
  if (n_min < 3) throw DomainError("check_sandwich_bounds: n_min must be >= 3");
  if (series.upto < n_min || series.C.size() != series.upto) {
    throw DomainError("check_sandwich_bounds: series shorter than n_min");
  }
  const auto d = divisor_count_table(series.upto);
  // worst violation of k <= C_k <= D_k, as a signed integer
  BigInt worst = std::numeric_limits<std::int64_t>::min();
  std::uint64_t divisor_sum = 0;
  double upper_max = 0.0;
  double lower_min = std::numeric_limits<double>::infinity();
  std::uint64_t upper_at = n_min;
  std::uint64_t lower_at = n_min;
  const double log2 = std::log(2.0);
  for (std::uint64_t k = 1; k <= series.upto; ++k) {
    divisor_sum += d[k];
    const BigInt ck = series.C[k - 1];
    const BigInt excess_low = BigInt(k) - ck;
    const BigInt excess_high = ck - BigInt(divisor_sum);
    if (excess_low > worst) worst = excess_low;
    if (excess_high > worst) worst = excess_high;
    if (k < n_min) continue;
    const double x = static_cast<double>(k);
    const double lk = std::log(x);
    const double cval = static_cast<double>(series.C[k - 1]);
    const double upper = cval / (x * lk);
    const double lower = cval / (x * std::pow(lk, log2));
    if (upper > upper_max) {
      upper_max = upper;
      upper_at = k;
    }
    if (lower < lower_min) {
      lower_min = lower;
      lower_at = k;
    }
  }
  BoundReport report = make_report("rank1_sandwich_chain", BigRational(worst), BigRational(0),
                                   {{"n_min", std::to_string(n_min)}, {"upto", std::to_string(series.upto)}});
  report.measures["upper_ratio_max"] = upper_max;
  report.measures["upper_ratio_max_at"] = static_cast<double>(upper_at);
  report.measures["lower_ratio_min"] = lower_min;
  report.measures["lower_ratio_min_at"] = static_cast<double>(lower_at);
  return report;
}

double dirichlet_remainder(std::uint64_t n, std::uint64_t divisor_sum) {
  const double x = static_cast<double>(n);
  return static_cast<double>(divisor_sum) - x * std::log(x) - (2.0 * kEulerGamma - 1.0) * x;
}

double omega_sum_constant(std::uint64_t n, std::uint64_t omega_sum) {
  const double x = static_cast<double>(n);
  return (static_cast<double>(omega_sum) - x * std::log(std::log(x))) / x;
}

}  // namespace growth
