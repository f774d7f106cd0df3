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

#include "growth/chevalley.hpp"

#include <array>
#include <string>
#include <vector>

#include "growth/arith.hpp"
#include "growth/errors.hpp"
#include "growth/parallel.hpp"

namespace growth {
namespace {

void require_prime(std::uint64_t p, const char* op) {
  if (!is_prime(p)) throw DomainError(std::string(op) + ": " + std::to_string(p) + " is not prime");
}

using Matrix4 = std::array<std::array<std::int64_t, 4>, 4>;

std::int64_t det_mod(const Matrix4& a, int n, std::int64_t m) {
  switch (n) {
    case 1:
      return a[0][0] % m;
    case 2:
      return ((a[0][0] * a[1][1] - a[0][1] * a[1][0]) % m + m) % m;
    case 3: {
      const std::int64_t v = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                             a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                             a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
      return (v % m + m) % m;
    }
    default: {
      // cofactor expansion along the first row
      std::int64_t v = 0;
      for (int c = 0; c < 4; ++c) {
        Matrix4 minor{};
        for (int r = 1; r < 4; ++r) {
          int cc = 0;
          for (int k = 0; k < 4; ++k) {
            if (k == c) continue;
            minor[r - 1][cc++] = a[r][k];
          }
        }
        const std::int64_t term = a[0][c] * det_mod(minor, 3, m) % m;
        v += (c % 2 == 0) ? term : m - term;
      }
      return v % m;
    }
  }
}

// Standard antidiagonal alternating form J = [[0, A], [-A, 0]], A = antidiag(1, 1):
// (a^T J a)_{ij} = a_{0i} a_{3j} + a_{1i} a_{2j} - a_{2i} a_{1j} - a_{3i} a_{0j}.
bool preserves_form(const Matrix4& a, std::int64_t m) {
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const std::int64_t s = a[0][i] * a[3][j] + a[1][i] * a[2][j] - a[2][i] * a[1][j] - a[3][i] * a[0][j];
      const std::int64_t target = (i + j == 3) ? (i < j ? 1 : -1) : 0;
      if (((s - target) % m + m) % m != 0) return false;
    }
  }
  return true;
}

}  // namespace

BigInt order_fp(const RootSystem& rs, std::uint64_t p) {
  require_prime(p, "order_fp");
  const BigInt bp = p;
  BigInt result = ipow(bp, rs.num_positive_roots());
  for (int d : rs.degrees) result *= ipow(bp, static_cast<std::uint64_t>(d)) - 1;
  return result;
}

BigInt order_zpk(const RootSystem& rs, std::uint64_t p, std::uint32_t k) {
  if (k < 1) throw DomainError("order_zpk: k must be >= 1");
  return ipow(BigInt(p), (k - 1) * dimension(rs)) * order_fp(rs, p);
}

BigInt order_zm(const RootSystem& rs, std::uint64_t m) {
  if (m < 1) throw DomainError("order_zm: m must be >= 1");
  BigInt result = 1;
  for (const auto& pp : factorize(BigInt(m)).factors) {
    result *= order_zpk(rs, static_cast<std::uint64_t>(pp.prime), pp.exponent);
  }
  return result;
}

std::uint64_t brute_force_order(MatrixFamily family, int n, std::uint64_t m, std::uint64_t max_matrices) {
  if (m < 1) throw DomainError("brute_force_order: modulus must be >= 1");
  if (family == MatrixFamily::SpecialLinear && (n < 1 || n > 3)) {
    throw DomainError("brute_force_order: special linear family supports n <= 3");
  }
  if (family == MatrixFamily::Symplectic && n != 4) {
    throw DomainError("brute_force_order: symplectic family supports n = 4 only");
  }
  const int cells = n * n;
  BigInt total = ipow(BigInt(m), static_cast<std::uint64_t>(cells));
  if (total > max_matrices) {
    throw ResourceError("brute_force_order: " + total.str() + " matrices exceed the guard of " +
                        std::to_string(max_matrices));
  }
  if (m == 1) return 1;  // the zero ring: a single matrix, trivially in the group
  const auto count = static_cast<std::uint64_t>(total);
  const auto mod = static_cast<std::int64_t>(m);

  // Split on the first row so that blocks can run independently.
  const std::uint64_t first_rows = static_cast<std::uint64_t>(ipow(BigInt(m), static_cast<std::uint64_t>(n)));
  const std::uint64_t per_block = count / first_rows;
  std::vector<std::uint64_t> hits(first_rows, 0);
  parallel_for(first_rows, [&](std::size_t block) {
    Matrix4 a{};
    std::uint64_t code = block;
    for (int c = 0; c < n; ++c) {
      a[0][c] = static_cast<std::int64_t>(code % m);
      code /= m;
    }
    std::uint64_t local = 0;
    std::vector<std::int64_t> digits(cells - n, 0);
    for (std::uint64_t t = 0; t < per_block; ++t) {
      for (int idx = 0; idx < cells - n; ++idx) a[1 + idx / n][idx % n] = digits[idx];
      const bool member = family == MatrixFamily::SpecialLinear ? det_mod(a, n, mod) == 1 % mod
                                                                : preserves_form(a, mod) && det_mod(a, 4, mod) == 1 % mod;
      if (member) ++local;
      for (int idx = 0; idx < cells - n; ++idx) {
        if (++digits[idx] < mod) break;
        digits[idx] = 0;
      }
    }
    hits[block] = local;
  });
  std::uint64_t sum = 0;
  for (auto h : hits) sum += h;
  return sum;
}

BoundReport check_order_bound(const RootSystem& rs, std::uint64_t p) {
  return make_report("order_bound", BigRational(order_fp(rs, p)), BigRational(ipow(BigInt(p), dimension(rs))),
                     {{"type", rs.label}, {"p", std::to_string(p)}});
}

}  // namespace growth
