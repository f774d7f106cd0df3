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

#include <gtest/gtest.h>

#include <limits>
#include <numeric>

#include "growth/arith.hpp"
#include "growth/errors.hpp"

namespace growth {
namespace {

const RootSystem& a1() {
  static const RootSystem rs = build_root_system("A1");
  return rs;
}

TEST(OrderFp, Examples) {
  EXPECT_EQ(order_fp(a1(), 2), 6);
  EXPECT_EQ(order_fp(build_root_system("A2"), 2), 168);
  EXPECT_EQ(order_fp(build_root_system("C2"), 2), 720);
  // classical tables
  EXPECT_EQ(order_fp(build_root_system("A2"), 3), 5616);
  EXPECT_EQ(order_fp(build_root_system("C2"), 3), 51840);
  EXPECT_EQ(order_fp(build_root_system("G2"), 2), 12096);
}

TEST(OrderFp, RejectsComposite) {
  EXPECT_THROW(order_fp(a1(), 4), DomainError);
  EXPECT_THROW(order_fp(a1(), 1), DomainError);
  EXPECT_THROW(order_zpk(a1(), 9, 1), DomainError);
}

TEST(OrderFp, SpecializesForSL2) {
  for (std::uint64_t p = 2; p <= 1000; ++p) {
    if (!is_prime(p)) continue;
    const BigInt bp = p;
    EXPECT_EQ(order_fp(a1(), p), bp * (bp * bp - 1)) << p;
  }
}

TEST(OrderFp, ExceedsSixtyFourBitsForE8) {
  const BigInt order = order_fp(build_root_system("E8"), 3);
  EXPECT_GT(order, std::numeric_limits<std::uint64_t>::max());
  EXPECT_EQ(order % ipow(BigInt(3), 120), 0);
}

TEST(OrderZpk, Examples) {
  EXPECT_EQ(order_zpk(a1(), 2, 1), 6);
  EXPECT_EQ(order_zpk(a1(), 2, 2), 48);
  EXPECT_EQ(order_zpk(a1(), 3, 2), 648);
  EXPECT_THROW(order_zpk(a1(), 2, 0), DomainError);
}

TEST(OrderZpk, FiltrationQuotientsHaveSizePToTheD) {
  for (const std::string& label : {"A1", "A3", "B2", "G2", "D4"}) {
    const RootSystem rs = build_root_system(label);
    for (std::uint64_t p : {2, 3, 5, 7}) {
      for (std::uint32_t k = 2; k <= 5; ++k) {
        const BigInt hi = order_zpk(rs, p, k);
        const BigInt lo = order_zpk(rs, p, k - 1);
        EXPECT_EQ(hi % lo, 0);
        EXPECT_EQ(hi / lo, ipow(BigInt(p), dimension(rs)));
        EXPECT_EQ(hi % ipow(BigInt(p), (k - 1) * dimension(rs)), 0);
      }
    }
  }
}

TEST(OrderZm, Examples) {
  EXPECT_EQ(order_zm(a1(), 1), 1);
  EXPECT_EQ(order_zm(a1(), 6), 144);
  EXPECT_EQ(order_zm(a1(), 12), 1152);
  EXPECT_THROW(order_zm(a1(), 0), DomainError);
}

TEST(OrderZm, MultiplicativeOnCoprimeModuli) {
  const RootSystem c2 = build_root_system("C2");
  for (std::uint64_t m = 1; m <= 40; ++m) {
    for (std::uint64_t n = 1; n <= 40; ++n) {
      if (std::gcd(m, n) != 1) continue;
      EXPECT_EQ(order_zm(c2, m * n), order_zm(c2, m) * order_zm(c2, n));
    }
  }
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_order(MatrixFamily::SpecialLinear, 2, 2), 6U);
  EXPECT_EQ(brute_force_order(MatrixFamily::SpecialLinear, 2, 4), 48U);
  EXPECT_EQ(brute_force_order(MatrixFamily::Symplectic, 4, 2), 720U);
}

TEST(BruteForce, SL2MatchesClassicalCount) {
  // |SL_2(Z/m)| = m^3 prod_{p | m} (1 - p^{-2})
  for (std::uint64_t m = 1; m <= 12; ++m) {
    BigRational expected = BigRational(m * m * m);
    for (const auto& pp : factorize(BigInt(m)).factors) {
      expected *= 1 - BigRational(1, pp.prime * pp.prime);
    }
    EXPECT_EQ(BigRational(brute_force_order(MatrixFamily::SpecialLinear, 2, m)), expected) << m;
    EXPECT_EQ(BigInt(brute_force_order(MatrixFamily::SpecialLinear, 2, m)), order_zm(a1(), m)) << m;
  }
}

TEST(BruteForce, FormulaAgreesOnSmallCases) {
  const RootSystem a2 = build_root_system("A2");
  for (std::uint64_t m : {2, 3}) {
    EXPECT_EQ(BigInt(brute_force_order(MatrixFamily::SpecialLinear, 3, m)), order_zm(a2, m));
  }
  EXPECT_EQ(brute_force_order(MatrixFamily::SpecialLinear, 1, 7), 1U);
}

TEST(BruteForce, GuardsAndDomain) {
  EXPECT_THROW(brute_force_order(MatrixFamily::SpecialLinear, 3, 9), ResourceError);
  EXPECT_THROW(brute_force_order(MatrixFamily::SpecialLinear, 2, 5, 100), ResourceError);
  EXPECT_THROW(brute_force_order(MatrixFamily::SpecialLinear, 4, 2), DomainError);
  EXPECT_THROW(brute_force_order(MatrixFamily::Symplectic, 2, 2), DomainError);
  EXPECT_THROW(brute_force_order(MatrixFamily::SpecialLinear, 2, 0), DomainError);
}

TEST(OrderBound, Examples) {
  const BoundReport r2 = check_order_bound(a1(), 2);
  EXPECT_TRUE(r2.holds);
  EXPECT_EQ(r2.lhs, 6);
  EXPECT_EQ(r2.rhs, 8);
  const BoundReport r3 = check_order_bound(a1(), 3);
  EXPECT_EQ(r3.lhs, 24);
  EXPECT_EQ(r3.rhs, 27);
  const BoundReport g2 = check_order_bound(build_root_system("G2"), 2);
  EXPECT_TRUE(g2.holds);
  EXPECT_EQ(g2.rhs, ipow(BigInt(2), 14));
}

}  // namespace
}  // namespace growth
