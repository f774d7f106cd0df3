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

#include "growth/bigint.hpp"
#include "growth/bound_report.hpp"
#include "growth/rootsys.hpp"

namespace growth {

/// #G(F_p) = p^N prod_i (p^{d_i} - 1). Throws DomainError for non-prime p.
BigInt order_fp(const RootSystem& rs, std::uint64_t p);

/// #G(Z/p^k) = p^{(k-1) d} #G(F_p): the congruence filtration has k - 1
/// quotients of size p^d on top of G(F_p).
BigInt order_zpk(const RootSystem& rs, std::uint64_t p, std::uint32_t k);

/// #G(Z/m) as the CRT product of the prime-power orders; m = 1 gives 1.
BigInt order_zm(const RootSystem& rs, std::uint64_t m);

enum class MatrixFamily { SpecialLinear, Symplectic };

/// Exhaustive count of SL_n(Z/m) (n <= 3) or Sp_4(Z/m) (n = 4, standard
/// antidiagonal alternating form, det = 1). Throws ResourceError when
/// m^{n^2} exceeds max_matrices.
std::uint64_t brute_force_order(MatrixFamily family, int n, std::uint64_t m,
                                std::uint64_t max_matrices = 100'000'000);

/// order_fp(rs, p) <= p^{dim G}.
BoundReport check_order_bound(const RootSystem& rs, std::uint64_t p);

}  // namespace growth
