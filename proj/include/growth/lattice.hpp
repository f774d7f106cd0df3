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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "growth/bigint.hpp"

namespace growth {

/// Small dense row-major integer matrix. Entries are int64; every arithmetic
/// step that could wrap is checked and raises ResourceError instead.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<std::int64_t>& data() const { return data_; }

  std::vector<std::vector<std::int64_t>> to_rows() const;
  IntMatrix transpose() const;

  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Hermite normal form of the row span of `generators` (any number of rows,
/// full column rank required): upper triangular, positive diagonal, entries
/// above each pivot reduced into [0, pivot). Throws DomainError if rank < cols.
IntMatrix hermite_normal_form(const IntMatrix& generators);

/// Determinant of an upper-triangular matrix (product of the diagonal).
BigInt triangular_determinant(const IntMatrix& upper);

/// adj(H) for upper-triangular nonsingular H, i.e. det(H) * H^{-1}.
IntMatrix triangular_adjugate(const IntMatrix& upper);

/// The subgroup (1/denom) * rowspan(basis) of Q^d, always kept canonical:
/// basis in HNF, denom >= 1, gcd(denom, all basis entries) = 1.
class RationalLattice {
 public:
  /// Canonicalizes an arbitrary full-rank generating set.
  RationalLattice(std::int64_t denom, const IntMatrix& generators);

  static RationalLattice standard(std::size_t dim);  // Z^d
  static RationalLattice scaled(std::size_t dim, std::int64_t num, std::int64_t den);  // (num/den) Z^d

  std::size_t dim() const { return basis_.cols(); }
  std::int64_t denom() const { return denom_; }
  const IntMatrix& basis() const { return basis_; }

  /// Covolume numerator |det basis|; covolume is det / denom^d.
  BigInt determinant() const { return triangular_determinant(basis_); }

  std::string to_string() const;

  friend auto operator<=>(const RationalLattice&, const RationalLattice&) = default;
  friend bool operator==(const RationalLattice&, const RationalLattice&) = default;

 private:
  RationalLattice() = default;
  std::int64_t denom_ = 1;
  IntMatrix basis_;
};

/// L1 + L2 (subgroup generated by both).
RationalLattice lattice_sum(const RationalLattice& a, const RationalLattice& b);

/// Dual lattice {y : y.x in Z for all x in L}.
RationalLattice dual(const RationalLattice& lattice);

/// Canonical form of L1 ∩ L2. Throws DomainError on dimension mismatch.
RationalLattice intersect(const RationalLattice& a, const RationalLattice& b);

bool contains(const RationalLattice& sup, const RationalLattice& sub);

/// [sup : sub]. Throws DomainError when sub is not contained in sup.
std::uint64_t index_in(const RationalLattice& sub, const RationalLattice& sup);

/// Calls visit(H) for every sublattice of Z^dim of index `index`, each given
/// once by its HNF.
void for_each_hnf_of_index(std::size_t dim, std::uint64_t index, const std::function<void(const IntMatrix&)>& visit);

/// Number of HNFs of the given index (sum over diagonals of prod h_c^c).
std::uint64_t count_hnf_of_index(std::size_t dim, std::uint64_t index);

/// Sublattice of `lattice` whose coordinates (w.r.t. its basis) are rowspan(H).
RationalLattice sublattice(const RationalLattice& lattice, const IntMatrix& hnf);

/// Overlattice of `lattice` with index det(H): rowspan(H^{-T} B). Every
/// overlattice of index j arises from exactly one index-j HNF H.
RationalLattice overlattice(const RationalLattice& lattice, const IntMatrix& hnf);

/// The rank-1 subgroup (a/b) Z of Q with gcd(a, b) = 1.
class RationalCyclic {
 public:
  RationalCyclic(std::uint64_t a, std::uint64_t b);

  std::uint64_t a() const { return a_; }
  std::uint64_t b() const { return b_; }

  RationalLattice as_lattice() const;
  std::string to_string() const;

  friend auto operator<=>(const RationalCyclic&, const RationalCyclic&) = default;
  friend bool operator==(const RationalCyclic&, const RationalCyclic&) = default;

 private:
  std::uint64_t a_;
  std::uint64_t b_;
};

RationalCyclic intersect(const RationalCyclic& x, const RationalCyclic& y);
bool contains(const RationalCyclic& sup, const RationalCyclic& sub);
std::uint64_t index_in(const RationalCyclic& sub, const RationalCyclic& sup);

/// Checked int64/uint64 helpers shared with the enumeration code.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

}  // namespace growth
