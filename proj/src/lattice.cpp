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

#include "growth/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>
#include <utility>

#include "growth/errors.hpp"

namespace growth {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("int64 overflow in lattice arithmetic");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("int64 overflow in lattice arithmetic");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("uint64 overflow in subgroup arithmetic");
  return r;
}

namespace {

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw ResourceError("int64 overflow in lattice arithmetic");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t narrow(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw ResourceError("int64 overflow in lattice arithmetic");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// row[target] -= q * row[source], over columns [from, cols)
void axpy_row(std::vector<std::int64_t>& target, const std::vector<std::int64_t>& source, std::int64_t q,
              std::size_t from) {
  for (std::size_t c = from; c < target.size(); ++c) {
    target[c] = narrow(static_cast<__int128>(target[c]) - static_cast<__int128>(q) * source[c]);
  }
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw DomainError("IntMatrix: data size does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("IntMatrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("IntMatrix: shape mismatch in product");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      __int128 acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += static_cast<__int128>(a(i, k)) * b(k, j);
      out(i, j) = narrow(acc);
    }
  }
  return out;
}

IntMatrix hermite_normal_form(const IntMatrix& generators) {
  const std::size_t d = generators.cols();
  if (generators.rows() < d) throw DomainError("hermite_normal_form: fewer generators than dimension");
  auto rows = generators.to_rows();
  for (std::size_t c = 0; c < d; ++c) {
    while (true) {
      std::size_t pivot = rows.size();
      for (std::size_t r = c; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        if (pivot == rows.size() || std::llabs(rows[r][c]) < std::llabs(rows[pivot][c])) pivot = r;
      }
      if (pivot == rows.size()) throw DomainError("hermite_normal_form: generators are rank deficient");
      std::swap(rows[c], rows[pivot]);
      bool cleared = true;
      for (std::size_t r = c + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        axpy_row(rows[r], rows[c], rows[r][c] / rows[c][c], c);
        if (rows[r][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (rows[c][c] < 0) {
      for (std::size_t k = c; k < d; ++k) rows[c][k] = -rows[c][k];
    }
  }
  rows.resize(d);
  for (std::size_t c = 1; c < d; ++c) {
    for (std::size_t i = 0; i < c; ++i) {
      const std::int64_t q = floor_div(rows[i][c], rows[c][c]);
      if (q != 0) axpy_row(rows[i], rows[c], q, c);
    }
  }
  return IntMatrix::from_rows(rows);
}

BigInt triangular_determinant(const IntMatrix& upper) {
  BigInt det = 1;
  for (std::size_t i = 0; i < upper.rows(); ++i) det *= upper(i, i);
  return det;
}

IntMatrix triangular_adjugate(const IntMatrix& upper) {
  const std::size_t d = upper.rows();
  const std::int64_t det = narrow(triangular_determinant(upper));
  if (det == 0) throw DomainError("triangular_adjugate: singular matrix");
  IntMatrix adj(d, d);
  // Solve upper * x = det * e_j by back substitution; every x_i is an
  // entry of adj(upper), hence the divisions are exact.
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t ii = d; ii-- > 0;) {
      __int128 acc = (ii == j) ? det : 0;
      for (std::size_t k = ii + 1; k < d; ++k) acc -= static_cast<__int128>(upper(ii, k)) * adj(k, j);
      adj(ii, j) = narrow(acc / upper(ii, ii));
    }
  }
  return adj;
}

RationalLattice::RationalLattice(std::int64_t denom, const IntMatrix& generators) {
  if (denom < 1) throw DomainError("RationalLattice: denominator must be positive");
  if (generators.cols() == 0) throw DomainError("RationalLattice: dimension must be positive");
  basis_ = hermite_normal_form(generators);
  std::int64_t g = denom;
  for (std::int64_t v : basis_.data()) g = std::gcd(g, v);
  denom_ = denom / g;
  if (g != 1) {
    std::vector<std::int64_t> scaled = basis_.data();
    for (auto& v : scaled) v /= g;
    basis_ = IntMatrix(basis_.rows(), basis_.cols(), std::move(scaled));
  }
}

RationalLattice RationalLattice::standard(std::size_t dim) { return RationalLattice(1, IntMatrix::identity(dim)); }

RationalLattice RationalLattice::scaled(std::size_t dim, std::int64_t num, std::int64_t den) {
  if (num < 1) throw DomainError("RationalLattice::scaled: numerator must be positive");
  IntMatrix m = IntMatrix::identity(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = num;
  return RationalLattice(den, m);
}

std::string RationalLattice::to_string() const {
  std::ostringstream out;
  out << "(1/" << denom_ << ")[";
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    out << (r ? ";" : "");
    for (std::size_t c = 0; c < basis_.cols(); ++c) out << (c ? " " : "") << basis_(r, c);
  }
  out << ']';
  return out.str();
}

namespace {

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) { return checked_mul(a / std::gcd(a, b), b); }

IntMatrix scale(const IntMatrix& m, std::int64_t factor) {
  std::vector<std::int64_t> data = m.data();
  for (auto& v : data) v = checked_mul(v, factor);
  return IntMatrix(m.rows(), m.cols(), std::move(data));
}

void require_same_dim(const RationalLattice& a, const RationalLattice& b, const char* op) {
  if (a.dim() != b.dim()) throw DomainError(std::string(op) + ": dimension mismatch");
}

}  // namespace

RationalLattice lattice_sum(const RationalLattice& a, const RationalLattice& b) {
  require_same_dim(a, b, "lattice_sum");
  const std::int64_t q = lcm_checked(a.denom(), b.denom());
  const IntMatrix sa = scale(a.basis(), q / a.denom());
  const IntMatrix sb = scale(b.basis(), q / b.denom());
  std::vector<std::int64_t> stacked = sa.data();
  stacked.insert(stacked.end(), sb.data().begin(), sb.data().end());
  return RationalLattice(q, IntMatrix(2 * a.dim(), a.dim(), std::move(stacked)));
}

RationalLattice dual(const RationalLattice& lattice) {
  // L = (1/q) rowspan(H)  =>  L* = rowspan(q H^{-T}) = (1/det) rowspan(q adj(H)^T)
  const std::int64_t det = narrow(lattice.determinant());
  return RationalLattice(det, scale(triangular_adjugate(lattice.basis()).transpose(), lattice.denom()));
}

RationalLattice intersect(const RationalLattice& a, const RationalLattice& b) {
  require_same_dim(a, b, "intersect");
  if (a == b) return a;
  return dual(lattice_sum(dual(a), dual(b)));
}

bool contains(const RationalLattice& sup, const RationalLattice& sub) {
  require_same_dim(sup, sub, "contains");
  return lattice_sum(sup, sub) == sup;
}

std::uint64_t index_in(const RationalLattice& sub, const RationalLattice& sup) {
  if (!contains(sup, sub)) throw DomainError("index_in: " + sub.to_string() + " is not contained in " + sup.to_string());
  const auto d = static_cast<std::uint64_t>(sup.dim());
  const BigInt num = sub.determinant() * ipow(BigInt(sup.denom()), d);
  const BigInt den = sup.determinant() * ipow(BigInt(sub.denom()), d);
  if (num % den != 0) throw DomainError("index_in: non-integral index (internal inconsistency)");
  const BigInt index = num / den;
  if (index > std::numeric_limits<std::uint64_t>::max()) throw ResourceError("index_in: index exceeds 64 bits");
  return static_cast<std::uint64_t>(index);
}

namespace {

void diagonals(std::size_t dim, std::uint64_t remaining, std::vector<std::int64_t>& diag,
               const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  if (diag.size() + 1 == dim) {
    diag.push_back(static_cast<std::int64_t>(remaining));
    visit(diag);
    diag.pop_back();
    return;
  }
  for (std::uint64_t h = 1; h <= remaining; ++h) {
    if (remaining % h != 0) continue;
    diag.push_back(static_cast<std::int64_t>(h));
    diagonals(dim, remaining / h, diag, visit);
    diag.pop_back();
  }
}

void off_diagonals(IntMatrix& h, std::size_t slot, const std::vector<std::pair<std::size_t, std::size_t>>& slots,
                   const std::function<void(const IntMatrix&)>& visit) {
  if (slot == slots.size()) {
    visit(h);
    return;
  }
  const auto [r, c] = slots[slot];
  for (std::int64_t v = 0; v < h(c, c); ++v) {
    h(r, c) = v;
    off_diagonals(h, slot + 1, slots, visit);
  }
  h(r, c) = 0;
}

}  // namespace

void for_each_hnf_of_index(std::size_t dim, std::uint64_t index, const std::function<void(const IntMatrix&)>& visit) {
  if (dim == 0 || index == 0) throw DomainError("for_each_hnf_of_index: dim and index must be positive");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t c = 1; c < dim; ++c) {
    for (std::size_t r = 0; r < c; ++r) slots.emplace_back(r, c);
  }
  std::vector<std::int64_t> diag;
  diagonals(dim, index, diag, [&](const std::vector<std::int64_t>& dg) {
    IntMatrix h(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) h(i, i) = dg[i];
    off_diagonals(h, 0, slots, visit);
  });
}

std::uint64_t count_hnf_of_index(std::size_t dim, std::uint64_t index) {
  if (dim == 0 || index == 0) throw DomainError("count_hnf_of_index: dim and index must be positive");
  std::uint64_t total = 0;
  std::vector<std::int64_t> diag;
  diagonals(dim, index, diag, [&](const std::vector<std::int64_t>& dg) {
    std::uint64_t term = 1;
    for (std::size_t c = 0; c < dim; ++c) {
      for (std::size_t r = 0; r < c; ++r) term = checked_mul(term, static_cast<std::uint64_t>(dg[c]));
    }
    total += term;
  });
  return total;
}

RationalLattice sublattice(const RationalLattice& lattice, const IntMatrix& hnf) {
  return RationalLattice(lattice.denom(), hnf * lattice.basis());
}

RationalLattice overlattice(const RationalLattice& lattice, const IntMatrix& hnf) {
  const std::int64_t j = narrow(triangular_determinant(hnf));
  return RationalLattice(checked_mul(lattice.denom(), j), triangular_adjugate(hnf).transpose() * lattice.basis());
}

RationalCyclic::RationalCyclic(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw DomainError("RationalCyclic: numerator and denominator must be positive");
  const std::uint64_t g = std::gcd(a, b);
  a_ = a / g;
  b_ = b / g;
}

RationalLattice RationalCyclic::as_lattice() const {
  if (a_ > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) ||
      b_ > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw ResourceError("RationalCyclic::as_lattice: value exceeds int64");
  }
  return RationalLattice(static_cast<std::int64_t>(b_), IntMatrix(1, 1, {static_cast<std::int64_t>(a_)}));
}

std::string RationalCyclic::to_string() const {
  return b_ == 1 ? std::to_string(a_) + "Z" : "(" + std::to_string(a_) + "/" + std::to_string(b_) + ")Z";
}

RationalCyclic intersect(const RationalCyclic& x, const RationalCyclic& y) {
  // lcm of reduced fractions: lcm(numerators) / gcd(denominators)
  const std::uint64_t num = checked_mul(x.a() / std::gcd(x.a(), y.a()), y.a());
  return RationalCyclic(num, std::gcd(x.b(), y.b()));
}

bool contains(const RationalCyclic& sup, const RationalCyclic& sub) {
  return sub.a() % sup.a() == 0 && sup.b() % sub.b() == 0;
}

std::uint64_t index_in(const RationalCyclic& sub, const RationalCyclic& sup) {
  if (!contains(sup, sub)) throw DomainError("index_in: " + sub.to_string() + " is not contained in " + sup.to_string());
  return checked_mul(sub.a() / sup.a(), sup.b() / sub.b());
}

}  // namespace growth
