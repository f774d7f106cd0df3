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

#include "growth/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "growth/errors.hpp"

namespace growth {
namespace {

constexpr int kMaxRank = 64;

void link(std::vector<std::vector<int>>& a, int i, int j, int from_i, int from_j) {
  // 1-based Bourbaki node numbers
  a[i - 1][j - 1] = from_i;
  a[j - 1][i - 1] = from_j;
}

int height(const RootVector& r) { return std::accumulate(r.begin(), r.end(), 0); }

}  // namespace

std::vector<std::vector<int>> cartan_matrix(char family, int l) {
  std::vector<std::vector<int>> a(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) a[i][i] = 2;
  switch (family) {
    case 'A':
      for (int i = 1; i < l; ++i) link(a, i, i + 1, -1, -1);
      break;
    case 'B':  // alpha_l short
      for (int i = 1; i < l - 1; ++i) link(a, i, i + 1, -1, -1);
      link(a, l - 1, l, -1, -2);
      break;
    case 'C':  // alpha_l long
      for (int i = 1; i < l - 1; ++i) link(a, i, i + 1, -1, -1);
      link(a, l - 1, l, -2, -1);
      break;
    case 'D':
      for (int i = 1; i < l - 1; ++i) link(a, i, i + 1, -1, -1);
      link(a, l - 2, l, -1, -1);
      break;
    case 'E':
      link(a, 1, 3, -1, -1);
      link(a, 2, 4, -1, -1);
      for (int i = 3; i < l; ++i) link(a, i, i + 1, -1, -1);
      break;
    case 'F':  // alpha_1, alpha_2 long
      link(a, 1, 2, -1, -1);
      link(a, 2, 3, -1, -2);
      link(a, 3, 4, -1, -1);
      break;
    case 'G':  // alpha_1 short
      link(a, 1, 2, -3, -1);
      break;
    default:
      throw DomainError(std::string("cartan_matrix: unknown family ") + family);
  }
  return a;
}

std::vector<int> weyl_degrees(char family, int l) {
  std::vector<int> d;
  switch (family) {
    case 'A':
      for (int i = 2; i <= l + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= l; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i < l; ++i) d.push_back(2 * i);
      d.push_back(l);
      break;
    case 'E':
      if (l == 6) d = {2, 5, 6, 8, 9, 12};
      if (l == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (l == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F':
      d = {2, 6, 8, 12};
      break;
    case 'G':
      d = {2, 6};
      break;
    default:
      throw DomainError(std::string("weyl_degrees: unknown family ") + family);
  }
  std::sort(d.begin(), d.end());
  return d;
}

RootSystem build_root_system(const std::string& label) {
  if (label.size() < 2 || !std::isupper(static_cast<unsigned char>(label[0])) ||
      !std::all_of(label.begin() + 1, label.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
      label.size() > 3 || label[1] == '0') {
    throw DomainError("root system label '" + label + "' is malformed");
  }
  const char family = label[0];
  const int l = std::stoi(label.substr(1));
  const bool ok = (family == 'A' && l >= 1) || ((family == 'B' || family == 'C') && l >= 2) ||
                  (family == 'D' && l >= 4) || (family == 'E' && l >= 6 && l <= 8) || (family == 'F' && l == 4) ||
                  (family == 'G' && l == 2);
  if (!ok || l > kMaxRank) throw DomainError("root system label '" + label + "' is out of range");

  RootSystem rs;
  rs.label = label;
  rs.family = family;
  rs.rank = l;
  rs.cartan = cartan_matrix(family, l);
  rs.degrees = weyl_degrees(family, l);

  // Closure by height. For a root r and simple alpha_i (r != alpha_i), the
  // alpha_i-string through r is r - p alpha_i, ..., r + q alpha_i with
  // p - q = <alpha_i^vee, r>; r + alpha_i is a root iff q > 0.
  std::set<RootVector> known;
  std::vector<RootVector> layer;
  for (int i = 0; i < l; ++i) {
    RootVector e(l, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  std::vector<RootVector> roots = layer;
  while (!layer.empty()) {
    std::set<RootVector> next;
    for (const RootVector& r : layer) {
      for (int i = 0; i < l; ++i) {
        int p = 0;
        RootVector down = r;
        while (true) {
          --down[i];
          if (!known.contains(down)) break;
          ++p;
        }
        int pair = 0;
        for (int j = 0; j < l; ++j) pair += rs.cartan[i][j] * r[j];
        const int q = p - pair;
        if (q > 0) {
          RootVector up = r;
          ++up[i];
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) known.insert(r);
    roots.insert(roots.end(), layer.begin(), layer.end());
  }
  std::stable_sort(roots.begin(), roots.end(),
                   [](const RootVector& x, const RootVector& y) { return height(x) < height(y); });
  rs.positive_roots = std::move(roots);

  const int n = static_cast<int>(rs.positive_roots.size());
  int degree_sum = 0;
  for (int d : rs.degrees) degree_sum += d - 1;
  if (static_cast<int>(rs.degrees.size()) != l || degree_sum != n) {
    throw DomainError("build_root_system(" + label + "): degree table disagrees with root closure (N = " +
                      std::to_string(n) + ", sum(d_i - 1) = " + std::to_string(degree_sum) + ")");
  }
  return rs;
}

std::uint64_t dimension(const RootSystem& rs) {
  return 2 * static_cast<std::uint64_t>(rs.num_positive_roots()) + static_cast<std::uint64_t>(rs.rank);
}

long long pairing(std::span<const long long> coweight_coeffs, const RootVector& root) {
  if (coweight_coeffs.size() != root.size()) throw DomainError("pairing: coefficient vector length does not match rank");
  long long s = 0;
  for (std::size_t b = 0; b < root.size(); ++b) s += coweight_coeffs[b] * root[b];
  return s;
}

std::vector<std::string> supported_labels(int max_rank) {
  std::vector<std::string> labels;
  for (int l = 1; l <= max_rank; ++l) labels.push_back("A" + std::to_string(l));
  for (int l = 2; l <= max_rank; ++l) labels.push_back("B" + std::to_string(l));
  for (int l = 2; l <= max_rank; ++l) labels.push_back("C" + std::to_string(l));
  for (int l = 4; l <= max_rank; ++l) labels.push_back("D" + std::to_string(l));
  for (int l = 6; l <= std::min(8, max_rank); ++l) labels.push_back("E" + std::to_string(l));
  if (max_rank >= 4) labels.push_back("F4");
  if (max_rank >= 2) labels.push_back("G2");
  return labels;
}

}  // namespace growth
