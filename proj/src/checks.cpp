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

#include "growth/checks.hpp"

#include <algorithm>
#include <span>

#include "growth/comgraph.hpp"

namespace growth {

void PropertyTally::record(bool ok, const std::string& detail) {
  ++checked;
  if (ok) return;
  if (failed++ == 0) first_failure = detail;
}

bool SuiteResult::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyTally& t) { return t.failed == 0; });
}

namespace {

template <class Int>
Int uniform(Rng& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

template <SubgroupFamily G, class Draw, class Chain>
void metric_properties(const std::string& family, std::size_t samples, Rng& rng, Draw draw, Chain chain,
                       SuiteResult& result) {
  PropertyTally symmetry{family + "/symmetry"};
  PropertyTally identity{family + "/identity"};
  PropertyTally triangle{family + "/triangle"};
  PropertyTally geodesics{family + "/geodesic"};
  PropertyTally chains{family + "/chain"};
  for (std::size_t s = 0; s < samples; ++s) {
    const G h = draw(rng);
    const G k = draw(rng);
    const G l = draw(rng);
    const std::string where = h.to_string() + ", " + k.to_string() + ", " + l.to_string();

    const CommIndex hk = comm_index(h, k);
    const CommIndex kh = comm_index(k, h);
    symmetry.record(hk.value == kh.value && hk.left_index == kh.right_index && distance(h, k) == distance(k, h),
                    where);

    identity.record(comm_index(h, h).value == 1 && distance(h, h) == 0.0 && ((hk.value == 1) == (h == k)), where);

    const BigInt via = BigInt(comm_index(h, l).value) * comm_index(l, k).value;
    triangle.record(BigInt(hk.value) <= via, where);

    geodesics.record(geodesic(h, k).length == hk.value, where);

    const std::vector<G> nested = chain(rng, h, uniform<std::size_t>(rng, 1, 5));
    chains.record(chain_length(std::span<const G>(nested)) == comm_index(nested.front(), nested.back()).value,
                  nested.front().to_string() + " .. " + nested.back().to_string());
  }
  for (auto* t : {&symmetry, &identity, &triangle, &geodesics, &chains}) result.properties.push_back(*t);
}

}  // namespace

RationalCyclic random_cyclic(Rng& rng, std::uint64_t max_entry) {
  return RationalCyclic(uniform<std::uint64_t>(rng, 1, max_entry), uniform<std::uint64_t>(rng, 1, max_entry));
}

RationalLattice random_lattice(Rng& rng, std::size_t dim, std::int64_t max_entry, std::int64_t max_denom) {
  while (true) {
    IntMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = uniform<std::int64_t>(rng, -max_entry, max_entry);
    }
    try {
      return RationalLattice(uniform<std::int64_t>(rng, 1, max_denom), m);
    } catch (const DomainError&) {
      // singular draw
    }
  }
}

RationalLattice random_overlattice(Rng& rng, const RationalLattice& base, std::uint64_t max_index) {
  const std::uint64_t index = uniform<std::uint64_t>(rng, 1, max_index);
  std::vector<IntMatrix> options;
  for_each_hnf_of_index(base.dim(), index, [&](const IntMatrix& h) { options.push_back(h); });
  return overlattice(base, options[uniform<std::size_t>(rng, 0, options.size() - 1)]);
}

std::vector<RationalCyclic> random_chain(Rng& rng, const RationalCyclic& start, std::size_t length) {
  std::vector<RationalCyclic> chain{start};
  while (chain.size() < length) {
    const RationalCyclic& top = chain.back();
    // either shrink the numerator by a divisor or grow the denominator
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t t = 1; t <= top.a(); ++t) {
      if (top.a() % t == 0) divisors.push_back(t);
    }
    const std::uint64_t t = divisors[uniform<std::size_t>(rng, 0, divisors.size() - 1)];
    chain.emplace_back(top.a() / t, top.b() * uniform<std::uint64_t>(rng, 1, 3));
  }
  return chain;
}

std::vector<RationalLattice> random_chain(Rng& rng, const RationalLattice& start, std::size_t length) {
  std::vector<RationalLattice> chain{start};
  while (chain.size() < length) chain.push_back(random_overlattice(rng, chain.back()));
  return chain;
}

SuiteResult check_metric_suite(std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  SuiteResult result;
  metric_properties<RationalCyclic>(
      "cyclic", samples, rng, [](Rng& r) { return random_cyclic(r); },
      [](Rng& r, const RationalCyclic& s, std::size_t n) { return random_chain(r, s, n); }, result);
  metric_properties<RationalLattice>(
      "lattice2", samples, rng, [](Rng& r) { return random_lattice(r, 2); },
      [](Rng& r, const RationalLattice& s, std::size_t n) { return random_chain(r, s, n); }, result);
  return result;
}

SuiteResult check_transfer_suite(std::size_t cases, std::uint64_t seed, std::uint64_t max_scaled) {
  Rng rng(seed);
  PropertyTally tally{"transfer_inequality"};
  while (tally.checked < cases) {
    const std::size_t dim = uniform<std::size_t>(rng, 1, 2);
    const RationalLattice a = random_lattice(rng, dim, 3, 3);
    std::vector<IntMatrix> subs;
    for_each_hnf_of_index(dim, uniform<std::uint64_t>(rng, 1, 4), [&](const IntMatrix& h) { subs.push_back(h); });
    const RationalLattice b =
        random_overlattice(rng, sublattice(a, subs[uniform<std::size_t>(rng, 0, subs.size() - 1)]), 4);
    const std::uint64_t c = comm_index(a, b).value;
    if (c > max_scaled) continue;
    const std::uint64_t n = uniform<std::uint64_t>(rng, 1, max_scaled / c);
    const BoundReport report = check_transfer_inequality(a, b, n);
    tally.record(report.holds, describe(report));
  }
  return SuiteResult{{tally}};
}

}  // namespace growth
