/*
 * Copyright 2026 the sl2eps authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "sl2eps/census.hpp"

using namespace sl2eps;

TEST_CASE("nine families satisfy both sum identities at small q") {
  for (int q : {3, 5, 7, 9, 11}) {
    const std::vector<DimRow> rows = dimension_table(q);
    REQUIRE(rows.size() == 9);
    const BigInt qq = BigInt(q) * q;
    CHECK(census_weighted_sum(rows) == qq * qq * (qq - 1));
    CHECK(census_total_count(rows) == BigInt(q + 2) * (q + 2));
  }
}

TEST_CASE("instantiated values at q=3") {
  const std::vector<DimRow> rows = dimension_table(3);
  // dim: 1, q, q+1, (q+1)/2, q-1, (q-1)/2, q^2+q, q^2-q, (q^2-1)/2
  const std::int64_t dims[] = {1, 3, 4, 2, 2, 1, 12, 6, 4};
  const std::int64_t counts[] = {1, 1, 0, 2, 1, 2, 2, 4, 12};
  for (int i = 0; i < 9; ++i) {
    CHECK(rows[i].dim == dims[i]);
    CHECK(rows[i].count == counts[i]);
  }
  CHECK(census_weighted_sum(rows) == 648);
  CHECK(census_total_count(rows) == 25);
}

TEST_CASE("halving the largest family misses the group order by its weight") {
  for (int q : {3, 5, 7}) {
    const std::vector<DimRow> rows = dimension_table(q);
    const BigInt half = (BigInt(q) * q - 1) / 2;
    // 2q members of dimension (q^2-1)/2 instead of 4q.
    const BigInt variant = census_weighted_sum(rows) - 2 * q * half * half;
    const BigInt qq = BigInt(q) * q;
    CHECK(qq * qq * (qq - 1) - variant == 2 * q * half * half);
    CHECK(variant != qq * qq * (qq - 1));
  }
}

TEST_CASE("even or non-prime-power sizes are rejected") {
  CHECK_THROWS_AS(dimension_table(4), config_error);
  CHECK_THROWS_AS(dimension_table(6), config_error);
  CHECK_THROWS_AS(dimension_table(15), config_error);
  CHECK_THROWS_AS(dimension_table(1), config_error);
}

TEST_CASE("kernel orbit census over F_3") {
  const FieldCtx F = FieldCtx::create(3, 1);
  const GroupTable GF = GroupTable::build_gf(F);
  const std::vector<KernelOrbitCensusRow> rows = kernel_orbit_census(GF);

  std::vector<std::int64_t> sizes, stabs;
  for (const KernelOrbitCensusRow& r : rows) {
    sizes.push_back(r.size);
    stabs.push_back(r.stabilizer_order);
    CHECK(r.size * r.stabilizer_order == GF.order());
  }
  std::sort(sizes.begin(), sizes.end());
  std::sort(stabs.begin(), stabs.end());
  CHECK(sizes == std::vector<std::int64_t>{1, 4, 4, 6, 12});
  CHECK(stabs == std::vector<std::int64_t>{2, 4, 6, 6, 24});
}

TEST_CASE("kernel orbit census over F_5") {
  const FieldCtx F = FieldCtx::create(5, 1);
  const GroupTable GF = GroupTable::build_gf(F);
  const std::vector<KernelOrbitCensusRow> rows = kernel_orbit_census(GF);

  std::vector<std::int64_t> sizes;
  std::int64_t covered = 0;
  for (const KernelOrbitCensusRow& r : rows) {
    sizes.push_back(r.size);
    covered += r.size;
    CHECK(r.size * r.stabilizer_order == GF.order());
  }
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::int64_t>{1, 12, 12, 20, 20, 30, 30});
  CHECK(covered == 125);
}

TEST_CASE("chi stabilizer and square-class orbits at q=3,5,7") {
  for (int q : {3, 5, 7}) {
    const FieldCtx F = FieldCtx::create(q, 1);
    const GroupTable GF = GroupTable::build_gf(F);
    const ChiPsiReport r = chi_psi_report(GF);
    CHECK(r.stabilizer_order == 2 * q);
    CHECK(r.stabilizer_is_signed_unipotent);
    CHECK(r.orbits_split_by_square_class);
    CHECK(r.chi_in_square_orbit == (q - 1) / 2);
    CHECK(r.chi_in_nonsquare_orbit == (q - 1) / 2);
    CHECK(r.orbit_of_square != r.orbit_of_nonsquare);
    const std::int64_t ambient = (static_cast<std::int64_t>(q) * q - 1) / 2;
    CHECK(r.orbit_size_square == ambient);
    CHECK(r.orbit_size_nonsquare == ambient);
  }
}

TEST_CASE("prime power field works too: census at q=9") {
  const FieldCtx F = FieldCtx::create(3, 2);
  const GroupTable GF = GroupTable::build_gf(F);
  const ChiPsiReport r = chi_psi_report(GF);
  CHECK(r.stabilizer_order == 18);
  CHECK(r.chi_in_square_orbit == 4);
  CHECK(r.chi_in_nonsquare_orbit == 4);
}

TEST_CASE("degree census of the computed table matches the families") {
  const FieldCtx F = FieldCtx::create(3, 1);
  const GroupTable G2 = GroupTable::build_g2f(F);
  const CycCtx C = CycCtx::create(static_cast<int>(G2.exponent()));
  const CharacterTable t = little_group_table(G2, C);
  CHECK(matches_degree_census(dimension_table(3), t));
}
