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

#include <vector>

#include "sl2eps/realize.hpp"

using namespace sl2eps;

namespace {

struct Setup {
  FieldCtx F;
  GroupTable G2;
  CycCtx C;
  CharacterTable T;

  explicit Setup(int q)
      : F(FieldCtx::create(q, 1)),
        G2(GroupTable::build_g2f(F)),
        C(CycCtx::create(static_cast<int>(G2.exponent()))),
        T(little_group_table(G2, C)) {}
};

}  // namespace

TEST_CASE("every table row lands in its dimension-census family") {
  const Setup s(3);
  const std::vector<int> fam = classify_families(s.G2, s.T, s.C);
  REQUIRE(static_cast<int>(fam.size()) == s.T.count());

  const std::vector<DimRow> dt = dimension_table(3);
  std::vector<std::int64_t> seen(dt.size(), 0);
  for (int r = 0; r < s.T.count(); ++r) {
    const int f = fam[r];
    REQUIRE(f >= 0);
    REQUIRE(f < static_cast<int>(dt.size()));
    CHECK(s.T.irreducibles[r].degree() == dt[f].dim);
    ++seen[f];
  }
  for (std::size_t f = 0; f < dt.size(); ++f) CHECK(seen[f] == dt[f].count);
}

TEST_CASE("variety character decomposes with all invariants green") {
  const Setup s(3);
  const VarietyDecomposition d = decompose_variety_character(s.G2, s.T, s.C);

  CHECK(d.ok());
  CHECK(d.burnside_matches);
  CHECK(d.perm_matches_point_induction);
  CHECK(d.parts_match_part_induction);
  CHECK(d.stabilizer_is_named);
  CHECK(d.transfer_factors_through_quotient);
  CHECK(d.transfer_a_values_expected);
  CHECK(d.induced_sum_matches);
  CHECK(d.h0_traces_match);
  CHECK(d.isotypic_sum_matches);
  CHECK(d.large_constituents_from_transfer);
  CHECK(d.census_matches);

  CHECK(d.orbit_count == 1);  // the left action is transitive
  CHECK(d.perm.degree() == 24);

  // Multiplicity pattern at q = 3: the trivial row once, the degree-3 row
  // once, both degree-2 rows once, four degree-4 rows once, nothing else.
  BigInt total = 0;
  std::int64_t deg4_hits = 0;
  for (int r = 0; r < s.T.count(); ++r) {
    const BigInt m = d.multiplicities[r];
    const BigInt deg = s.T.irreducibles[r].degree();
    total += m * deg;
    if (m == 0) continue;
    CHECK(m == 1);
    CHECK((deg == 1 || deg == 2 || deg == 3 || deg == 4));
    if (deg == 4) {
      ++deg4_hits;
      CHECK(d.family_of[r] == 8);
    }
  }
  CHECK(total == 24);
  CHECK(deg4_hits == 4);
}

TEST_CASE("shift-character inductions realize the half-regular family") {
  const Setup s(3);
  const InducedFamilyReport r = verify_induced_family(s.G2, s.T, s.C);

  CHECK(r.ok());
  CHECK(r.dual_count == 18);  // 2 q^2
  CHECK(r.z_params.size() == 18u);
  CHECK(r.dual_all_linear);
  CHECK(r.z_params_equidistributed);
  CHECK(r.admissible_irreducible);
  CHECK(r.inadmissible_reducible);
  CHECK(r.family_realized_exactly);
  CHECK(r.square_twist_collapses);
  CHECK(r.coset_action_free);
  CHECK(r.lefschetz_matches);

  // Each additive parameter shows up for exactly 2q dual characters.
  std::vector<int> hits(3, 0);
  for (Fq a : r.z_params) ++hits[a.idx()];
  for (int h : hits) CHECK(h == 6);
}
